"""Partition functions Z and Z_+/Z_- of the odd DASASM six-vertex model.

Two independent evaluation paths:

* ``partition_function_bruteforce`` sums the product of local weights over
  every configuration (generated from triangles);
* ``partition_function_eval`` runs a row-transfer dynamic program whose
  state is the set of vertical edges pointing down below the current row.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..config import check_bound
from ..errors import DomainError, InputError
from ..exact import LaurentPoly, RationalFunction, div, simplify
from ..triangles import LocalConfig, config_from_triangle, enumerate_triangles
from .weights import WeightContext, clearing_factor, vertex_parameter, weight, weight_cleared

SECTORS = ("all", "bottom-up", "bottom-down")
_SECTOR_ALIASES = {"plus": "bottom-up", "+": "bottom-up", "minus": "bottom-down", "-": "bottom-down"}


def normalize_sector(sector: str) -> str:
    sector = _SECTOR_ALIASES.get(sector, sector)
    if sector not in SECTORS:
        raise InputError(f"unknown sector {sector!r}; expected one of {SECTORS}")
    return sector


def symbolic_ring(n: int) -> tuple:
    return ("q",) + tuple(f"u{k}" for k in range(1, n + 2))


def _check_params(n, u):
    u = list(u)
    if len(u) != n + 1:
        raise InputError(f"expected {n + 1} spectral parameters, got {len(u)}")
    for k, x in enumerate(u, start=1):
        if x == 0:
            raise DomainError(f"u{k} must be invertible", f"u{k}")
    return u


# ---------------------------------------------------------------------------
# direct summation


def configuration_weight(C, u, ctx: WeightContext, cleared: bool = True):
    """Product of the (cleared) local weights of one configuration."""
    n = C.n
    total = 1
    for v in C.grid.vertices:
        x = vertex_parameter(n, v, u)
        c = C.local(v)
        w = weight_cleared(c, x, ctx) if cleared else weight(c, x, ctx)
        total = total * w
    return total


def partition_function_bruteforce(n, u, ctx: WeightContext, sector="all", cleared=True, max_n=None):
    """Sum over all configurations of T_n (via the triangle bijection)."""
    sector = normalize_sector(sector)
    u = _check_params(n, u)
    check_bound("triangles", n, max_n)
    total = 0
    for T in enumerate_triangles(n, max_n):
        c = T.central_entry()
        if (sector == "bottom-up" and c != 1) or (sector == "bottom-down" and c != -1):
            continue
        total = total + configuration_weight(config_from_triangle(T), u, ctx, cleared)
    return simplify(total)


# ---------------------------------------------------------------------------
# transfer dynamic program

_BULK_BY_TUPLE = {c.orientation: c for c in LocalConfig if c.vertex_type.value == "bulk"}
_LEFT_BY_TUPLE = {c.orientation: c for c in LocalConfig if c.vertex_type.value == "left"}
_RIGHT_BY_TUPLE = {c.orientation: c for c in LocalConfig if c.vertex_type.value == "right"}


def _weight_tables(n, u, ctx, cleared):
    """Per-vertex dict LocalConfig -> weight, values demoted to rationals when possible."""
    tables = {}
    cache = {}
    for i in range(1, n + 1):
        for j in range(i, 2 * n + 3 - i):
            x = vertex_parameter(n, (i, j), u)
            if j == i:
                kinds = _LEFT_BY_TUPLE.values()
            elif j == 2 * n + 2 - i:
                kinds = _RIGHT_BY_TUPLE.values()
            else:
                kinds = _BULK_BY_TUPLE.values()
            table = {}
            for c in kinds:
                key = (c, x)
                try:
                    w = cache[key]
                except (KeyError, TypeError):
                    w = weight_cleared(c, x, ctx) if cleared else weight(c, x, ctx)
                    w = simplify(w)
                    try:
                        cache[key] = w
                    except TypeError:
                        pass
                table[c] = w
            tables[(i, j)] = table
    return tables


def _transfer(n, tables, sector):
    # mask bit k <-> column i+k of the current row: 1 if the vertical edge
    # entering the row from above (or, once processed, leaving it below)
    # points down.  carry = 1 if the pending horizontal edge points right.
    states = {0: 1}
    for i in range(1, n + 1):
        width = 2 * n + 3 - 2 * i
        left = tables[(i, i)]
        cur = {}
        for mask, val in states.items():
            t_in = bool(mask & 1)
            for h in (0, 1):
                w = left[_LEFT_BY_TUPLE[(t_in, not h)]]
                if w == 0:
                    continue
                key = ((mask >> 1) << 1, h)
                prev = cur.get(key)
                term = val * w
                cur[key] = term if prev is None else prev + term
        for k in range(1, width - 1):
            bit = 1 << k
            table = tables[(i, i + k)]
            choices = {}
            for t_in in (False, True):
                for l_in in (False, True):
                    opts = []
                    for b_down in (0, 1):
                        for h in (0, 1):
                            c = _BULK_BY_TUPLE.get((l_in, not b_down, not h, t_in))
                            if c is not None and table[c] != 0:
                                opts.append((b_down, h, table[c]))
                    choices[(t_in, l_in)] = opts
            nxt = {}
            for (mask, carry), val in cur.items():
                t_in = bool(mask & bit)
                for b_down, h, w in choices[(t_in, bool(carry))]:
                    key = ((mask | bit) if b_down else (mask & ~bit), h)
                    term = val * w
                    prev = nxt.get(key)
                    nxt[key] = term if prev is None else prev + term
            cur = nxt
        right = tables[(i, 2 * n + 2 - i)]
        top = 1 << (width - 1)
        states = {}
        for (mask, carry), val in cur.items():
            w = right[_RIGHT_BY_TUPLE[(bool(carry), bool(mask & top))]]
            if w == 0:
                continue
            key = (mask & ~top) >> 1
            term = val * w
            prev = states.get(key)
            states[key] = term if prev is None else prev + term
    total = 0
    for mask, val in states.items():
        down = bool(mask & 1)
        if (sector == "bottom-up" and down) or (sector == "bottom-down" and not down):
            continue
        total = total + val
    return total


def partition_function_eval(n, u, ctx: WeightContext, sector="all", cleared=True, max_n=None):
    """Exact value of the cleared partition function (or one sector of it).

    With ``cleared=False`` the un-cleared weights are used directly, which
    requires sigma(q) and sigma(q^4) to be nonzero.
    """
    sector = normalize_sector(sector)
    if n < 0:
        raise InputError("n must be nonnegative")
    check_bound("dp", n, max_n)
    u = _check_params(n, u)
    if not cleared:
        ctx.check_nonsingular()
    return simplify(_transfer(n, _weight_tables(n, u, ctx, cleared), sector))


def partition_function_value(n, u, ctx: WeightContext, sector="all", max_n=None):
    """Un-cleared Z (or Z_+/Z_-): the cleared DP value divided by the clearing factor."""
    ctx.check_nonsingular()
    val = partition_function_eval(n, u, ctx, sector, cleared=True, max_n=max_n)
    return div(val, clearing_factor(n, ctx)) if n else val


def partition_function_pm(n, u, ctx: WeightContext, cleared=False, max_n=None):
    """(Z_+, Z_-) from the reflection u_{n+1} -> -u_{n+1}.

    Z_+/- = (Z(u) +/- (-1)^n Z(u_1, ..., -u_{n+1})) / 2.
    """
    u = _check_params(n, u)
    flipped = u[:-1] + [-u[-1]]
    f = partition_function_eval if cleared else partition_function_value
    a = f(n, u, ctx, "all", max_n=max_n)
    b = f(n, flipped, ctx, "all", max_n=max_n)
    sign = -1 if n % 2 else 1
    half = Fraction(1, 2)
    return simplify((a + sign * b) * half), simplify((a - sign * b) * half)


# ---------------------------------------------------------------------------
# symbolic form


@dataclass(frozen=True)
class ClearedPartitionFunction:
    """sigma(q)^(2n) sigma(q^4)^(n^2) Z as a Laurent polynomial in q, u_1..u_{n+1}."""

    n: int
    poly: LaurentPoly

    @property
    def variables(self):
        return self.poly.variables

    def evaluate(self, u, q):
        return simplify(self.poly.evaluate([q] + list(u)))

    def clearing_factor(self):
        q = LaurentPoly.gens(self.variables)[0]
        return clearing_factor(self.n, WeightContext(q))

    def uncleared(self) -> RationalFunction:
        return RationalFunction(self.poly, self.clearing_factor())

    def __str__(self):
        return str(self.poly)


def symbolic_point(n):
    gens = LaurentPoly.gens(symbolic_ring(n))
    return WeightContext(gens[0]), list(gens[1:])


def partition_function_symbolic(n: int, method: str = "dp", max_n=None) -> ClearedPartitionFunction:
    """The cleared partition function as an explicit Laurent polynomial.

    ``method="brute"`` sums over all configurations; ``method="dp"`` uses
    the transfer program with polynomial entries. Both give the same
    polynomial (this is tested).
    """
    check_bound("symbolic", n, max_n)
    ctx, u = symbolic_point(n)
    if method == "brute":
        val = partition_function_bruteforce(n, u, ctx, max_n=max(n, 0))
    elif method == "dp":
        val = _transfer(n, _weight_tables(n, u, ctx, True), "all")
    else:
        raise InputError(f"unknown method {method!r}")
    if not isinstance(val, LaurentPoly):
        val = LaurentPoly.constant(symbolic_ring(n), val)
    return ClearedPartitionFunction(n, val)


def sector_symbolic(n: int, sector: str, max_n=None) -> LaurentPoly:
    check_bound("symbolic", n, max_n)
    ctx, u = symbolic_point(n)
    val = _transfer(n, _weight_tables(n, u, ctx, True), normalize_sector(sector))
    if not isinstance(val, LaurentPoly):
        val = LaurentPoly.constant(symbolic_ring(n), val)
    return val
