"""Closed-form determinant expressions for the odd-order DASASM partition function.

All functions take ``n``, the spectral parameters ``u = [u_1, ..., u_{n+1}]``
and ``q``, and return exact values. Removable singularities in ``u`` (for
example coincident parameters, where ``sigma(u_i/u_j)`` vanishes) are
resolved by an exact one-variable limit: each ``u_i`` is moved along
``u_i + c_i t`` with ``t`` symbolic, the expression is computed as a
rational function of ``t``, and its value at ``t = 0`` is read off from
the lowest-order terms. Singular ``q`` is never resolved this way.
"""

from __future__ import annotations

import random

from .config import check_bound
from .errors import DomainError, InputError
from .exact import LaurentPoly, RationalFunction, det_exact, div, inverse, sigma, simplify, zeta
from .reports import Report, sample_points
from .vertex_model import WeightContext, partition_function_eval, partition_function_pm, partition_function_value
from .vertex_model.partition import partition_function_symbolic


def _quot(a, b, name):
    if b == 0:
        raise DomainError(f"{name} vanishes", name)
    return div(a, b)


def _check_q(q):
    if q == 0:
        raise DomainError("q must be nonzero", "q")
    if sigma(q) == 0:
        raise DomainError("sigma(q) vanishes", "sigma(q)")
    if sigma(q**4) == 0:
        raise DomainError("sigma(q^4) vanishes", "sigma(q^4)")


def _check_u(n, u):
    if len(u) != n + 1:
        raise InputError(f"expected {n + 1} spectral parameters, got {len(u)}")
    for i, x in enumerate(u, 1):
        if x == 0:
            raise DomainError(f"u{i} must be nonzero", f"u{i}")


def _bar(x):
    return inverse(x)


def prefactor(n, u, q):
    """The common prefactor of the two-determinant formulas."""
    un1 = u[n]
    p = _quot(sigma(q**2) ** n, sigma(q) ** (2 * n) * sigma(q**4) ** (n * n), "sigma(q) sigma(q^4)")
    for i in range(n):
        ui = u[i]
        num = sigma(ui) * sigma(q * ui) * sigma(q * _bar(ui)) * sigma(q**2 * ui * un1) * sigma(q**2 * _bar(ui * un1))
        p = p * _quot(num, sigma(ui * _bar(un1)), f"sigma(u{i + 1}/u{n + 1})")
    for i in range(n):
        for j in range(i + 1, n):
            f = _quot(sigma(q**2 * u[i] * u[j]) * sigma(q**2 * _bar(u[i] * u[j])), sigma(u[i] * _bar(u[j])),
                      f"sigma(u{i + 1}/u{j + 1})")
            p = p * f * f
    return p


def matrix_entry(ui, uj, q, i=None, j=None):
    """(q^2 + q^-2 + u_i^2 + u_j^-2) / (sigma(q^2 u_i u_j) sigma(q^2 u_i^-1 u_j^-1))."""
    den = sigma(q**2 * ui * uj) * sigma(q**2 * _bar(ui * uj))
    name = "sigma(q^2*u_i*u_j)" if i is None else f"sigma(q^2*u{i}*u{j})"
    return _quot(q**2 + _bar(q**2) + ui**2 + _bar(uj**2), den, name)


def _last_row_entry(kind, un1, uj, j):
    d = uj**2 - 1
    name = f"u{j}^2 - 1"
    if kind == "full":
        return _quot(un1 - 1, d, name)
    if kind == "plus":
        return _quot(-1, d, name)
    if kind == "minus":
        return _quot(un1, d, name)
    raise InputError(f"unknown last-row kind {kind!r}")


def theorem_matrix(n, u, q, kind="full"):
    """The (n+1) x (n+1) matrix of the first determinant."""
    rows = [[matrix_entry(u[i], u[j], q, i + 1, j + 1) for j in range(n + 1)] for i in range(n)]
    rows.append([_last_row_entry(kind, u[n], u[j], j + 1) for j in range(n + 1)])
    return rows


def theorem_determinants(n, u, q, kind="full"):
    """The two determinants (at u and at 1/u) before multiplication by the prefactor."""
    ub = [_bar(x) for x in u]
    return det_exact(theorem_matrix(n, u, q, kind)), det_exact(theorem_matrix(n, ub, q, kind))


def _theorem_core(n, u, q, kind):
    d1, d2 = theorem_determinants(n, u, q, kind)
    return prefactor(n, u, q) * (d1 + d2)


def _corollary_core(n, u, q):
    p = _quot(sigma(q**2) ** n, sigma(q) ** (2 * n) * sigma(q**4) ** (n * n), "sigma(q) sigma(q^4)")
    for i in range(n):
        ui = u[i]
        p = p * sigma(q * ui) * sigma(q * _bar(ui)) * sigma(q**2 * ui) * sigma(q**2 * _bar(ui))
    for i in range(n):
        for j in range(i + 1, n):
            f = _quot(sigma(q**2 * u[i] * u[j]) * sigma(q**2 * _bar(u[i] * u[j])), sigma(u[i] * _bar(u[j])),
                      f"sigma(u{i + 1}/u{j + 1})")
            p = p * f * f
    if p == 0:
        return 0
    M = [[matrix_entry(u[i], u[j], q, i + 1, j + 1) for j in range(n)] for i in range(n)]
    return p * det_exact(M)


# ---------------------------------------------------------------------------
# exact limits along a line


def _is_numeric(x):
    return not isinstance(x, (LaurentPoly, RationalFunction))


def series_limit(f: RationalFunction):
    """Value at t = 0 of a rational function of the single variable t."""
    if not isinstance(f, RationalFunction):
        if isinstance(f, LaurentPoly):
            f = RationalFunction(f)
        else:
            return f
    num, den = f.num, f.den
    if num.is_zero():
        return 0
    (var,) = num.variables
    ln = num.degree_range(var)[0]
    ld = den.degree_range(var)[0]
    if ln < ld:
        raise DomainError("the expression has a pole at this point", "pole")
    if ln > ld:
        return 0
    return simplify(div(num.terms[(ln,)], den.terms[(ld,)]))


def limit_at(fn, u, directions=None):
    """Exact value of ``fn(u')`` as ``u'`` tends to ``u`` along a line.

    ``fn`` must accept a list of parameters and use only field operations
    and ``sigma``. The line is ``u_i + c_i t`` with distinct positive
    ``c_i``, which keeps generic relations such as ``u_i != u_j`` along
    the path.
    """
    ring = ("t",)
    t = LaurentPoly.gens(ring)[0]
    directions = directions or list(range(1, len(u) + 1))
    pts = [RationalFunction(t * c + x) for x, c in zip(u, directions)]
    return series_limit(fn(pts))


def _evaluate(core, u, limit):
    try:
        return simplify(core(u))
    except DomainError:
        if not limit or not all(_is_numeric(x) for x in u):
            raise
    return limit_at(core, u)


# ---------------------------------------------------------------------------
# public formulas


def rhs_theorem_full(n, u, q, limit=True):
    """Prefactor times the sum of the two (n+1) x (n+1) determinants.

    At ``u_{n+1} = 1`` the single-determinant closed form is used.
    """
    _check_u(n, u)
    _check_q(q)
    if n == 0:
        return 1
    if u[n] == 1:
        return rhs_corollary_u1(n, u[:n], q, limit=limit)
    return _evaluate(lambda uu: _theorem_core(n, uu, q, "full"), list(u), limit)


def rhs_corollary_u1(n, u, q, limit=True):
    """The single n x n determinant expression for u_{n+1} = 1; ``u`` is u_1..u_n."""
    u = list(u[:n]) if len(u) == n + 1 and u[n] == 1 else list(u)
    if len(u) != n:
        raise InputError(f"expected {n} spectral parameters, got {len(u)}")
    _check_u(n, u + [1])
    _check_q(q)
    if n == 0:
        return 1
    return _evaluate(lambda uu: _corollary_core(n, uu, q), u, limit)


def rhs_pm(n, u, q, limit=True):
    """The Z_+ and Z_- determinant expressions; singular at u_{n+1} = +-1."""
    _check_u(n, u)
    _check_q(q)
    if n == 0:
        return (1, 0)
    if u[n] ** 2 == 1:
        raise DomainError(f"u{n + 1}^2 - 1 vanishes; the sector determinants are singular there", f"u{n + 1}^2 - 1")
    plus = _evaluate(lambda uu: _theorem_core(n, uu, q, "plus"), list(u), limit)
    minus = _evaluate(lambda uu: _theorem_core(n, uu, q, "minus"), list(u), limit)
    return plus, minus


def cauchy_det_sides(k, a, b, x, y):
    """Both sides of the Cauchy-type determinant identity for 2k alternating rows."""
    for i in range(k):
        for j in range(k):
            if x[i] == y[j]:
                raise DomainError(f"x{i + 1} - y{j + 1} vanishes", f"x{i + 1} - y{j + 1}")
    lhs = det_exact([[div(a[i] - b[j], x[i] - y[j]) for j in range(k)] for i in range(k)])
    rows = []
    for i in range(k):
        for c, z in ((a[i], x[i]), (b[i], y[i])):
            row = []
            for p in range(k):
                row.append(z**p)
                row.append(c * z**p)
            rows.append(row)
    prod = 1
    for i in range(k):
        for j in range(k):
            prod = prod * (x[i] - y[j])
    sign = -1 if (k * (k + 1) // 2) % 2 else 1
    rhs = div(sign * det_exact(rows), prod)
    return simplify(lhs), simplify(rhs)


def cauchy_det_check(k, a, b, x, y) -> bool:
    lhs, rhs = cauchy_det_sides(k, a, b, x, y)
    return lhs == rhs


# ---------------------------------------------------------------------------
# q = exp(i pi / 4)


def ipi4_product(n, u):
    """prod (u_i + 1/u_i)(u_i u_{n+1} + 1/(u_i u_{n+1})) prod_{i<j} (u_i u_j + 1/(u_i u_j))^2."""
    out = 1
    un1 = u[n]
    for i in range(n):
        out = out * (u[i] + _bar(u[i])) * (u[i] * un1 + _bar(u[i] * un1))
        for j in range(i + 1, n):
            out = out * (u[i] * u[j] + _bar(u[i] * u[j])) ** 2
    return simplify(out)


def ipi4_sides(n, u):
    """((-i sigma(q^4))^(n^2) Z)(q = zeta8), computed from the cleared DP, and the product."""
    q = zeta(8)
    ctx = WeightContext(q)
    cleared = partition_function_eval(n, u, ctx)
    minus_i = zeta(8, 6)
    lhs = simplify(minus_i ** (n * n) * cleared / sigma(q) ** (2 * n)) if n else simplify(cleared)
    return lhs, ipi4_product(n, u)


def ipi4_minus_sector(n, u):
    """The cleared Z_- sector at q = zeta8 (expected to vanish)."""
    return simplify(partition_function_eval(n, u, WeightContext(zeta(8)), sector="bottom-down"))


# ---------------------------------------------------------------------------
# verification loops


def _rng(tag, n, seed):
    return random.Random(f"{tag}:{n}:{seed}")


def _q_ok(q):
    _check_q(q)
    return q


def verify_theorem_full(n, trials=20, seed=0) -> Report:
    """rhs_theorem_full against the transfer DP at seeded random rational points."""
    check_bound("dp", n)
    rep = Report()

    def accept(pt):
        q, u = _q_ok(pt[0]), pt[1:]
        return rhs_theorem_full(n, u, q, limit=False), partition_function_value(n, u, WeightContext(q))

    for k, (pt, (rhs, z)) in enumerate(sample_points(_rng("theorem", n, seed), n + 2, trials, accept)):
        rep.add("theorem-full", f"n={n},trial={k:03d}", rhs == z, witness={"q": pt[0], "u": pt[1:]})
    return rep


def verify_theorem_symbolic_n1() -> Report:
    """The n = 1 formula as a rational function against the three-term cleared polynomial."""
    Z = partition_function_symbolic(1)
    gens = LaurentPoly.gens(Z.variables)
    q, u = gens[0], [RationalFunction(g) for g in gens[1:]]
    rhs = _theorem_core(1, u, RationalFunction(q), "full")
    rep = Report()
    rep.add("theorem-full", "n=1,symbolic", rhs == Z.uncleared())
    return rep


def verify_pm(n, trials=20, seed=0) -> Report:
    check_bound("dp", n)
    rep = Report()

    def accept(pt):
        q, u = _q_ok(pt[0]), pt[1:]
        return rhs_pm(n, u, q, limit=False), partition_function_pm(n, u, WeightContext(q)), rhs_theorem_full(n, u, q, limit=False)

    for k, (pt, ((p, m), (zp, zm), full)) in enumerate(sample_points(_rng("pm", n, seed), n + 2, trials, accept)):
        rep.add("theorem-pm", f"n={n},trial={k:03d}", p == zp and m == zm and p + m == full,
                witness={"q": pt[0], "u": pt[1:]})
    return rep


def verify_corollary_u1(n, trials=20, seed=0) -> Report:
    check_bound("dp", n)
    rep = Report()

    def accept(pt):
        q, u = _q_ok(pt[0]), pt[1:]
        return rhs_corollary_u1(n, u, q, limit=False), partition_function_value(n, u + [1], WeightContext(q))

    for k, (pt, (rhs, z)) in enumerate(sample_points(_rng("corollary", n, seed), n + 1, trials, accept)):
        rep.add("corollary-u1", f"n={n},trial={k:03d}", rhs == z, witness={"q": pt[0], "u": pt[1:]})
    return rep


def verify_corollary_vanishing(n=2, trials=5, seed=0) -> Report:
    """Z(u_1, ..., u_n, 1) = 0 at u_1 in {q^2, -q^2, q^-2, -q^-2}."""
    rep = Report()
    rng = _rng("vanish", n, seed)

    def accept(pt):
        return _q_ok(pt[0])

    for k, (pt, q) in enumerate(sample_points(rng, n + 1, trials, accept)):
        for label, u1 in (("q^2", q**2), ("-q^2", -q**2), ("q^-2", _bar(q**2)), ("-q^-2", -_bar(q**2))):
            u = [u1] + pt[1:n]
            val = rhs_corollary_u1(n, u, q)
            dp = partition_function_value(n, u + [1], WeightContext(q))
            rep.add("corollary-vanishing", f"n={n},trial={k:03d},u1={label}", val == 0 and dp == 0,
                    witness={"q": q, "u": u})
    return rep


def verify_column_degeneracy(n, trials=5, seed=0) -> Report:
    """The first determinant vanishes when u_{n+1} = +-u_i."""
    rep = Report()

    def accept(pt):
        q = _q_ok(pt[0])
        return q

    for k, (pt, q) in enumerate(sample_points(_rng("columns", n, seed), n + 1, trials, accept)):
        for i in range(n):
            for s in (1, -1):
                u = pt[1:] + [s * pt[1 + i]]
                try:
                    d1, _ = theorem_determinants(n, u, q)
                except DomainError:
                    continue
                rep.add("column-degeneracy", f"n={n},trial={k:03d},i={i + 1},sign={s:+d}", d1 == 0)
    return rep


def verify_reciprocal(n, trials=20, seed=0) -> Report:
    rep = Report()

    def accept(pt):
        q, u = _q_ok(pt[0]), pt[1:]
        return rhs_theorem_full(n, u, q, limit=False), rhs_theorem_full(n, [_bar(x) for x in u], q, limit=False)

    for k, (pt, (a, b)) in enumerate(sample_points(_rng("recip", n, seed), n + 2, trials, accept)):
        rep.add("theorem-reciprocal", f"n={n},trial={k:03d}", a == b)
    return rep


def verify_cauchy_det(k, trials=50, seed=0) -> Report:
    rep = Report()

    def accept(pt):
        a, b, x, y = pt[:k], pt[k:2 * k], pt[2 * k:3 * k], pt[3 * k:]
        return cauchy_det_sides(k, a, b, x, y)

    for t, (pt, (lhs, rhs)) in enumerate(sample_points(_rng("cauchy-det", k, seed), 4 * k, trials, accept)):
        rep.add("cauchy-det", f"k={k},trial={t:03d}", lhs == rhs, witness=pt)
    return rep


def verify_ipi4(n, trials=20, seed=0) -> Report:
    check_bound("dp", n)
    rep = Report()

    def accept(pt):
        return ipi4_sides(n, pt), ipi4_minus_sector(n, pt)

    for k, (pt, ((lhs, rhs), minus)) in enumerate(sample_points(_rng("ipi4", n, seed), n + 1, trials, accept)):
        rep.add("ipi4", f"n={n},trial={k:03d}", lhs == rhs, witness=pt)
        rep.add("ipi4-minus-sector", f"n={n},trial={k:03d}", minus == 0, witness=pt)
    return rep
