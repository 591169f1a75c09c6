"""Partitions, semistandard tableaux, Schur polynomials and product-formula counts."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterator

from .config import check_bound
from .errors import DomainError, InputError
from .exact import LaurentPoly, det_exact, div, inverse, simplify, zeta
from .reports import Report, sample_points


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers (trailing zeros dropped)."""

    parts: tuple

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts):
            raise InputError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InputError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def padded(self, k: int) -> tuple:
        if self.length > k:
            raise InputError(f"partition {self.parts} has more than {k} parts")
        return self.parts + (0,) * (k - self.length)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def _as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


def staircase(n: int) -> Partition:
    """(n, n-1, n-1, ..., 2, 2, 1, 1) of length 2n - 1; empty for n = 0."""
    if n < 0:
        raise InputError("n must be nonnegative")
    if n == 0:
        return Partition()
    parts = [n]
    for k in range(n - 1, 0, -1):
        parts += [k, k]
    return Partition(parts)


def doubled_staircase(n: int) -> Partition:
    """(n, n, n-1, n-1, ..., 1, 1) of length 2n."""
    parts = []
    for k in range(n, 0, -1):
        parts += [k, k]
    return Partition(parts)


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions with at most ``rows`` parts, each at most ``cols``."""

    def rec(prefix, maxpart):
        yield Partition(prefix)
        if len(prefix) == rows:
            return
        for p in range(min(maxpart, cols), 0, -1):
            yield from rec(prefix + [p], p)

    yield from rec([], cols)


# ---------------------------------------------------------------------------
# tableaux


@dataclass(frozen=True)
class Ssyt:
    shape: Partition
    rows: tuple

    def content(self, k: int) -> tuple:
        c = [0] * k
        for row in self.rows:
            for x in row:
                c[x - 1] += 1
        return tuple(c)

    def is_valid(self, k: int) -> bool:
        if tuple(len(r) for r in self.rows) != self.shape.parts:
            return False
        for r, row in enumerate(self.rows):
            for j, x in enumerate(row):
                if not 1 <= x <= k:
                    return False
                if j and row[j - 1] > x:
                    return False
                if r and self.rows[r - 1][j] >= x:
                    return False
        return True


def enumerate_ssyt(lam, k: int, max_size: int | None = None) -> Iterator[Ssyt]:
    """Semistandard tableaux of shape ``lam`` with entries in 1..k, each once."""
    lam = _as_partition(lam)
    check_bound("ssyt", lam.size, max_size)
    if lam.length > k:
        return
    rows: list = []

    def fill_row(r, j, above, cur):
        if j == lam[r]:
            yield tuple(cur)
            return
        lo = cur[-1] if cur else 1
        if above is not None:
            lo = max(lo, above[j] + 1)
        # leave room below: row r at column j needs entries up to k - (rows below in column j)
        below = sum(1 for p in lam.parts[r + 1:] if p > j)
        for x in range(lo, k - below + 1):
            cur.append(x)
            yield from fill_row(r, j + 1, above, cur)
            cur.pop()

    def rec(r):
        if r == lam.length:
            yield Ssyt(lam, tuple(rows))
            return
        above = rows[r - 1] if r else None
        for row in fill_row(r, 0, above, []):
            rows.append(row)
            yield from rec(r + 1)
            rows.pop()

    yield from rec(0)


def ssyt_count_weyl(lam, k: int) -> int:
    """Number of SSYT of shape lam with entries at most k, by the product formula."""
    lam = _as_partition(lam)
    if lam.length > k:
        return 0
    lp = lam.padded(k)
    num = prod(lp[i] - lp[j] - i + j for i in range(k) for j in range(i + 1, k))
    den = prod(factorial(i) for i in range(1, k))
    q, r = divmod(num, den)
    assert r == 0, "product formula must give an integer"
    return q


@lru_cache(maxsize=None)
def _content_counts(lam: Partition, k: int) -> tuple:
    counts: dict = {}
    for T in enumerate_ssyt(lam, k):
        c = T.content(k)
        counts[c] = counts.get(c, 0) + 1
    return tuple(sorted(counts.items()))


def schur_polynomial(lam, k: int) -> LaurentPoly:
    """s_lam(x_1, ..., x_k) as a polynomial, from the tableau sum."""
    lam = _as_partition(lam)
    return LaurentPoly(tuple(f"x{i}" for i in range(1, k + 1)), dict(_content_counts(lam, k)))


def schur_ssyt(lam, x) -> object:
    """Sum over tableaux of prod x_i^(#i in T); defined at any point."""
    lam = _as_partition(lam)
    k = len(x)
    if lam.length > k:
        return 0
    total = 0
    for content, mult in _content_counts(lam, k):
        term = mult
        for xi, e in zip(x, content):
            if e:
                term = term * xi**e
        total = total + term
    return simplify(total)


def schur_bialternant(lam, x) -> object:
    """det(x_i^(lam_j + k - j)) / prod_{i<j} (x_i - x_j) for pairwise distinct x."""
    lam = _as_partition(lam)
    k = len(x)
    if lam.length > k:
        return 0
    vand = 1
    for i in range(k):
        for j in range(i + 1, k):
            d = x[i] - x[j]
            if d == 0:
                raise DomainError(f"x{i + 1} = x{j + 1}: coincident points need the tableau sum", f"x{i + 1} - x{j + 1}")
            vand = vand * d
    lp = lam.padded(k)
    M = [[xi ** (lp[j] + k - 1 - j) for j in range(k)] for xi in x]
    return simplify(div(det_exact(M), vand))


def schur(lam, x):
    """Bialternant at distinct points, tableau sum otherwise."""
    try:
        return schur_bialternant(lam, x)
    except DomainError:
        return schur_ssyt(lam, x)


def schur_last_derivative(lam, x_head) -> object:
    """d/dx s_lam(x_head..., x) at x = 1, from the tableau sum with a symbolic last argument."""
    lam = _as_partition(lam)
    ring = ("x",)
    X = LaurentPoly.gens(ring)[0]
    val = schur_ssyt(lam, list(x_head) + [X])
    if not isinstance(val, LaurentPoly):
        return 0
    return simplify(val.diff("x").evaluate([1]))


# ---------------------------------------------------------------------------
# the partition function at q = exp(i pi / 6)


def _pow3(n):
    return Fraction(1, 3 ** (n * (n - 1) // 2))


def _head(n, u):
    out = []
    for i in range(n):
        s = u[i] ** 2
        out += [s, inverse(s)]
    return out


def schur_theorem_rhs(n: int, u) -> object:
    """The two-Schur-function expression for Z at q = exp(i pi/6)."""
    if len(u) != n + 1:
        raise InputError(f"expected {n + 1} spectral parameters")
    if any(x == 0 for x in u):
        raise DomainError("spectral parameters must be nonzero", "u")
    lam = staircase(n)
    un1 = u[n]
    if un1 == -1:
        raise DomainError(f"u{n + 1} + 1 vanishes", f"u{n + 1} + 1")
    ub = inverse(un1)
    head = _head(n, u)
    a = div(un1**n, un1 + 1) * schur(lam, head + [ub**2])
    b = div(ub**n, ub + 1) * schur(lam, head + [un1**2])
    return simplify(_pow3(n) * (a + b))


def schur_corollary_u1(n: int, u) -> object:
    """3^(-n(n-1)/2) s_lam(n)(u_1^2, u_1^-2, ..., u_n^2, u_n^-2, 1)."""
    u = list(u)[:n]
    if len(u) != n:
        raise InputError(f"expected {n} spectral parameters")
    return simplify(_pow3(n) * schur(staircase(n), _head(n, u) + [1]))


def schur_pm(n: int, u) -> tuple:
    """(Z_+, Z_-) at q = exp(i pi/6); u_{n+1} = 1 uses the derivative form."""
    if len(u) != n + 1:
        raise InputError(f"expected {n + 1} spectral parameters")
    lam = staircase(n)
    head = _head(n, u)
    un1 = u[n]
    c = _pow3(n)
    if un1 == 1:
        if all(x == 1 for x in head):
            # s_lam(1,...,1) = |SSYT| and k d/dx s_lam(1,...,1,x)|_1 = |lam| |SSYT|
            k = len(head) + 1
            s = ssyt_count_weyl(lam, k)
            ds = Fraction(lam.size * s, k)
        else:
            s = schur(lam, head + [1])
            ds = schur_last_derivative(lam, head)
        return simplify(c * (2 * ds - (n - 1) * s)), simplify(c * (n * s - 2 * ds))
    if un1**2 == 1:
        raise DomainError(f"u{n + 1}^2 - 1 vanishes", f"u{n + 1}^2 - 1")
    ub = inverse(un1)
    s_low = schur(lam, head + [ub**2])
    s_high = schur(lam, head + [un1**2])
    plus = div(un1**n, 1 - un1**2) * s_low + div(ub**n, 1 - ub**2) * s_high
    minus = div(un1 ** (n + 1), un1**2 - 1) * s_low + div(ub ** (n + 1), ub**2 - 1) * s_high
    return simplify(c * plus), simplify(c * minus)


# ---------------------------------------------------------------------------
# product formulas


def _ratio_int(num: int, den: int) -> int:
    q, r = divmod(num, den)
    assert r == 0, "product formula must give an integer"
    return q


def dasasm_count_formula(n: int) -> int:
    """prod_{i=0}^{n} (3i)! / (n+i)!"""
    if n < 0:
        raise InputError("n must be nonnegative")
    num = prod(factorial(3 * i) for i in range(n + 1))
    den = prod(factorial(n + i) for i in range(n + 1))
    return _ratio_int(num, den)


def dasasm_count_via_ssyt(n: int) -> int:
    """3^(-n(n-1)/2) |SSYT_lam(n)(2n+1)| from the Weyl-type product."""
    return _ratio_int(ssyt_count_weyl(staircase(n), 2 * n + 1), 3 ** (n * (n - 1) // 2))


def dasasm_pm_count_formula(n: int) -> tuple[int, int]:
    total = dasasm_count_formula(n)
    return _ratio_int((n + 1) * total, 2 * n + 1), _ratio_int(n * total, 2 * n + 1)


def vhsasm_count(n: int) -> int:
    """V_n, the number of (2n+1) x (2n+1) VHSASMs, from the closed form."""
    if n < 1:
        raise InputError("V_n is defined for n >= 1")
    a = (n - 1) // 2
    b = (3 * n - 1) // 2
    num = factorial(2 * n) * factorial(b) * prod(factorial(3 * i) for i in range(n + 1))
    den = 3**a * factorial(3 * n) * factorial(a) * prod(factorial(n + i) for i in range(n + 1))
    return _ratio_int(num, den)


def signed_sums_bruteforce(n: int) -> tuple[int, int, int]:
    """(total, plus, minus) of sum (-1)^M(A) over DASASM(2n+1), by triangle enumeration."""
    from .triangles import enumerate_triangles, statistic_M

    plus = minus = 0
    for T in enumerate_triangles(n):
        s = -1 if statistic_M(T) % 2 else 1
        if T.central_entry() == 1:
            plus += s
        else:
            minus += s
    return plus + minus, plus, minus


def signed_sums_dp(n: int) -> tuple:
    """The same sums from the transfer DP at q = exp(i pi/3), u = 1."""
    from .vertex_model import WeightContext, partition_function_value

    ctx = WeightContext(zeta(6))
    u = [1] * (n + 1)
    plus = partition_function_value(n, u, ctx, "bottom-up")
    minus = partition_function_value(n, u, ctx, "bottom-down")
    return simplify(plus + minus), plus, minus


def conjecture_q3_values(n: int) -> dict:
    """Closed forms for the signed sums at q = exp(i pi/3).

    ``total_printed`` uses the sign (-1)^(n(n-1)/2); ``total`` is the sum of
    the two sector forms, which carries (-1)^(n(n+1)/2).
    """
    V = vhsasm_count(n)
    s = -1 if (n * (n - 1) // 2) % 2 else 1
    e = -1 if n % 2 else 1
    plus = _ratio_int(s * (e - 3) * V, 2)
    minus = _ratio_int(s * (e + 3) * V, 2)
    return {"V": V, "total_printed": s * V, "total": plus + minus, "plus": plus, "minus": minus}


def conjecture_q3_check(n: int) -> Report:
    """Compare brute-force signed sums with the conjectured closed forms."""
    rep = Report()
    total, plus, minus = signed_sums_bruteforce(n)
    vals = conjecture_q3_values(n)
    witness = {
        "bruteforce": [total, plus, minus],
        "closed_form": [vals["total"], vals["plus"], vals["minus"]],
        "total_with_printed_sign": vals["total_printed"],
    }
    rep.add_conjecture("q3-conjecture", f"n={n},sectors", plus == vals["plus"] and minus == vals["minus"], witness)
    rep.add_conjecture("q3-conjecture", f"n={n},total", total == vals["total"], witness)
    return rep


# ---------------------------------------------------------------------------
# verification loops


def verify_schur_kit(max_rows: int = 4, max_cols: int = 4, k_max: int = 4, trials: int = 10, seed: int = 0) -> Report:
    """Bialternant vs tableau sum, Weyl count vs enumeration, derivative identity."""
    rep = Report()
    rng = random.Random(f"schur-kit:{seed}")
    for lam in partitions_in_box(max_rows, max_cols):
        for k in range(max(lam.length, 1), k_max + 1):
            case = f"{lam},k={k}"
            count = sum(1 for _ in enumerate_ssyt(lam, k))
            rep.add("weyl-count", case, count == ssyt_count_weyl(lam, k), witness=count)
            rep.add("ssyt-at-ones", case, schur_ssyt(lam, [1] * k) == count)
            ds = schur_last_derivative(lam, [1] * (k - 1))
            rep.add("derivative", case, k * ds == lam.size * count, witness=ds)

            def accept(pt):
                return schur_bialternant(lam, pt)

            ok = True
            for pt, val in sample_points(rng, k, trials, accept):
                if val != schur_ssyt(lam, pt):
                    ok = False
                perm = pt[:]
                rng.shuffle(perm)
                if schur_ssyt(lam, perm) != val:
                    ok = False
            rep.add("bialternant", case, ok)
    return rep


def verify_schur_point(n: int, trials: int = 20, seed: int = 0) -> Report:
    """schur_theorem_rhs against the transfer DP at q = exp(i pi/6)."""
    from .vertex_model import WeightContext, partition_function_value

    check_bound("dp", n)
    ctx = WeightContext(zeta(12))
    rep = Report()
    rng = random.Random(f"schur-point:{n}:{seed}")

    def accept(pt):
        return schur_theorem_rhs(n, pt), partition_function_value(n, pt, ctx)

    for k, (pt, (a, b)) in enumerate(sample_points(rng, n + 1, trials, accept)):
        rep.add("schur-theorem", f"n={n},trial={k:03d}", a == b, witness=pt)
    return rep


def verify_schur_pm(n: int, trials: int = 5, seed: int = 0) -> Report:
    from .vertex_model import WeightContext, partition_function_pm

    ctx = WeightContext(zeta(12))
    rep = Report()
    rng = random.Random(f"schur-pm:{n}:{seed}")

    def accept(pt):
        return schur_pm(n, pt), partition_function_pm(n, pt, ctx)

    for k, (pt, (a, b)) in enumerate(sample_points(rng, n + 1, trials, accept)):
        rep.add("schur-pm", f"n={n},trial={k:03d}", tuple(a) == tuple(b), witness=pt)
    return rep


def verify_reciprocal_identity(n: int, trials: int = 10, seed: int = 0) -> Report:
    """s_lam(n)(..., v^(-/+2)) = v^(-/+2n) s_(n,n,...,1,1)(..., v^(+/-2))."""
    rep = Report()
    rng = random.Random(f"recip:{n}:{seed}")
    lam, mu = staircase(n), doubled_staircase(n)

    def accept(pt):
        head = _head(n, pt)
        v = pt[n]
        out = []
        for sgn in (1, -1):
            lhs = schur(lam, head + [v ** (-2 * sgn)])
            rhs = v ** (-2 * n * sgn) * schur(mu, head + [v ** (2 * sgn)])
            out.append(lhs == rhs)
        return out

    for k, (pt, oks) in enumerate(sample_points(rng, n + 1, trials, accept)):
        rep.add("schur-reciprocal", f"n={n},trial={k:03d}", all(oks), witness=pt)
    return rep
