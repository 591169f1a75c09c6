"""Exact determinants."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from numbers import Rational

from ..errors import DomainError
from .cyclotomic import Cyclotomic
from .laurent import LaurentPoly
from .ratfunc import RationalFunction


def _is_field_entry(x) -> bool:
    return isinstance(x, (Rational, Cyclotomic, RationalFunction))


def _check_square(M):
    k = len(M)
    for row in M:
        if len(row) != k:
            raise DomainError("determinant of a non-square matrix")
    return k


def det_exact(M):
    """Determinant of a square matrix of exact scalars.

    Matrices with Laurent polynomial entries use fraction-free Bareiss
    elimination, so the result stays a Laurent polynomial. Everything else
    (rationals, cyclotomics, rational functions) uses Gaussian elimination
    with the first nonzero pivot.
    """
    k = _check_square(M)
    if k == 0:
        return 1
    flat = [x for row in M for x in row]
    if any(isinstance(x, LaurentPoly) for x in flat) and not any(
        isinstance(x, RationalFunction) for x in flat
    ):
        return _bareiss(M)
    for x in flat:
        if not (_is_field_entry(x) or isinstance(x, LaurentPoly)):
            raise DomainError(f"unsupported matrix entry type {type(x).__name__}")
    return _gauss(M)


def _gauss(M):
    k = len(M)
    A = [[Fraction(x) if isinstance(x, int) else x for x in row] for row in M]
    det = 1
    for c in range(k):
        piv = None
        for r in range(c, k):
            if A[r][c] != 0:
                piv = r
                break
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        p = A[c][c]
        det = det * p
        inv = 1 / p
        for r in range(c + 1, k):
            f = A[r][c]
            if f != 0:
                f = f * inv
                row_r, row_c = A[r], A[c]
                for j in range(c + 1, k):
                    row_r[j] = row_r[j] - f * row_c[j]
    if isinstance(det, Fraction) and det.denominator == 1:
        return det.numerator
    return det


def _bareiss(M):
    k = len(M)
    A = [list(row) for row in M]
    sign = 1
    prev = 1
    for c in range(k - 1):
        if A[c][c] == 0:
            for r in range(c + 1, k):
                if A[r][c] != 0:
                    A[c], A[r] = A[r], A[c]
                    sign = -sign
                    break
            else:
                return 0
        p = A[c][c]
        for r in range(c + 1, k):
            for j in range(c + 1, k):
                val = A[r][j] * p - A[r][c] * A[c][j]
                A[r][j] = val if prev == 1 else val / prev
            A[r][c] = 0
        prev = p
    d = A[k - 1][k - 1]
    return d if sign == 1 else -d


def det_cofactor(M):
    """Laplace expansion along the first row (test oracle; exponential time)."""
    k = _check_square(M)
    if k == 0:
        return 1
    if k == 1:
        return M[0][0]
    total = 0
    for j in range(k):
        if M[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def det_leibniz(M):
    """Sum over permutations (second independent oracle for tiny matrices)."""
    k = _check_square(M)
    total = 0
    for perm in permutations(range(k)):
        inv = sum(1 for a in range(k) for b in range(a + 1, k) if perm[a] > perm[b])
        term = 1
        for r in range(k):
            term = term * M[r][perm[r]]
        total = total - term if inv % 2 else total + term
    return total
