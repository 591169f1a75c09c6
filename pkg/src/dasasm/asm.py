"""Alternating sign matrices, the dihedral action and the symmetry classes."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .config import check_bound
from .errors import InputError


@dataclass(frozen=True)
class AsmMatrix:
    """A square matrix over {-1, 0, 1}; ``rows`` is a tuple of tuples."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        for r in rows:
            if len(r) != len(rows):
                raise InputError("matrix is not square")
            for x in r:
                if x not in (-1, 0, 1):
                    raise InputError(f"entry {x} outside {{-1, 0, 1}}")

    @classmethod
    def checked(cls, rows) -> "AsmMatrix":
        m = cls(rows)
        if not is_asm(m.rows):
            raise InputError("not an alternating sign matrix")
        return m

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    # text / JSON forms -------------------------------------------------
    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)

    @classmethod
    def from_text(cls, text: str) -> "AsmMatrix":
        rows = [line.split() for line in text.strip().splitlines() if line.strip()]
        try:
            return cls(tuple(tuple(int(x) for x in r) for r in rows))
        except ValueError:
            raise InputError("matrix text must contain integers") from None

    def to_json(self) -> str:
        return json.dumps([list(r) for r in self.rows])

    @classmethod
    def from_json(cls, text: str) -> "AsmMatrix":
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise InputError("expected a JSON array of arrays")
        return cls(tuple(tuple(r) for r in data))

    def __str__(self):
        return self.to_text()


def _line_ok(seq) -> bool:
    expect = 1
    total = 0
    for x in seq:
        if x:
            if x != expect:
                return False
            expect = -expect
            total += x
    return total == 1


def is_asm(M) -> bool:
    """True iff every row and column alternates in sign and sums to 1."""
    rows = M.rows if isinstance(M, AsmMatrix) else tuple(tuple(r) for r in M)
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise InputError("matrix is not square")
        for x in r:
            if x not in (-1, 0, 1):
                raise InputError(f"entry {x} outside {{-1, 0, 1}}")
    if n == 0:
        return False
    return all(_line_ok(r) for r in rows) and all(
        _line_ok([r[j] for r in rows]) for j in range(n)
    )


class D4(enum.Enum):
    """Elements of the dihedral group acting on square matrices.

    The value ``(swap, flip_row, flip_col)`` describes the entry map:
    ``(g.M)[i][j] = M[a][b]`` where ``(a, b)`` is ``(j, i)`` if ``swap`` else
    ``(i, j)``, followed by ``a -> N-a`` and/or ``b -> N-b``.
    """

    I = (False, False, False)
    V = (False, False, True)
    H = (False, True, False)
    D = (True, False, False)
    A = (True, True, True)
    R90 = (True, False, True)
    R180 = (False, True, True)
    R270 = (True, True, False)

    def source(self, i: int, j: int, last: int) -> tuple[int, int]:
        swap, fr, fc = self.value
        a, b = (j, i) if swap else (i, j)
        if fr:
            a = last - a
        if fc:
            b = last - b
        return a, b

    def __mul__(self, other: "D4") -> "D4":
        return d4_compose(self, other)


@lru_cache(maxsize=None)
def d4_compose(g: D4, h: D4) -> D4:
    """The element ``gh`` with ``d4_apply(gh, M) == d4_apply(g, d4_apply(h, M))``."""
    last = 2
    probe = {(i, j): 3 * i + j for i in range(3) for j in range(3)}
    # d4_apply(h, M)[x] = M[h.source(x)];  d4_apply(g, .)[y] = that at g.source(y)
    want = {y: probe[h.source(*g.source(*y, last), last)] for y in probe}
    for k in D4:
        if all(probe[k.source(*y, last)] == want[y] for y in probe):
            return k
    raise AssertionError("D4 is not closed under composition")


def d4_apply(g: D4, M: AsmMatrix) -> AsmMatrix:
    last = M.n - 1
    rows = M.rows
    out = []
    for i in range(M.n):
        row = []
        for j in range(M.n):
            a, b = g.source(i, j, last)
            row.append(rows[a][b])
        out.append(tuple(row))
    return AsmMatrix(tuple(out))


class SymmetryClass(enum.Enum):
    ASM = "ASM"
    VSASM = "VSASM"
    VHSASM = "VHSASM"
    HTSASM = "HTSASM"
    QTSASM = "QTSASM"
    DSASM = "DSASM"
    DASASM = "DASASM"
    TSASM = "TSASM"

    @property
    def subgroup(self) -> tuple:
        return _SUBGROUPS[self]

    @classmethod
    def parse(cls, name: str) -> "SymmetryClass":
        try:
            return cls[name.upper()]
        except KeyError:
            raise InputError(f"unknown symmetry class {name!r}") from None


_SUBGROUPS = {
    SymmetryClass.ASM: (D4.I,),
    SymmetryClass.VSASM: (D4.I, D4.V),
    SymmetryClass.VHSASM: (D4.I, D4.V, D4.H, D4.R180),
    SymmetryClass.HTSASM: (D4.I, D4.R180),
    SymmetryClass.QTSASM: (D4.I, D4.R90, D4.R180, D4.R270),
    SymmetryClass.DSASM: (D4.I, D4.D),
    SymmetryClass.DASASM: (D4.I, D4.D, D4.A, D4.R180),
    SymmetryClass.TSASM: tuple(D4),
}


def in_class(M: AsmMatrix, c: SymmetryClass) -> bool:
    if not isinstance(c, SymmetryClass):
        c = SymmetryClass.parse(c)
    return all(g is D4.I or d4_apply(g, M) == M for g in c.subgroup)


@lru_cache(maxsize=4096)
def _row_choices(state: tuple) -> tuple:
    """All admissible next rows given column partial sums, in lexicographic order.

    Returns pairs ``(row, new_state)``. A column with partial sum 1 may
    receive 0 or -1, a column with sum 0 may receive 0 or 1; the row itself
    must alternate starting and ending with +1.
    """
    n = len(state)
    out = []

    def rec(j, row, expect):
        if j == n:
            if expect == -1:  # last nonzero was +1
                out.append((tuple(row), tuple(s + x for s, x in zip(state, row))))
            return
        # entries in increasing order -1 < 0 < 1 gives lexicographic output
        if expect == -1 and state[j] == 1:
            row.append(-1)
            rec(j + 1, row, 1)
            row.pop()
        row.append(0)
        rec(j + 1, row, expect)
        row.pop()
        if expect == 1 and state[j] == 0:
            row.append(1)
            rec(j + 1, row, -1)
            row.pop()

    rec(0, [], 1)
    return tuple(out)


def enumerate_asm(n: int, max_n: int | None = None) -> Iterator[AsmMatrix]:
    """All n x n ASMs, each once, in lexicographic row-major order."""
    if n < 1:
        raise InputError("ASM order must be positive")
    check_bound("asm", n, max_n)
    rows: list = []

    def rec(state):
        if len(rows) == n:
            if all(s == 1 for s in state):
                yield AsmMatrix(tuple(rows))
            return
        for row, new in _row_choices(state):
            rows.append(row)
            yield from rec(new)
            rows.pop()

    yield from rec((0,) * n)


def asm_count_formula(n: int) -> int:
    """prod_{i=0}^{n-1} (3i+1)!/(n+i)!"""
    from fractions import Fraction
    from math import factorial

    value = Fraction(1)
    for i in range(n):
        value *= Fraction(factorial(3 * i + 1), factorial(n + i))
    assert value.denominator == 1
    return value.numerator


def enumerate_class(n: int, c, max_n: int | None = None) -> Iterator[AsmMatrix]:
    """Members of a symmetry class; odd-order DASASMs come from triangles."""
    if not isinstance(c, SymmetryClass):
        c = SymmetryClass.parse(c)
    if c is SymmetryClass.DASASM and n % 2 == 1:
        from .triangles import dasasm_from_triangle, enumerate_triangles

        for t in enumerate_triangles((n - 1) // 2, max_n=max_n):
            yield dasasm_from_triangle(t)
        return
    if c is SymmetryClass.ASM:
        yield from enumerate_asm(n, max_n)
        return
    for M in enumerate_asm(n, max_n):
        if in_class(M, c):
            yield M


def is_half_turn_symmetric(M: AsmMatrix) -> bool:
    rows = M.rows
    return all(rows[i] == rows[-1 - i][::-1] for i in range(len(rows)))


def htsasm_central_split(n: int, max_n: int | None = None) -> tuple[int, int]:
    """Numbers of order-n HTSASMs with central entry +1 and -1 (n odd)."""
    if n < 1 or n % 2 == 0:
        raise InputError("the central split needs an odd positive order")
    plus = minus = 0
    mid = n // 2
    for M in enumerate_asm(n, max_n):
        if is_half_turn_symmetric(M):
            if M.rows[mid][mid] == 1:
                plus += 1
            else:
                minus += 1
    return plus, minus
