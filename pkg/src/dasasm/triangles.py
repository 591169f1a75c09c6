"""Odd DASASM triangles, six-vertex configurations on the triangular grid T_n,
and the bijections between them and odd-order DASASMs.

Coordinates are 1-based as in the usual (row, column) matrix convention.
Row i of an order-n triangle holds the entries A[i][j] for j = i..2n+2-i.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .asm import AsmMatrix, SymmetryClass, in_class, is_asm
from .config import check_bound
from .errors import InputError


# ---------------------------------------------------------------------------
# triangles


@dataclass(frozen=True)
class OddDasasmTriangle:
    n: int
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if self.n < 0:
            raise InputError("triangle order must be nonnegative")
        if len(rows) != self.n + 1:
            raise InputError(f"an order-{self.n} triangle has {self.n + 1} rows")
        for i, r in enumerate(rows, start=1):
            if len(r) != 2 * self.n + 3 - 2 * i:
                raise InputError(f"row {i} has the wrong length")
            if any(x not in (-1, 0, 1) for x in r):
                raise InputError("triangle entries must lie in {-1, 0, 1}")

    def entry(self, i: int, j: int) -> int:
        """A[i][j] for 1 <= i <= n+1, i <= j <= 2n+2-i."""
        return self.rows[i - 1][j - i]

    def path(self, i: int) -> list[int]:
        """The sequence read down column i, along row i, then up column 2n+2-i."""
        n = self.n
        right = 2 * n + 2 - i
        seq = [self.entry(k, i) for k in range(1, i)]
        seq += list(self.rows[i - 1])
        seq += [self.entry(k, right) for k in range(i - 1, 0, -1)]
        return seq

    def is_valid(self) -> bool:
        from .asm import _line_ok

        return all(_line_ok(self.path(i)) for i in range(1, self.n + 2))

    def central_entry(self) -> int:
        return self.rows[-1][0]

    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)

    @classmethod
    def from_text(cls, text: str) -> "OddDasasmTriangle":
        rows = [tuple(int(x) for x in line.split()) for line in text.strip().splitlines() if line.strip()]
        if not rows:
            raise InputError("empty triangle text")
        return cls(len(rows) - 1, tuple(rows))

    def to_json(self) -> str:
        return json.dumps([list(r) for r in self.rows])

    @classmethod
    def from_json(cls, text: str) -> "OddDasasmTriangle":
        rows = json.loads(text)
        return cls(len(rows) - 1, tuple(tuple(r) for r in rows))

    def __str__(self):
        return self.to_text()


def _require_valid(T: OddDasasmTriangle):
    if not T.is_valid():
        raise InputError("not an odd DASASM triangle: a path fails the alternating-sum condition")


def triangle_from_dasasm(A: AsmMatrix) -> OddDasasmTriangle:
    if A.n % 2 == 0:
        raise InputError("odd DASASM triangles come from odd-order matrices")
    if not is_asm(A) or not in_class(A, SymmetryClass.DASASM):
        raise InputError("matrix is not a DASASM")
    n = (A.n - 1) // 2
    rows = tuple(
        tuple(A.rows[i - 1][j - 1] for j in range(i, 2 * n + 3 - i)) for i in range(1, n + 2)
    )
    return OddDasasmTriangle(n, rows)


def dasasm_from_triangle(T: OddDasasmTriangle) -> AsmMatrix:
    _require_valid(T)
    n = T.n
    size = 2 * n + 1
    last = size + 1  # 1-based reflection constant
    rows = []
    for i in range(1, size + 1):
        row = []
        for j in range(1, size + 1):
            # the orbit of (i, j) under {I, D, A, R_pi} meets the fundamental triangle
            for a, b in ((i, j), (j, i), (last - j, last - i), (last - i, last - j)):
                if a <= n + 1 and a <= b <= last - a:
                    row.append(T.entry(a, b))
                    break
            else:  # pragma: no cover - the four images always cover the square
                raise AssertionError((i, j))
        rows.append(tuple(row))
    return AsmMatrix(tuple(rows))


@lru_cache(maxsize=None)
def _triangle_rows(n: int, i: int, cols: tuple) -> tuple:
    """Admissible rows i of an order-n triangle given column partial sums.

    ``cols[k]`` is the sum of the entries above row i in column i+k
    (k = 0..2n+2-2i). Returns ``(row, new_cols)`` pairs where ``new_cols``
    drops the two end columns, which are complete after row i.
    """
    width = 2 * n + 3 - 2 * i
    out = []
    start = cols[0]
    need_total = 1 - cols[-1]
    row = []

    def rec(k, r):
        if k == width:
            if r == need_total:
                new = tuple(c + x for c, x in zip(cols[1:-1], row[1:-1]))
                out.append((tuple(row), new))
            return
        for x in (-1, 0, 1):
            if r + x in (0, 1) and cols[k] + x in (0, 1):
                row.append(x)
                rec(k + 1, r + x)
                row.pop()

    if start in (0, 1):
        if width == 1:
            # central entry: path = column down, entry, column up
            x = 1 - 2 * start
            out.append(((x,), ()))
        else:
            rec(0, start)
    return tuple(out)


def enumerate_triangles(n: int, max_n: int | None = None) -> Iterator[OddDasasmTriangle]:
    """All odd DASASM triangles of order n, each once, lexicographic by rows."""
    if n < 0:
        raise InputError("triangle order must be nonnegative")
    check_bound("triangles", n, max_n)
    rows: list = []

    def rec(i, cols):
        if i == n + 2:
            yield OddDasasmTriangle(n, tuple(rows))
            return
        for row, new in _triangle_rows(n, i, cols):
            rows.append(row)
            yield from rec(i + 1, new)
            rows.pop()

    yield from rec(1, (0,) * (2 * n + 1))


def count_triangles(n: int, max_n: int | None = None) -> tuple[int, int]:
    """(count with central entry +1, count with central entry -1) by memoized search."""
    if n < 0:
        raise InputError("triangle order must be nonnegative")
    check_bound("dp", n, max_n)

    @lru_cache(maxsize=None)
    def rec(i, cols):
        if i == n + 1:
            (row, _), = _triangle_rows(n, i, cols)
            return (1, 0) if row[0] == 1 else (0, 1)
        plus = minus = 0
        for _, new in _triangle_rows(n, i, cols):
            p, m = rec(i + 1, new)
            plus += p
            minus += m
        return plus, minus

    return rec(1, (0,) * (2 * n + 1))


def statistic_N(A) -> int:
    """Number of zeros among the first n entries of the central column."""
    T = A if isinstance(A, OddDasasmTriangle) else triangle_from_dasasm(A)
    n = T.n
    return sum(1 for k in range(1, n + 1) if T.entry(k, n + 1) == 0)


def statistic_M(A) -> int:
    """Number of zeros among A[i][j], i = 1..n, i < j < 2n+2-i."""
    T = A if isinstance(A, OddDasasmTriangle) else triangle_from_dasasm(A)
    return sum(1 for r in T.rows[:-1] for x in r[1:-1] if x == 0)


# ---------------------------------------------------------------------------
# the grid T_n and six-vertex configurations


class VertexType(enum.Enum):
    TOP = "top"
    LEFT = "left"
    BULK = "bulk"
    RIGHT = "right"
    BOTTOM = "bottom"


@dataclass(frozen=True)
class TriangularGrid:
    """The grid T_n: top vertices (0, j), rows i = 1..n, bottom vertex (n+1, n+1)."""

    n: int

    def vertex_type(self, v) -> VertexType:
        i, j = v
        n = self.n
        if i == 0:
            return VertexType.TOP
        if i == n + 1:
            return VertexType.BOTTOM
        if j == i:
            return VertexType.LEFT
        if j == 2 * n + 2 - i:
            return VertexType.RIGHT
        return VertexType.BULK

    @property
    def vertices(self) -> list:
        n = self.n
        out = [(0, j) for j in range(1, 2 * n + 2)]
        for i in range(1, n + 1):
            out.extend((i, j) for j in range(i, 2 * n + 3 - i))
        out.append((n + 1, n + 1))
        return out

    def column_depth(self, j: int) -> int:
        """Lowest row index of a vertex in column j."""
        n = self.n
        return n + 1 if j == n + 1 else min(j, 2 * n + 2 - j)

    @property
    def edges(self) -> list:
        """Edges as (first, second) with first the upper or left endpoint."""
        n = self.n
        out = []
        for j in range(1, 2 * n + 2):
            out.extend(((i - 1, j), (i, j)) for i in range(1, self.column_depth(j) + 1))
        for i in range(1, n + 1):
            out.extend(((i, j), (i, j + 1)) for j in range(i, 2 * n + 2 - i))
        return sorted(out)

    def incident(self, v) -> dict:
        """Incident edges of v keyed by side ('l', 'b', 'r', 't')."""
        i, j = v
        n = self.n
        out = {}
        if i >= 1:
            out["t"] = ((i - 1, j), (i, j))
        if i < self.column_depth(j):
            out["b"] = ((i, j), (i + 1, j))
        if 1 <= i <= n:
            if j > i:
                out["l"] = ((i, j - 1), (i, j))
            if j < 2 * n + 2 - i:
                out["r"] = ((i, j), (i, j + 1))
        return out


class LocalConfig(enum.Enum):
    """Local configurations with the orientation tuple they stand for.

    Bulk tuples are (left, bottom, right, top), left boundary (top, right),
    right boundary (left, top); True means the edge points into the vertex.
    """

    B1 = (VertexType.BULK, (True, True, False, False))
    B2 = (VertexType.BULK, (False, False, True, True))
    B3 = (VertexType.BULK, (False, True, True, False))
    B4 = (VertexType.BULK, (True, False, False, True))
    B5 = (VertexType.BULK, (True, False, True, False))
    B6 = (VertexType.BULK, (False, True, False, True))
    L1 = (VertexType.LEFT, (False, False))
    L2 = (VertexType.LEFT, (True, True))
    L3 = (VertexType.LEFT, (False, True))
    L4 = (VertexType.LEFT, (True, False))
    R1 = (VertexType.RIGHT, (False, False))
    R2 = (VertexType.RIGHT, (True, True))
    R3 = (VertexType.RIGHT, (True, False))
    R4 = (VertexType.RIGHT, (False, True))
    TOP = (VertexType.TOP, (True,))
    BOTTOM_OUT = (VertexType.BOTTOM, (False,))  # edge points up
    BOTTOM_IN = (VertexType.BOTTOM, (True,))  # edge points down

    @property
    def vertex_type(self) -> VertexType:
        return self.value[0]

    @property
    def orientation(self) -> tuple:
        return self.value[1]

    @property
    def entry(self) -> int:
        """The triangle entry this local configuration encodes."""
        return _ENTRY.get(self, 0)

    @classmethod
    def classify(cls, vertex_type: VertexType, orientation) -> "LocalConfig":
        key = (vertex_type, tuple(bool(x) for x in orientation))
        try:
            return _BY_VALUE[key]
        except KeyError:
            raise InputError(f"illegal local configuration {key}") from None


_BY_VALUE = {c.value: c for c in LocalConfig}
_ENTRY = {
    LocalConfig.B5: 1, LocalConfig.L3: 1, LocalConfig.R3: 1, LocalConfig.BOTTOM_OUT: 1,
    LocalConfig.B6: -1, LocalConfig.L4: -1, LocalConfig.R4: -1, LocalConfig.BOTTOM_IN: -1,
}

_SIDES = {
    VertexType.BULK: ("l", "b", "r", "t"),
    VertexType.LEFT: ("t", "r"),
    VertexType.RIGHT: ("l", "t"),
    VertexType.TOP: ("b",),
    VertexType.BOTTOM: ("t",),
}


@dataclass(frozen=True)
class SixVertexConfig:
    """An orientation of T_n. ``orientation[edge]`` is True when the edge
    points toward its second (lower or right) endpoint."""

    n: int
    orientation: dict

    def __post_init__(self):
        grid = TriangularGrid(self.n)
        if set(self.orientation) != set(grid.edges):
            raise InputError("orientation must cover exactly the edges of T_n")
        for j in range(1, 2 * self.n + 2):
            if self.orientation[((0, j), (1, j))]:
                raise InputError("top edges must point upwards")
        for v in grid.vertices:
            if grid.vertex_type(v) is VertexType.BULK:
                if sum(self.points_into(e, v) for e in grid.incident(v).values()) != 2:
                    raise InputError(f"six-vertex rule fails at {v}")

    @property
    def grid(self) -> TriangularGrid:
        return TriangularGrid(self.n)

    def points_into(self, edge, v) -> bool:
        toward_second = self.orientation[edge]
        return toward_second == (edge[1] == v)

    def local(self, v) -> LocalConfig:
        grid = self.grid
        vt = grid.vertex_type(v)
        inc = grid.incident(v)
        return LocalConfig.classify(vt, [self.points_into(inc[s], v) for s in _SIDES[vt]])

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.orientation.items()))))

    def __eq__(self, other):
        if not isinstance(other, SixVertexConfig):
            return NotImplemented
        return self.n == other.n and self.orientation == other.orientation

    def to_json(self) -> str:
        """List of [edge-key, bit] pairs, edges in sorted order."""
        data = [[[list(a), list(b)], int(bit)] for (a, b), bit in sorted(self.orientation.items())]
        return json.dumps({"n": self.n, "edges": data})

    @classmethod
    def from_json(cls, text: str) -> "SixVertexConfig":
        data = json.loads(text)
        orient = {(tuple(a), tuple(b)): bool(bit) for (a, b), bit in data["edges"]}
        return cls(int(data["n"]), orient)


def config_from_triangle(T: OddDasasmTriangle) -> SixVertexConfig:
    """The configuration mapped to T.

    A vertical edge above row r in column j points down iff the column
    sum of A[1..r-1][j] is 1; a horizontal edge right of (i, j) points left
    iff the full-matrix row prefix A[i][1..j] sums to 1.
    """
    _require_valid(T)
    n = T.n
    A = dasasm_from_triangle(T).rows
    orient = {}
    for (a, b) in TriangularGrid(n).edges:
        if a[1] == b[1]:  # vertical edge above row b[0]
            j = b[1]
            orient[(a, b)] = sum(A[k - 1][j - 1] for k in range(1, b[0])) == 1
        else:
            i, j = a
            orient[(a, b)] = sum(A[i - 1][k - 1] for k in range(1, j + 1)) != 1
    return SixVertexConfig(n, orient)


def triangle_from_config(C: SixVertexConfig) -> OddDasasmTriangle:
    n = C.n
    rows = []
    for i in range(1, n + 2):
        rows.append(tuple(C.local((i, j)).entry for j in range(i, 2 * n + 3 - i)))
    return OddDasasmTriangle(n, tuple(rows))


def enumerate_configs(n: int, max_n: int | None = None) -> Iterator[SixVertexConfig]:
    for T in enumerate_triangles(n, max_n):
        yield config_from_triangle(T)
