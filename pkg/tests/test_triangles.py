import itertools
import random

import pytest

from dasasm.asm import AsmMatrix, SymmetryClass, enumerate_class
from dasasm.errors import InputError, ResourceError
from dasasm.triangles import (
    LocalConfig,
    OddDasasmTriangle,
    SixVertexConfig,
    TriangularGrid,
    VertexType,
    config_from_triangle,
    count_triangles,
    dasasm_from_triangle,
    enumerate_configs,
    enumerate_triangles,
    statistic_M,
    statistic_N,
    triangle_from_config,
    triangle_from_dasasm,
)

from test_asm import ANTI3, CENTER_MINUS, EXAMPLE7, IDENTITY3

EXAMPLE_TRIANGLE = OddDasasmTriangle(3, (
    (0, 0, 1, 0, 0, 0, 0),
    (1, -1, 0, 1, 0),
    (0, 1, -1),
    (-1,),
))
ORDER1 = [
    OddDasasmTriangle(1, ((1, 0, 0), (1,))),
    OddDasasmTriangle(1, ((0, 1, 0), (-1,))),
    OddDasasmTriangle(1, ((0, 0, 1), (1,))),
]


def test_triangle_from_dasasm_examples():
    assert triangle_from_dasasm(EXAMPLE7) == EXAMPLE_TRIANGLE
    assert triangle_from_dasasm(AsmMatrix(((1,),))) == OddDasasmTriangle(0, ((1,),))
    assert [triangle_from_dasasm(M) for M in (IDENTITY3, CENTER_MINUS, ANTI3)] == ORDER1


def test_triangle_from_dasasm_rejects_non_dasasm():
    with pytest.raises(InputError):
        triangle_from_dasasm(AsmMatrix(((0, 1, 0), (1, 0, 0), (0, 0, 1))))
    with pytest.raises(InputError):
        triangle_from_dasasm(AsmMatrix(((1, 0), (0, 1))))


def test_dasasm_from_triangle_examples():
    assert dasasm_from_triangle(OddDasasmTriangle(0, ((1,),))) == AsmMatrix(((1,),))
    assert dasasm_from_triangle(EXAMPLE_TRIANGLE) == EXAMPLE7
    with pytest.raises(InputError):
        dasasm_from_triangle(OddDasasmTriangle(1, ((1, 1, 0), (1,))))


def test_triangle_shape_validation():
    with pytest.raises(InputError):
        OddDasasmTriangle(1, ((1, 0), (1,)))
    with pytest.raises(InputError):
        OddDasasmTriangle(1, ((1, 0, 2), (1,)))


def test_triangle_serialisation():
    T = EXAMPLE_TRIANGLE
    assert OddDasasmTriangle.from_text(T.to_text()) == T
    assert OddDasasmTriangle.from_json(T.to_json()) == T
    assert T.to_text().splitlines()[-1] == "-1"


def test_path_sequence():
    T = EXAMPLE_TRIANGLE
    assert T.path(1) == [0, 0, 1, 0, 0, 0, 0]
    assert T.path(4) == [0, 0, 1, -1, 1, 0, 0]
    assert T.is_valid()


@pytest.mark.parametrize("n", range(4))
def test_round_trips_exhaustive(n):
    seen = set()
    for T in enumerate_triangles(n):
        A = dasasm_from_triangle(T)
        assert triangle_from_dasasm(A) == T
        C = config_from_triangle(T)
        assert triangle_from_config(C) == T
        assert C not in seen
        seen.add(C)


def test_round_trips_random_order_five():
    rng = random.Random(5)
    sample = [T for T in enumerate_triangles(5) if rng.random() < 0.002]
    assert sample
    for T in sample:
        assert triangle_from_dasasm(dasasm_from_triangle(T)) == T
        assert triangle_from_config(config_from_triangle(T)) == T
        C = config_from_triangle(T)
        assert SixVertexConfig.from_json(C.to_json()) == C


@pytest.mark.parametrize("n,count", [(0, 1), (1, 3), (2, 15), (3, 126), (4, 1782), (5, 42471)])
def test_enumeration_counts(n, count):
    triangles = list(enumerate_triangles(n))
    assert len(triangles) == count
    assert sum(count_triangles(n)) == count


def test_enumeration_order_and_first_order():
    assert list(enumerate_triangles(1)) == sorted(ORDER1, key=lambda T: T.rows)
    rows = [T.rows for T in enumerate_triangles(3)]
    assert rows == sorted(rows)


def test_enumeration_matches_class_filter():
    for n in range(3):
        via_class = {triangle_from_dasasm(M) for M in enumerate_class(2 * n + 1, SymmetryClass.DASASM)}
        assert via_class == set(enumerate_triangles(n))


def test_enumeration_bound():
    with pytest.raises(ResourceError):
        next(enumerate_triangles(7))
    with pytest.raises(InputError):
        next(enumerate_triangles(-1))


def test_configs_are_distinct():
    for n in range(4):
        configs = list(enumerate_configs(n))
        assert len(set(configs)) == len(configs)


def test_statistic_N_examples_and_parity():
    assert statistic_N(EXAMPLE7) == 2
    assert statistic_N(AsmMatrix(((1,),))) == 0
    assert statistic_N(CENTER_MINUS) == 0
    for n in range(6):
        for T in enumerate_triangles(n):
            assert T.central_entry() == (-1) ** (n + statistic_N(T))


def test_statistic_M_examples():
    assert statistic_M(IDENTITY3) == 1
    assert statistic_M(CENTER_MINUS) == 0
    assert statistic_M(AsmMatrix(((1,),))) == 0
    assert statistic_M(EXAMPLE_TRIANGLE) == statistic_M(EXAMPLE7)


def test_grid_degrees():
    for n in range(4):
        grid = TriangularGrid(n)
        deg = {v: 0 for v in grid.vertices}
        for a, b in grid.edges:
            deg[a] += 1
            deg[b] += 1
        for v, d in deg.items():
            expected = {
                VertexType.TOP: 1, VertexType.BOTTOM: 1, VertexType.LEFT: 2,
                VertexType.RIGHT: 2, VertexType.BULK: 4,
            }[grid.vertex_type(v)]
            assert d == expected, (n, v)


def test_local_configurations():
    bulk = [c for c in LocalConfig if c.vertex_type is VertexType.BULK]
    assert len(bulk) == 6
    for c in bulk:
        assert sum(c.orientation) == 2
    legal = {t for t in itertools.product((False, True), repeat=4) if sum(t) == 2}
    assert {c.orientation for c in bulk} == legal
    assert LocalConfig.classify(VertexType.BULK, (1, 0, 1, 0)) is LocalConfig.B5
    with pytest.raises(InputError):
        LocalConfig.classify(VertexType.BULK, (1, 1, 1, 0))


def test_order_one_configurations():
    configs = [config_from_triangle(T) for T in ORDER1]
    assert [C.local((1, 2)) for C in configs] == [LocalConfig.B3, LocalConfig.B5, LocalConfig.B1]
    assert [C.local((1, 2)).entry for C in configs] == [0, 1, 0]
    assert [C.local((2, 2)) for C in configs] == [
        LocalConfig.BOTTOM_OUT, LocalConfig.BOTTOM_IN, LocalConfig.BOTTOM_OUT,
    ]


def test_order_zero_configuration():
    C = config_from_triangle(OddDasasmTriangle(0, ((1,),)))
    assert C.local((1, 1)) is LocalConfig.BOTTOM_OUT
    assert triangle_from_config(C) == OddDasasmTriangle(0, ((1,),))


def test_example_configuration_entries():
    C = config_from_triangle(EXAMPLE_TRIANGLE)
    for i in range(1, 5):
        for j in range(i, 9 - i):
            assert C.local((i, j)).entry == EXAMPLE_TRIANGLE.entry(i, j)


def test_six_vertex_rule_enforced():
    C = config_from_triangle(ORDER1[0])
    orient = dict(C.orientation)
    orient[((1, 2), (2, 2))] = not orient[((1, 2), (2, 2))]
    with pytest.raises(InputError):
        SixVertexConfig(1, orient)
    orient = dict(C.orientation)
    orient[((0, 1), (1, 1))] = True
    with pytest.raises(InputError):
        SixVertexConfig(1, orient)
