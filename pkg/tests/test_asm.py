import pytest

from dasasm.asm import (
    D4,
    AsmMatrix,
    SymmetryClass,
    asm_count_formula,
    d4_apply,
    d4_compose,
    enumerate_asm,
    enumerate_class,
    htsasm_central_split,
    in_class,
    is_asm,
)
from dasasm.errors import InputError, ResourceError

IDENTITY3 = AsmMatrix(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
CENTER_MINUS = AsmMatrix(((0, 1, 0), (1, -1, 1), (0, 1, 0)))
ANTI3 = AsmMatrix(((0, 0, 1), (0, 1, 0), (1, 0, 0)))
EXAMPLE7 = AsmMatrix((
    (0, 0, 1, 0, 0, 0, 0),
    (0, 1, -1, 0, 1, 0, 0),
    (1, -1, 0, 1, -1, 1, 0),
    (0, 0, 1, -1, 1, 0, 0),
    (0, 1, -1, 1, 0, -1, 1),
    (0, 0, 1, 0, -1, 1, 0),
    (0, 0, 0, 0, 1, 0, 0),
))


def test_is_asm_examples():
    assert is_asm(IDENTITY3)
    assert is_asm(CENTER_MINUS)
    assert is_asm(EXAMPLE7)
    assert not is_asm([[1, 1], [1, 1]])
    assert not is_asm([[0, 1, 0], [1, 0, 0], [0, 0, 0]])


def test_matrix_rejects_bad_entries():
    with pytest.raises(InputError):
        AsmMatrix(((2,),))
    with pytest.raises(InputError):
        AsmMatrix(((1, 0),))
    with pytest.raises(InputError):
        AsmMatrix.checked(((1, 1), (1, 1)))


def test_text_and_json_round_trip():
    assert AsmMatrix.from_text(EXAMPLE7.to_text()) == EXAMPLE7
    assert AsmMatrix.from_json(EXAMPLE7.to_json()) == EXAMPLE7
    with pytest.raises(InputError):
        AsmMatrix.from_json('{"a": 1}')


def test_d4_action():
    M = EXAMPLE7
    assert d4_apply(D4.I, M) == M
    transpose = AsmMatrix(tuple(zip(*M.rows)))
    assert d4_apply(D4.D, M) == transpose
    assert d4_apply(D4.R180, d4_apply(D4.R180, M)) == M
    assert d4_apply(D4.R90, d4_apply(D4.R90, M)) == d4_apply(D4.R180, M)


def test_d4_is_a_group():
    M = AsmMatrix(((0, 1, 0, 0), (1, -1, 1, 0), (0, 1, -1, 1), (0, 0, 1, 0)))
    for g in D4:
        for h in D4:
            assert d4_apply(d4_compose(g, h), M) == d4_apply(g, d4_apply(h, M))
    for g in D4:
        assert any(d4_compose(g, h) is D4.I for h in D4)


def test_in_class_examples():
    assert in_class(IDENTITY3, SymmetryClass.DASASM)
    assert in_class(EXAMPLE7, SymmetryClass.DASASM)
    assert not in_class(IDENTITY3, SymmetryClass.VSASM)
    assert in_class(CENTER_MINUS, "tsasm")
    with pytest.raises(InputError):
        in_class(IDENTITY3, "nope")


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 7), (4, 42), (5, 429), (6, 7436)])
def test_asm_counts(n, count):
    assert sum(1 for _ in enumerate_asm(n)) == count == asm_count_formula(n)


def test_enumerate_asm_is_lexicographic_and_distinct():
    mats = [M.rows for M in enumerate_asm(4)]
    assert mats == sorted(mats)
    assert len(set(mats)) == len(mats)


def test_enumerate_asm_bound():
    with pytest.raises(ResourceError):
        next(enumerate_asm(9))
    with pytest.raises(InputError):
        next(enumerate_asm(0))


def test_order_three_classes():
    assert set(enumerate_class(3, SymmetryClass.DASASM)) == {IDENTITY3, CENTER_MINUS, ANTI3}
    assert sum(1 for _ in enumerate_class(3, SymmetryClass.HTSASM)) == 3
    assert list(enumerate_class(3, SymmetryClass.VHSASM)) == [CENTER_MINUS]


def test_order_five_classes():
    counts = {c: sum(1 for _ in enumerate_class(5, c)) for c in SymmetryClass}
    assert counts[SymmetryClass.ASM] == 429
    assert counts[SymmetryClass.VSASM] == 3
    assert counts[SymmetryClass.VHSASM] == 1
    assert counts[SymmetryClass.HTSASM] == 25
    assert counts[SymmetryClass.DASASM] == 15
    assert counts[SymmetryClass.DSASM] == 67


def test_dasasm_via_triangles_matches_filter():
    via_triangles = set(enumerate_class(5, SymmetryClass.DASASM))
    via_filter = {M for M in enumerate_asm(5) if in_class(M, SymmetryClass.DASASM)}
    assert via_triangles == via_filter


def test_htsasm_central_split():
    assert htsasm_central_split(1) == (1, 0)
    assert htsasm_central_split(3) == (2, 1)
    plus, minus = htsasm_central_split(5)
    assert 3 * minus == 2 * plus
    with pytest.raises(InputError):
        htsasm_central_split(4)
