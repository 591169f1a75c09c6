from fractions import Fraction

import pytest

from dasasm import sym_functions as S
from dasasm.errors import DomainError, InputError, ResourceError
from dasasm.exact import LaurentPoly, zeta
from dasasm.vertex_model import WeightContext, partition_function_value

from test_vertex_model import TABLE2


def test_partition_basics():
    lam = S.Partition((3, 1, 0))
    assert lam.parts == (3, 1)
    assert lam.size == 4 and lam.length == 2
    assert lam.conjugate() == S.Partition((2, 1, 1))
    assert lam.padded(4) == (3, 1, 0, 0)
    with pytest.raises(InputError):
        S.Partition((1, 2))
    with pytest.raises(InputError):
        lam.padded(1)


def test_staircases():
    assert S.staircase(0).parts == ()
    assert S.staircase(1).parts == (1,)
    assert S.staircase(3).parts == (3, 2, 2, 1, 1)
    assert S.doubled_staircase(2).parts == (2, 2, 1, 1)


def test_partitions_in_box():
    assert sum(1 for _ in S.partitions_in_box(2, 2)) == 6
    assert sum(1 for _ in S.partitions_in_box(4, 4)) == 70


def test_ssyt_enumeration():
    tableaux = list(S.enumerate_ssyt((2, 1), 3))
    assert len(tableaux) == 8
    assert all(T.is_valid(3) for T in tableaux)
    assert len(set(tableaux)) == 8
    assert list(S.enumerate_ssyt((1, 1, 1), 2)) == []
    with pytest.raises(ResourceError):
        next(S.enumerate_ssyt((20, 10), 3))


def test_weyl_counts():
    assert S.ssyt_count_weyl((2, 1), 3) == 8
    assert S.ssyt_count_weyl((1, 1, 1), 2) == 0
    assert S.ssyt_count_weyl((), 5) == 1


def test_schur_polynomial_small():
    x1, x2 = LaurentPoly.gens(["x1", "x2"])
    assert S.schur_polynomial((1,), 2) == x1 + x2
    assert S.schur_polynomial((2,), 2) == x1**2 + x1 * x2 + x2**2
    assert S.schur_polynomial((1, 1), 2) == x1 * x2


def test_bialternant_and_tableau_sum_agree():
    x = [Fraction(2), Fraction(-3, 5), Fraction(7, 4)]
    for lam in ((2, 1), (3, 3, 1), (2, 2, 2)):
        assert S.schur_bialternant(lam, x) == S.schur_ssyt(lam, x)
    z = [zeta(12), zeta(12, 5), 3]
    assert S.schur_bialternant((2, 1), z) == S.schur_ssyt((2, 1), z)


def test_bialternant_coincident_points():
    with pytest.raises(DomainError):
        S.schur_bialternant((1,), [1, 1])
    assert S.schur((2, 1), [1, 1, 1]) == 8


def test_last_derivative():
    # d/dx s_(1)(1, x) = 1 and d/dx s_(2)(1, x) at 1 = 3
    assert S.schur_last_derivative((1,), [1]) == 1
    assert S.schur_last_derivative((2,), [1]) == 3


def test_schur_kit_small_box():
    assert S.verify_schur_kit(max_rows=3, max_cols=3, k_max=3, trials=3).ok


def test_corollary_counts():
    assert [S.schur_corollary_u1(n, [1] * n) for n in range(4)] == [1, 3, 15, 126]


@pytest.mark.parametrize("n", [1, 2])
def test_schur_theorem_matches_dp(n):
    u = [Fraction(k + 2, 2 * k + 3) for k in range(n + 1)]
    assert S.schur_theorem_rhs(n, u) == partition_function_value(n, u, WeightContext(zeta(12)))


def test_schur_theorem_singular_point():
    with pytest.raises(DomainError):
        S.schur_theorem_rhs(1, [2, -1])


@pytest.mark.parametrize("n", range(8))
def test_count_formulas_match_table(n):
    total, plus, minus = TABLE2[n]
    assert S.dasasm_count_formula(n) == total
    assert S.dasasm_pm_count_formula(n) == (plus, minus)
    assert S.dasasm_count_via_ssyt(n) == total


@pytest.mark.parametrize("n", range(5))
def test_schur_pm_at_one(n):
    assert S.schur_pm(n, [1] * (n + 1)) == TABLE2[n][1:]


def test_schur_pm_general_point():
    n = 2
    u = [Fraction(2), Fraction(3, 7), Fraction(5, 3)]
    ctx = WeightContext(zeta(12))
    got = S.schur_pm(n, u)
    assert got == (partition_function_value(n, u, ctx, "plus"), partition_function_value(n, u, ctx, "minus"))
    with pytest.raises(DomainError):
        S.schur_pm(n, [2, 3, -1])


def test_vhsasm_counts():
    assert [S.vhsasm_count(n) for n in range(1, 6)] == [1, 1, 2, 6, 33]
    with pytest.raises(InputError):
        S.vhsasm_count(0)


def test_signed_sums_two_ways():
    for n in range(1, 5):
        assert S.signed_sums_bruteforce(n) == S.signed_sums_dp(n)
    assert S.signed_sums_bruteforce(3) == (2, 4, -2)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_q3_conjecture(n):
    rep = S.conjecture_q3_check(n)
    assert {r.status for r in rep.results} == {"CONJECTURE-CONFIRMED"}


def test_q3_printed_total_sign_differs_at_odd_triangular_orders():
    for n in (1, 3):
        vals = S.conjecture_q3_values(n)
        assert vals["total"] == -vals["total_printed"]
    for n in (2, 4):
        vals = S.conjecture_q3_values(n)
        assert vals["total"] == vals["total_printed"]


def test_reciprocal_identity():
    for n in (1, 2):
        assert S.verify_reciprocal_identity(n, trials=3).ok
