import random
from fractions import Fraction

import pytest

from dasasm.errors import DomainError, InputError, ResourceError
from dasasm.exact import LaurentPoly, RationalFunction, inverse, sigma, zeta
from dasasm.triangles import LocalConfig, config_from_triangle, enumerate_triangles
from dasasm.vertex_model import (
    WeightContext,
    clearing_factor,
    configuration_weight,
    normalize_sector,
    partition_function_bruteforce,
    partition_function_eval,
    partition_function_pm,
    partition_function_symbolic,
    partition_function_value,
    sector_symbolic,
    symbolic_ring,
    weight,
    weight_cleared,
)

from test_triangles import EXAMPLE_TRIANGLE

TABLE2 = {
    0: (1, 1, 0),
    1: (3, 2, 1),
    2: (15, 9, 6),
    3: (126, 72, 54),
    4: (1782, 990, 792),
    5: (42471, 23166, 19305),
    6: (1706562, 918918, 787644),
    7: (115640460, 61674912, 53965548),
}

Z12 = WeightContext(zeta(12))


def _symbols(n):
    gens = LaurentPoly.gens(symbolic_ring(n))
    return gens[0], list(gens[1:])


def test_weights_cleared_and_uncleared():
    q, u = Fraction(3), Fraction(5, 2)
    ctx = WeightContext(q)
    assert weight_cleared(LocalConfig.B1, u, ctx) == sigma(q**2 * u)
    assert weight_cleared(LocalConfig.B4, u, ctx) == sigma(q**2 / u)
    assert weight_cleared(LocalConfig.B6, u, ctx) == sigma(q**4)
    assert weight(LocalConfig.B5, u, ctx) == 1
    assert weight(LocalConfig.B2, u, ctx) == sigma(q**2 * u) / sigma(q**4)
    assert weight(LocalConfig.L1, u, ctx) == sigma(q * u) / sigma(q)
    assert weight(LocalConfig.L3, u, ctx) == 1
    assert weight(LocalConfig.R2, u, ctx) == sigma(q / u) / sigma(q)
    assert weight(LocalConfig.TOP, u, ctx) == 1


def test_singular_q_needs_cleared_weights():
    ctx = WeightContext(zeta(8))
    with pytest.raises(DomainError):
        ctx.check_nonsingular()
    with pytest.raises(DomainError):
        partition_function_value(1, [1, 1], ctx)
    assert partition_function_eval(1, [2, 3], ctx) is not None


def test_order_zero_is_one():
    assert partition_function_eval(0, [Fraction(7)], WeightContext(Fraction(2))) == 1
    assert partition_function_symbolic(0).poly == 1


def test_order_one_symbolic_matches_closed_form():
    q, (u1, u2) = _symbols(1)
    expected = (
        sigma(q**2 * inverse(u1) * inverse(u2)) * sigma(q * inverse(u1)) * sigma(q)
        + sigma(q * u1) * sigma(q * inverse(u1)) * sigma(q**4)
        + sigma(q * u1) * sigma(q**2 * u1 * u2) * sigma(q)
    )
    Z = partition_function_symbolic(1)
    assert Z.poly == expected
    assert partition_function_symbolic(1, method="brute").poly == expected
    assert Z.clearing_factor() == sigma(q) ** 2 * sigma(q**4)
    assert isinstance(Z.uncleared(), RationalFunction)


def test_example_configuration_term():
    q, (u1, u2, u3, u4) = _symbols(3)
    iv = inverse
    numerator = (
        sigma(q * u1) * sigma(q**2 * u1 * u2) * sigma(q**2 * iv(u1) * iv(u4)) * sigma(q**2 * iv(u1) * iv(u3))
        * sigma(q**2 * iv(u1) * iv(u2)) * sigma(q * iv(u1)) * sigma(q**2 * u2 * u4) * sigma(q * iv(u2))
        * sigma(q * u3)
    )
    C = config_from_triangle(EXAMPLE_TRIANGLE)
    got = configuration_weight(C, [u1, u2, u3, u4], WeightContext(q))
    assert got == numerator * sigma(q) ** 2 * sigma(q**4) ** 4


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dp_matches_bruteforce_symbolically(n):
    assert partition_function_symbolic(n).poly == partition_function_symbolic(n, method="brute").poly


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_dp_matches_bruteforce_at_points(n):
    rng = random.Random(n)
    ctx = WeightContext(Fraction(rng.randint(2, 9), rng.randint(2, 9)) + 1)
    u = [Fraction(rng.randint(1, 30), rng.randint(1, 30)) for _ in range(n + 1)]
    for sector in ("all", "plus", "minus"):
        assert partition_function_eval(n, u, ctx, sector) == partition_function_bruteforce(n, u, ctx, sector)


@pytest.mark.parametrize("n", range(8))
def test_table2_by_dp(n):
    u = [1] * (n + 1)
    got = tuple(partition_function_value(n, u, Z12, s) for s in ("all", "bottom-up", "bottom-down"))
    assert got == TABLE2[n]


def test_pm_split_by_reflection():
    assert partition_function_pm(1, [1, 1], Z12) == (2, 1)
    assert partition_function_pm(2, [1, 1, 1], Z12) == (9, 6)
    rng = random.Random(3)
    ctx = WeightContext(Fraction(5, 3))
    u = [Fraction(rng.randint(1, 20), rng.randint(1, 20)) for _ in range(3)]
    plus, minus = partition_function_pm(2, u, ctx)
    assert plus == partition_function_value(2, u, ctx, "plus")
    assert minus == partition_function_value(2, u, ctx, "minus")


def test_sector_symbolic_sums_to_total():
    total = partition_function_symbolic(2).poly
    assert sector_symbolic(2, "plus") + sector_symbolic(2, "minus") == total


def test_clearing_factor():
    q = Fraction(2)
    assert clearing_factor(2, WeightContext(q)) == sigma(q) ** 4 * sigma(q**4) ** 4


def test_input_validation():
    with pytest.raises(InputError):
        partition_function_eval(2, [1, 1], Z12)
    with pytest.raises(InputError):
        partition_function_eval(-1, [], Z12)
    with pytest.raises(InputError):
        normalize_sector("sideways")
    with pytest.raises(ResourceError):
        partition_function_symbolic(5)
    with pytest.raises(ResourceError):
        partition_function_eval(20, [1] * 21, Z12)


def test_zero_spectral_parameter_rejected():
    with pytest.raises((DomainError, InputError)):
        partition_function_eval(1, [0, 1], Z12)


def test_weights_sum_over_enumeration_matches_dp_cyclotomic():
    u = [zeta(12, 1), 2, Fraction(1, 3)]
    brute = sum(configuration_weight(config_from_triangle(T), u, Z12) for T in enumerate_triangles(2))
    assert brute == partition_function_eval(2, u, Z12)
