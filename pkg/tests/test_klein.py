"""Klein forms, the products f_a, ell, modularity and the partition oracle."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from klein_sieve.klein import (
    check_low_coefficient_vanishing,
    coefficient_sequence,
    colored_partition_count,
    cusp_orders,
    dim_gamma1,
    dim_gamma_p_weight1,
    ell,
    ell_residue,
    is_modular,
    klein_series,
    product_series,
    proof_window,
    sturm_bound,
)
from klein_sieve.lattice.enumerate import enumerate_lattice
from klein_sieve.series import mul

from tests.factories import make_garvan, make_top_family, make_vector


# ── Invariants ────────────────────────────────────────────────────


def test_ell_of_garvan_vector():
    assert ell(make_garvan()) == 1


def test_ell_can_be_fractional():
    v = make_vector(5, 2, 1, 0)
    assert ell(v) == Fraction(13, 30)
    assert ell_residue(v) is None


def test_is_modular_garvan():
    assert is_modular(make_garvan()) == (True, 2)


def test_is_modular_rejects_eta_exponent_not_divisible_by_24():
    assert is_modular(make_vector(5, 4, 1, 1)) == (False, None)


def test_is_modular_rejects_nonpositive_a0():
    assert is_modular(make_vector(5, 0, 0, 0))[0] is False


def test_cusp_orders_of_modular_vector_are_nonnegative():
    profile = cusp_orders(make_top_family(7))
    assert profile.holomorphic
    assert set(profile.orders) == {1, 2, 3}


# ── Series ────────────────────────────────────────────────────────


def test_klein_series_leading_exponent():
    assert klein_series(5, 1, 10).leading_exponent == Fraction(-2, 5)
    assert klein_series(5, 2, 10).leading_exponent == Fraction(-3, 5)


def test_klein_product_leading_exponent():
    product = mul(klein_series(5, 1, 10), klein_series(5, 2, 10))
    assert product.leading_exponent == -1


def test_klein_series_rejects_bad_index():
    with pytest.raises(ValueError):
        klein_series(7, 4, 10)


def test_product_series_starts_at_ell():
    f = product_series(make_garvan(), 20)
    assert f.leading_exponent == 1
    assert f.coefficient(1) == 1
    assert f.precision >= 22


def test_coefficient_sequence_length():
    assert len(coefficient_sequence(make_garvan(), 15)) == 16


@pytest.mark.slow
@pytest.mark.parametrize("p,slices", [(5, (2, 4, 6, 8, 10)), (7, (4, 6)), (11, (4,))])
def test_coefficients_match_colored_partitions(p, slices):
    """P_a(n) from the series equals the signed colored-partition count for n <= 30."""
    pool = [v for a0 in slices for v in enumerate_lattice(p, a0)]
    sample = random.Random(p).sample(pool, min(25, len(pool)))
    for v in sample:
        assert coefficient_sequence(v, 30) == [colored_partition_count(v, n) for n in range(31)], v


# ── Eigen criterion ───────────────────────────────────────────────


@pytest.mark.parametrize("p", [5, 7, 13])
def test_top_family_low_coefficients_vanish(p):
    assert check_low_coefficient_vanishing(make_top_family(p))


# ── Dimensions and windows ────────────────────────────────────────


def test_dimensions():
    assert dim_gamma1(5, 2) == 3
    assert dim_gamma1(13, 2) == 13
    assert dim_gamma1(7, 1) == 3
    assert dim_gamma_p_weight1(11) == 30


def test_sturm_and_proof_window():
    assert sturm_bound(5, 2) == 4
    assert proof_window(5, 2) == 12
    assert proof_window(11, 3, ell_max=2) == sturm_bound(11, 3) + 10
