"""Exact truncated series: ring operations, dissection and congruence helpers."""

from __future__ import annotations

from fractions import Fraction

import pytest
from sympy.utilities.iterables import partitions

from klein_sieve.errors import (
    GridMismatchError,
    NotIntegralError,
    NotInvertibleError,
    TruncationError,
)
from klein_sieve.series import (
    FracSeries,
    dissect,
    eta_power,
    invert,
    is_zero_mod,
    mul,
    parity_split,
    pochhammer_product,
    power,
    reduce_mod,
    scale_exponents,
    truncate,
    valuation,
)

from tests.factories import geometric, make_series


# ── Ring operations ───────────────────────────────────────────────


def test_add_cancels():
    """(1 + q) + (-1 + q) → 2q."""
    total = make_series([1, 1], prec=5) + make_series([-1, 1], prec=5)
    assert list(total.terms()) == [(Fraction(1), Fraction(2))]


def test_add_aligns_fractional_grids():
    """q^(-2/5) + q^(3/5) keeps both exponents on a common grid."""
    a = FracSeries.monomial(Fraction(-2, 5), prec=2)
    b = FracSeries.monomial(Fraction(3, 5), prec=2)
    total = a + b
    assert list(total.terms()) == [(Fraction(-2, 5), Fraction(1)), (Fraction(3, 5), Fraction(1))]
    assert total.precision == 2


def test_add_precision_is_minimum():
    total = make_series([1, 2, 3], prec=3) + make_series([1], prec=10)
    assert total.precision == 3


def test_mul_geometric_inverse():
    """(1 - q)(1 + q + q^2 + ...) → 1."""
    product = mul(make_series([1, -1], prec=10), geometric(10))
    assert product == FracSeries.constant(1, 10)


def test_mul_adds_offsets():
    """q^(-2/5) * q^(-3/5) → q^(-1)."""
    a = FracSeries.monomial(Fraction(-2, 5), prec=3)
    b = FracSeries.monomial(Fraction(-3, 5), prec=3)
    assert (a * b).leading_exponent == -1


def test_invert_one_minus_q():
    inv = invert(make_series([1, -1], prec=8))
    assert inv.window(0, 8) == [1] * 8


@pytest.mark.parametrize("prec", [1, 2, 3, 4, 5, 7, 8, 9, 17, 64, 129])
def test_invert_one_minus_q_every_precision(prec):
    """1 / (1 - q) to any precision → all ones, across every Newton step size."""
    inv = invert(FracSeries.from_coefficients([1, -1], prec=prec))
    assert inv.precision == prec
    assert inv.window(0, prec) == [1] * prec


def test_newton_matches_recurrence():
    """Unit-lead (Newton) and general-lead (recurrence) inverses agree on 3 * f."""
    f = make_series([1, 3, -2, 0, 5, 1, -1], prec=40)
    unit = invert(f)
    scaled = invert(f * 3)
    assert unit.window(0, 40) == [3 * c for c in scaled.window(0, 40)]


def test_pochhammer_small_truncation():
    assert pochhammer_product(1, 5, 5).coefficient(0) == 1


def test_invert_constant():
    assert invert(FracSeries.constant(2, 4)).coefficient(0) == Fraction(1, 2)


def test_invert_negates_leading_exponent():
    f = make_series([3, 1, 4], start=Fraction(-2, 5), den=5, prec=1)
    assert invert(f).leading_exponent == Fraction(2, 5)


def test_invert_round_trip_non_unit_lead():
    f = make_series([2, 3, -1, 5], prec=4)
    assert mul(f, invert(f)) == FracSeries.constant(1, 4)


def test_invert_zero_raises():
    with pytest.raises(NotInvertibleError, match="not invertible"):
        invert(FracSeries.zero(5))


def test_power_negative_matches_inverse():
    f = make_series([1, 2, -1], prec=6)
    assert power(f, -2) == mul(invert(f), invert(f))
    assert f**3 == mul(f, mul(f, f))


def test_coefficient_beyond_precision_raises():
    with pytest.raises(TruncationError):
        make_series([1, 2], prec=2).coefficient(2)


# ── Products ──────────────────────────────────────────────────────


def _restricted_partitions(n: int, p: int, i: int) -> int:
    return sum(
        1 for parts in partitions(n) if all(k % p in (i, p - i) for k in parts)
    ) if n else 1


def test_pochhammer_inverse_counts_restricted_partitions():
    """1 / (q, q^4; q^5) counts partitions into parts = +-1 (mod 5)."""
    counts = invert(pochhammer_product(1, 5, 30)).window(0, 31)
    assert counts == [_restricted_partitions(n, 5, 1) for n in range(31)]


def test_pochhammer_rejects_bad_index():
    with pytest.raises(ValueError):
        pochhammer_product(3, 5, 10)


def test_eta_power_leading_exponent():
    f = eta_power(5, 2, 20)
    assert f.leading_exponent == Fraction(10, 24)
    assert f.coefficient(Fraction(5, 12)) == 1


def test_eta_cube_is_jacobi():
    """(q; q)^3 = sum (-1)^n (2n + 1) q^(n(n+1)/2)."""
    f = eta_power(1, 3, 30)
    body = f.window(Fraction(1, 8), 31)
    expected = [0] * 31
    for n in range(8):
        e = n * (n + 1) // 2
        if e <= 30:
            expected[e] = (-1) ** n * (2 * n + 1)
    assert body == expected


# ── Dissection ────────────────────────────────────────────────────


def test_dissect_picks_residue_class():
    f = make_series(list(range(40)), prec=40)
    g = dissect(f, 5, 2)
    assert g.window(Fraction(2, 5), 8) == [5 * n + 2 for n in range(8)]


def test_dissect_zero_is_u_p():
    f = make_series(list(range(1, 21)), prec=20)
    assert dissect(f, 5, 0).window(0, 4) == [1, 6, 11, 16]


def test_dissect_precision():
    f = make_series([1] * 23, prec=23)
    assert dissect(f, 5, 3).precision == Fraction(3, 5) + 4


def test_dissect_rejects_fractional_support():
    f = FracSeries.monomial(Fraction(1, 3), prec=5)
    with pytest.raises(GridMismatchError):
        dissect(f, 5, 0)


def test_scale_exponents_divides():
    f = make_series([1, 2, 3], prec=3)
    g = scale_exponents(f, Fraction(1, 5))
    assert g.coefficient(Fraction(2, 5)) == 3
    assert g.precision == Fraction(3, 5)


def test_parity_split():
    f = make_series([1, 2, 3, 4, 5], start=Fraction(1, 10), prec=Fraction(51, 10))
    even, odd = parity_split(f, Fraction(1, 10))
    assert even.window(Fraction(1, 10), 5) == [1, 0, 3, 0, 5]
    assert odd.window(Fraction(1, 10), 5) == [0, 2, 0, 4, 0]


# ── Integrality and congruences ───────────────────────────────────


def test_reduce_mod():
    f = make_series([7, -3, 10], prec=3)
    assert reduce_mod(f, 5).window(0, 3) == [2, 2, 0]


def test_reduce_mod_non_integral_raises():
    with pytest.raises(NotIntegralError, match="not p-integral"):
        reduce_mod(make_series([Fraction(1, 2)], prec=1), 5)


def test_valuation_and_zero_mod():
    f = make_series([25, 50, 125], prec=3)
    assert valuation(f, 5) == 2
    assert is_zero_mod(f, 25)
    assert not is_zero_mod(f, 125)
    assert valuation(FracSeries.zero(3), 5) is None


def test_truncate_forgets_tail():
    f = truncate(make_series([1, 2, 3, 4], prec=4), 2)
    assert f.precision == 2
    assert list(f.terms()) == [(0, 1), (1, 2)]
