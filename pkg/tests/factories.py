"""Exponent-vector and series factories for testing."""

from __future__ import annotations

from fractions import Fraction

from klein_sieve.models.vectors import ExponentVector
from klein_sieve.series import FracSeries


def make_vector(p: int, *a: int) -> ExponentVector:
    return ExponentVector(p, tuple(a))


def make_series(
    coeffs: list[int | Fraction],
    start: int | Fraction = 0,
    den: int = 1,
    prec: int | Fraction | None = None,
) -> FracSeries:
    """Series ``sum coeffs[k] q^(start + k/den)``, known below ``prec``."""
    return FracSeries.from_coefficients(coeffs, start=start, den=den, prec=prec)


def geometric(prec: int) -> FracSeries:
    """1 + q + q^2 + ... below q^prec."""
    return make_series([1] * prec, prec=prec)


# Vectors used across the suites.
GARVAN = (5, (4, -1, -1))  # U_5 eigenform, eigenvalue 5
TOP_FAMILY = {p: (6, 1) + (0,) * ((p - 1) // 2 - 2) + (-4,) for p in (5, 7, 11, 13)}


def make_garvan() -> ExponentVector:
    return ExponentVector(*GARVAN)


def make_top_family(p: int) -> ExponentVector:
    """(6, 1, 0, ..., 0, -4): U_p eigenform with eigenvalue p^2."""
    return ExponentVector(p, TOP_FAMILY[p])
