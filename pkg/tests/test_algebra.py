"""Monomial bases, U_p matrices, characteristic polynomials and Newton polygons."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest
from sympy import roots

from klein_sieve.algebra.basis import build_basis, coordinates, generator_vectors, represent
from klein_sieve.algebra.hecke import build_up_matrix, check_consistency, up_char_poly
from klein_sieve.algebra.linalg import char_poly, eigenspace, krylov_min_poly, solve_columns
from klein_sieve.algebra.poly import (
    newton_polygon_valuations,
    padic_valuation,
    recursion_alpha,
)
from klein_sieve.data import U5_WEIGHT2
from klein_sieve.errors import NotInSpanError, UnsupportedError
from klein_sieve.klein import dim_gamma1, product_to_precision
from klein_sieve.models.algebra import IntPolynomial
from klein_sieve.series import FracSeries

from tests.factories import make_garvan


# ── Linear algebra ────────────────────────────────────────────────


def test_char_poly_integer_matrix():
    """det(xI - [[1, 2], [3, 4]]) → x^2 - 5x - 2."""
    assert char_poly([[1, 2], [3, 4]]).coeffs == (-2, -5, 1)


def test_char_poly_rational_matrix():
    chi = char_poly([[Fraction(1, 2), 0], [0, Fraction(1, 3)]])
    assert chi.coeffs == (Fraction(1, 6), Fraction(-5, 6), 1)


def test_krylov_min_poly_of_eigenvector():
    mu = krylov_min_poly([[2, 0], [0, 3]], (1, 0))
    assert mu == IntPolynomial((-2, 1))


def test_krylov_min_poly_full():
    mu = krylov_min_poly([[2, 0], [0, 3]], (1, 1))
    assert mu == IntPolynomial.from_descending((1, -5, 6))


def test_eigenspace():
    assert eigenspace([[2, 1], [0, 2]], 2) == [[1, 0]]


def test_solve_columns_rejects_inconsistent_target():
    with pytest.raises(NotInSpanError):
        solve_columns([[1, 0, 0], [0, 1, 0]], [0, 0, 1])


# ── Polynomials ───────────────────────────────────────────────────


def test_int_polynomial_basics():
    f = IntPolynomial.from_descending((1, 5, 13))
    assert f.degree == 2
    assert f.is_monic
    assert f.evaluate(Fraction(1)) == 19
    assert f.divides(IntPolynomial.from_descending((1, 6, 18, 13)))
    with pytest.raises(ValueError, match="zero polynomial"):
        IntPolynomial((0, 0))


def test_padic_valuation():
    assert padic_valuation(Fraction(50, 3), 5) == 2
    assert padic_valuation(Fraction(1, 25), 5) == -2
    assert padic_valuation(Fraction(0), 5) == math.inf


@pytest.mark.parametrize("desc,p,valuations,alpha", [
    ((1, 5, 13), 13, [0, 1], 0),
    ((1, 0, -169), 13, [1, 1], 1),
    ((1, -8, 104, -1352, 13**4), 13, [0, 1, 1, 2], 0),
    ((1, 0, 0, 0), 7, [math.inf] * 3, math.inf),
])
def test_newton_polygon(desc, p, valuations, alpha):
    mu = IntPolynomial.from_descending(desc)
    assert newton_polygon_valuations(mu, p) == valuations
    assert recursion_alpha(mu, p) == alpha


# ── Bases ─────────────────────────────────────────────────────────


@pytest.mark.parametrize("p,k", [(5, 1), (5, 2), (7, 1), (7, 2), (11, 1)])
def test_basis_has_full_dimension(p, k):
    basis = build_basis(p, k)
    assert basis.dim == dim_gamma1(p, k)
    assert len(basis.vectors) == basis.dim


def test_generators_are_a_sigma_orbit():
    gens = generator_vectors(7)
    assert len(gens) == 3
    assert len(set(gens)) == 3


def test_basis_unsupported_prime():
    with pytest.raises(UnsupportedError):
        build_basis(23, 1)


def test_coordinates_reproduce_series():
    basis = build_basis(5, 2)
    v = make_garvan()
    coords = coordinates(v, basis)
    assert basis.combination(coords) == product_to_precision(v, basis.window).window(0, basis.window)


def test_represent_outside_span_raises():
    basis = build_basis(5, 1)
    with pytest.raises(NotInSpanError):
        represent(FracSeries.monomial(basis.window - 1, prec=basis.window), basis)


# ── U_p ───────────────────────────────────────────────────────────


def test_u5_weight2_matrix():
    A = build_up_matrix(5, 2)
    printed = tuple(tuple(Fraction(x) for x in row) for row in U5_WEIGHT2)
    assert A.entries in (printed, tuple(zip(*printed)))


@pytest.mark.parametrize("p,k,eigenvalues", [(5, 2, {1, 5}), (7, 2, {1, 7})])
def test_up_eigenvalues(p, k, eigenvalues):
    chi = up_char_poly(build_up_matrix(p, k))
    found = roots(chi.to_sympy())
    assert sum(found.values()) == chi.degree
    assert set(found) == eigenvalues


def test_up_matrix_consistent_with_series():
    A = build_up_matrix(5, 2)
    f = product_to_precision(make_garvan(), 5 * A.basis.window)
    assert check_consistency(A, f)


@pytest.mark.slow
def test_char_poly_at_thirteen_has_quadratic_factor():
    chi = up_char_poly(build_up_matrix(13, 2))
    assert IntPolynomial.from_descending((1, 5, 13)).divides(chi)
