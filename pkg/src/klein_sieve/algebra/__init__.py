"""Exact linear algebra: monomial bases, U_p matrices, Krylov polynomials, Newton polygons."""

from klein_sieve.algebra.basis import (
    build_basis,
    coordinates,
    generator_vectors,
    monomial_series,
    monomial_vector,
    polynomial_coordinates,
    polynomial_series,
    represent,
)
from klein_sieve.algebra.hecke import apply_up, build_up_matrix, up_char_poly, up_window
from klein_sieve.algebra.linalg import (
    IncrementalEchelon,
    char_poly,
    eigenspace,
    krylov_min_poly,
    rank,
    solve_columns,
)
from klein_sieve.algebra.poly import (
    NewtonPolygon,
    newton_polygon,
    newton_polygon_valuations,
    padic_valuation,
    recursion_alpha,
)

__all__ = [
    "build_basis", "coordinates", "generator_vectors", "monomial_series", "monomial_vector",
    "polynomial_coordinates", "polynomial_series", "represent",
    "apply_up", "build_up_matrix", "up_char_poly", "up_window",
    "IncrementalEchelon", "char_poly", "eigenspace", "krylov_min_poly", "rank", "solve_columns",
    "NewtonPolygon", "newton_polygon", "newton_polygon_valuations", "padic_valuation",
    "recursion_alpha",
]
