"""The U_p operator as a matrix on the monomial basis of M_k(Gamma_1(p))."""

from __future__ import annotations

import logging
import time
from fractions import Fraction
from functools import lru_cache

from klein_sieve.algebra.basis import build_basis, represent
from klein_sieve.algebra.linalg import char_poly, mat_vec
from klein_sieve.klein import product_to_precision
from klein_sieve.models.algebra import IntPolynomial, UpMatrix, Vector
from klein_sieve.series import FracSeries, dissect

log = logging.getLogger(__name__)


def apply_up(f: FracSeries, p: int) -> FracSeries:
    """U_p f; known below roughly ``precision(f) / p``."""
    return dissect(f, p, 0)


@lru_cache(maxsize=32)
def build_up_matrix(p: int, k: int) -> UpMatrix:
    """Column j holds the coordinates of U_p applied to the j-th basis element.

    Each basis product is expanded to p times the proof window so that its
    U_p image is known on the full window before it is represented.
    """
    start = time.monotonic()
    basis = build_basis(p, k)
    columns = []
    for v in basis.vectors:
        f = product_to_precision(v, p * basis.window)
        columns.append(represent(apply_up(f, p), basis))
    entries = tuple(tuple(col[i] for col in columns) for i in range(basis.dim))
    log.info(
        "U_%d matrix on M_%d(Gamma_1(%d)): %dx%d in %.2fs",
        p, k, p, basis.dim, basis.dim, time.monotonic() - start,
    )
    return UpMatrix(p=p, k=k, entries=entries, basis=basis)


def up_char_poly(A: UpMatrix) -> IntPolynomial:
    return char_poly(A.entries)


def up_window(A: UpMatrix, coords: Vector, n: int) -> list[Fraction]:
    """Coefficients q^0 .. q^(window-1) of U_p^n applied to the form with ``coords``."""
    for _ in range(n):
        coords = mat_vec(A.entries, coords)
    return A.basis.combination(coords)


def check_consistency(A: UpMatrix, f: FracSeries) -> bool:
    """A applied to coords(f) agrees with the coordinates of U_p f computed from series.

    ``f`` must be known below p times the proof window.
    """
    basis = A.basis
    return A.apply(represent(f, basis)) == represent(apply_up(f, A.p), basis)
