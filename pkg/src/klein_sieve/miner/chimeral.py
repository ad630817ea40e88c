"""Order of chimeral congruences: the largest r with a(p^j n) = 0 (mod p^j) for all j <= r.

Two routes.  With a basis, U_p^j f is carried in coordinates and each level
is decided on the proof window, which settles it for every n.  Without one,
the coefficients of f are read directly for n < n_max and the result is
window-limited.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction

from klein_sieve.algebra.basis import represent
from klein_sieve.algebra.hecke import build_up_matrix
from klein_sieve.algebra.poly import padic_valuation
from klein_sieve.errors import UnsupportedError
from klein_sieve.klein import product_to_precision
from klein_sieve.models.algebra import UpMatrix, Vector
from klein_sieve.models.certificates import ChimeralFailure, ChimeralResult
from klein_sieve.models.vectors import ExponentVector

log = logging.getLogger(__name__)

# Largest series (in coefficients) the direct route will expand.
SERIES_LIMIT = 400_000


def first_failure(values: Sequence[Fraction], p: int, j: int) -> ChimeralFailure | None:
    """First n with values[n] not divisible by p^j."""
    modulus = p**j
    for n, c in enumerate(values):
        c = Fraction(c)
        if c.denominator != 1 or c.numerator % modulus:
            coefficient = c.numerator if c.denominator == 1 else c
            return ChimeralFailure(j, n, coefficient, padic_valuation(c, p))
    return None


def chimeral_order_basis(
    v: ExponentVector, A: UpMatrix, coords: Vector, j_max: int = 5
) -> ChimeralResult:
    """Levels j = 1..j_max decided through U_p^j in coordinates."""
    window = A.basis.window
    c = tuple(coords)
    for j in range(1, j_max + 1):
        c = A.apply(c)
        failure = first_failure(A.basis.combination(c), v.p, j)
        if failure is not None:
            log.debug("%s: level %d fails at n=%d", v, j, failure.n)
            return ChimeralResult(v, j - 1, failure, window, False, "basis")
    return ChimeralResult(v, j_max, None, window, True, "basis")


def chimeral_order_series(v: ExponentVector, j_max: int = 5, n_max: int | None = None) -> ChimeralResult:
    """Levels checked directly on a(p^j n), n < n_max; capped at SERIES_LIMIT coefficients."""
    p = v.p
    n_max = n_max if n_max is not None else 10 * p
    n_max = max(1, min(n_max, SERIES_LIMIT // p))
    levels = j_max
    while levels > 1 and p**levels * n_max > SERIES_LIMIT:
        levels -= 1
    if levels < j_max:
        log.info("%s: series route limited to %d of %d levels", v, levels, j_max)
    f = product_to_precision(v, p**levels * n_max)
    for j in range(1, levels + 1):
        step = p**j
        values = [f.coefficient(step * n) for n in range(n_max)]
        failure = first_failure(values, p, j)
        if failure is not None:
            return ChimeralResult(v, j - 1, failure, n_max, False, "series")
    return ChimeralResult(v, levels, None, n_max, True, "series")


def chimeral_order(
    v: ExponentVector, j_max: int = 5, n_max: int | None = None, route: str = "auto"
) -> ChimeralResult:
    """Chimeral order of f_v; ``route`` is "auto", "basis" or "series"."""
    if route not in ("auto", "basis", "series"):
        raise ValueError(f"unknown route {route!r}")
    if route != "series":
        try:
            A = build_up_matrix(v.p, v.a0 // 2)
        except UnsupportedError:
            if route == "basis":
                raise
            log.debug("No basis for %s; using the series route", v)
        else:
            f = product_to_precision(v, A.basis.window)
            return chimeral_order_basis(v, A, represent(f, A.basis), j_max)
    return chimeral_order_series(v, j_max, n_max)
