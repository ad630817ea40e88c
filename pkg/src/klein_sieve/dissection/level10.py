"""Level-ten forms built from the weight-one Gamma(5) quotients.

u_1..u_4 are f_{(2, j-3, 2-j)} at p = 5, with u_j in q^{j/5} Z[[q]].  The two
integral members are labelled so that the printed expansions hold: u_0 is
f_{2,2,-3} (in q Z[[q]]) and u_5 is f_{2,-3,2} (constant term 1); their product
is still f_{4,-1,-1}.  The even and odd index parts of u_j(tau/2) give twelve
series w_1..w_12, each in a single class q^{c/10} Z[[q]].  The two U_10 images
of f_{4,-1,-1} are twice a quadratic form in the w_i, so their coefficients
are even.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from klein_sieve.data import LEVEL10_U0, LEVEL10_U5, LEVEL10_U10_3, LEVEL10_U10_7
from klein_sieve.klein import product_to_precision
from klein_sieve.models.vectors import ExponentVector
from klein_sieve.series import (
    FracSeries,
    dissect,
    is_zero_mod,
    linear_combination,
    mul,
    parity_split,
    scale_exponents,
    truncate,
)

log = logging.getLogger(__name__)

# u_j index feeding (w_{2i+1}, w_{2i+2}) for i = 0..5
W_SOURCES = (0, 5, 1, 2, 3, 4)

# exponent class of w_1..w_12 modulo 1
W_CLASSES = tuple(
    Fraction(c, 10) for c in (0, 5, 0, 5, 1, 6, 2, 7, 3, 8, 4, 9)
)

GARVAN_VECTOR = ExponentVector(5, (4, -1, -1))


# the integral pair, in the order the printed w-expansions use
INTEGRAL_U = {0: (2, 2, -3), 5: (2, -3, 2)}


def level10_u(j: int) -> ExponentVector:
    if j in INTEGRAL_U:
        return ExponentVector(5, INTEGRAL_U[j])
    return ExponentVector(5, (2, j - 3, 2 - j))


def level10_basis(N: int = 60) -> list[FracSeries]:
    """w_1..w_12, each known below q^N."""
    out: list[FracSeries] = []
    for j in W_SOURCES:
        u = product_to_precision(level10_u(j), 2 * N + 1)
        even, odd = parity_split(u, Fraction(j % 5, 5))
        out.append(scale_exponents(even, Fraction(1, 2)))
        out.append(scale_exponents(odd, Fraction(1, 2)))
    return out


def in_class(f: FracSeries, c: Fraction) -> bool:
    """Every known term of ``f`` has an exponent in c + Z and an integer coefficient."""
    return f.is_integral and all((e - c).denominator == 1 for e, _ in f.terms())


def check_classes(ws: list[FracSeries]) -> list[bool]:
    return [in_class(w, c) for w, c in zip(ws, W_CLASSES)]


def _quadratic(ws: list[FracSeries], terms, upto: int) -> FracSeries:
    return linear_combination(
        (2 * c, truncate(mul(ws[i - 1], ws[j - 1]), upto)) for c, (i, j) in terms
    )


def verify_u_expansions(N: int = 60) -> bool:
    """u_0(tau/10) and u_5(tau/10) equal their printed w-combinations below q^N."""
    ws = level10_basis(N + 1)
    for j, coeffs in ((0, LEVEL10_U0), (5, LEVEL10_U5)):
        scaled = scale_exponents(product_to_precision(level10_u(j), 10 * N), Fraction(1, 10))
        combo = linear_combination((c, w) for c, w in zip(coeffs, ws) if c)
        if not scaled.agrees(combo, upto=N):
            log.debug("u_%d(tau/10) differs from its w-expansion", j)
            return False
    return True


def garvan_checks(N: int = 300) -> dict[str, bool]:
    """Named verdicts for the level-ten construction on N coefficients."""
    ws = level10_basis(N + 1)
    f = product_to_precision(GARVAN_VECTOR, 10 * N)
    out = {"w_classes": all(check_classes(ws))}
    for r, terms in ((3, LEVEL10_U10_3), (7, LEVEL10_U10_7)):
        image = truncate(dissect(f, 10, r), N)
        out[f"u10_{r}_even"] = is_zero_mod(image, 2)
        out[f"u10_{r}_expansion"] = image.agrees(_quadratic(ws, terms, N), upto=N)
    out["u_expansions"] = verify_u_expansions(min(N, 60))
    return out


def verify_garvan5(N: int = 300) -> bool:
    """U_{10,3} f_{4,-1,-1} and U_{10,7} f_{4,-1,-1} are = 0 (mod 2) on N coefficients."""
    checks = garvan_checks(N)
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        log.warning("Level-ten checks failed: %s", ", ".join(failed))
    return not failed
