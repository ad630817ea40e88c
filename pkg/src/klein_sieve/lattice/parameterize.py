"""Rational parameterizations of the polytope slices.

Coordinates: h = a0/2, b = (a0 + 2 sum a_i)/24 and cusp orders t_1..t_{m-1}.
In these coordinates a slice is the simplex

    0 <= b <= (p+1) a0 / 24,   t_j >= 0,   sum t_j <= (p-1)((p+1) a0 - 24 b) / 48,

and the integer points of the slice are the simplex points where a
rational affine map lands in Z^m.  For p = 5, 7, 11 the map and its
integrality condition are tabulated; for other primes both come from the
Smith normal form of the coordinate system.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator
from fractions import Fraction
from functools import lru_cache

from sympy import Matrix

from klein_sieve.errors import UnsupportedError
from klein_sieve.lattice.snf import smith_normal_form
from klein_sieve.lattice.system import coordinate_system
from klein_sieve.models.lattice import Parameterization, SNFDecomposition
from klein_sieve.models.vectors import ExponentVector

log = logging.getLogger(__name__)

# Rows give a_1..a_m over (h, b, t_1, ..., t_{m-1}); the congruence rows are
# the integrality conditions.  The p = 7 parameters are the orders at the
# cusps 1/7 and 3/7, the p = 11 ones at 1/11, 2/11, 4/11, 3/11.
CLOSED_FORMS: dict[int, tuple[tuple[tuple[Fraction, ...], ...], tuple]] = {
    5: (
        tuple(tuple(Fraction(x) for x in row) for row in ((-3, 11, 5), (2, 1, -5))),
        (),
    ),
    7: (
        tuple(
            tuple(Fraction(x) for x in row)
            for row in ((-1, 5, 2, -1), (-3, 8, 1, 3), (3, -1, -3, -2))
        ),
        (),
    ),
    11: (
        tuple(
            tuple(Fraction(x, 5) for x in row)
            for row in (
                (-16, 27, 7, 4, 1, 3),
                (19, -8, -3, -6, -4, -7),
                (-11, 22, 2, -1, 6, 3),
                (4, 7, -3, -1, -4, 3),
                (-1, 12, -3, 4, 1, -2),
            )
        ),
        (((1, -12, 3, -4, -1, 2), 5),),
    ),
}


def b_max(p: int, a0: int) -> int:
    return (p + 1) * a0 // 24


def t_budget(p: int, a0: int, b: int) -> int:
    """floor of the bound on t_1 + ... + t_{m-1} at b."""
    return (p - 1) * ((p + 1) * a0 - 24 * b) // 48


@lru_cache(maxsize=None)
def coordinate_snf(p: int) -> SNFDecomposition:
    M, _ = coordinate_system(p)
    return smith_normal_form(M)


def smith_parameterization(p: int, a0: int) -> Parameterization:
    """The map (h, b, t) -> a and its integrality congruences from D = L M R.

    M a = C x is equivalent to D (R^-1 a) = (L C) x, so a is integral iff
    d_i divides (L C x)_i for every i.
    """
    M, C = coordinate_system(p)
    snf = coordinate_snf(p)
    Q = Matrix(M).inv() * Matrix(C)
    LC = Matrix(snf.L) * Matrix(C)
    congruences = []
    for i, d in enumerate(snf.invariants):
        if d > 1:
            row = tuple(int(LC[i, j]) % d for j in range(LC.cols))
            if any(row):
                congruences.append((row, d))
    matrix = tuple(
        tuple(Fraction(int(Q[i, j].p), int(Q[i, j].q)) for j in range(Q.cols))
        for i in range(Q.rows)
    )
    log.debug("p=%d: SNF invariants %s, %d congruences", p, snf.invariants, len(congruences))
    return Parameterization(
        p=p,
        a0=a0,
        matrix=matrix,
        congruences=tuple(congruences),
        b_max=b_max(p, a0),
        source="smith",
    )


def closed_form_parameterization(p: int, a0: int) -> Parameterization:
    if p not in CLOSED_FORMS:
        raise UnsupportedError(f"no closed-form parameterization for p={p}")
    matrix, congruences = CLOSED_FORMS[p]
    return Parameterization(
        p=p,
        a0=a0,
        matrix=matrix,
        congruences=congruences,
        b_max=b_max(p, a0),
        source="closed-form",
    )


def parameterize(p: int, a0: int) -> Parameterization:
    """Closed form where tabulated, Smith normal form otherwise."""
    if p in CLOSED_FORMS:
        return closed_form_parameterization(p, a0)
    return smith_parameterization(p, a0)


def compositions(k: int, bound: int) -> Iterator[tuple[int, ...]]:
    """All k-tuples of non-negative integers with sum <= bound."""
    if k == 0:
        yield ()
        return
    for first in range(bound + 1):
        for rest in compositions(k - 1, bound - first):
            yield (first, *rest)


def to_vector(param: Parameterization, params: tuple[int, ...]) -> ExponentVector:
    tail = param.apply(params)
    if any(x.denominator != 1 for x in tail):
        raise ValueError(f"parameters {params} give a non-integral vector")
    return ExponentVector(param.p, (param.a0, *(int(x) for x in tail)))


def points(param: Parameterization) -> Iterator[ExponentVector]:
    """Every lattice point of the slice, by direct iteration over the simplex."""
    h = param.a0 // 2
    for b in range(param.b_max + 1):
        bound = t_budget(param.p, param.a0, b)
        for t in compositions(param.m - 1, bound):
            x = (h, b, *t)
            if param.admits(x):
                yield to_vector(param, x)


def vertices(p: int, a0: int) -> list[tuple[Fraction, ...]]:
    """Rational vertices (a_1..a_m) of the slice polytope.

    At b = 0 the cusp-order mass sits entirely at one cusp; at the largest
    b every cusp order vanishes.
    """
    param = smith_parameterization(p, a0)
    m = param.m
    h = Fraction(a0, 2)
    top = Fraction(p + 1, 24) * a0
    full = Fraction((p - 1) * (p + 1) * a0, 48)
    corners: list[tuple[Fraction, ...]] = [(h, Fraction(0), *([Fraction(0)] * (m - 1)))]
    for j in range(m - 1):
        t = [Fraction(0)] * (m - 1)
        t[j] = full
        corners.append((h, Fraction(0), *t))
    corners.append((h, top, *([Fraction(0)] * (m - 1))))
    return [param.apply(x) for x in corners]


def box_bounds(p: int, a0: int) -> list[tuple[int, int]]:
    """Integer box around the slice, per coordinate a_1..a_m."""
    verts = vertices(p, a0)
    return [
        (math.floor(min(v[i] for v in verts)), math.ceil(max(v[i] for v in verts)))
        for i in range(len(verts[0]))
    ]
