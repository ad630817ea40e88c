"""Newton polygons and p-adic valuations of polynomial roots."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from sympy import multiplicity

from klein_sieve.models.algebra import IntPolynomial


def padic_valuation(x: Fraction, p: int) -> int | float:
    """v_p of a rational; ``math.inf`` for zero."""
    x = Fraction(x)
    if x == 0:
        return math.inf
    return multiplicity(p, abs(x.numerator)) - multiplicity(p, x.denominator)


def _cross(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex hull of the points (i, v_p(c_i))."""

    p: int
    vertices: tuple[tuple[int, int], ...]
    zero_roots: int  # multiplicity of x = 0 as a root

    def segments(self) -> list[tuple[Fraction, int]]:
        """(slope, horizontal length) for each edge, left to right."""
        out = []
        for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:]):
            out.append((Fraction(y1 - y0, x1 - x0), x1 - x0))
        return out

    def root_valuations(self) -> list:
        """Valuations with multiplicity, ascending; zero roots count as ``math.inf``."""
        vals: list = []
        for slope, length in self.segments():
            vals.extend([-slope] * length)
        vals.sort()
        return vals + [math.inf] * self.zero_roots


def newton_polygon(mu: IntPolynomial, p: int) -> NewtonPolygon:
    """Lower hull by the monotone chain over the points with c_i != 0."""
    pts = [(i, padic_valuation(c, p)) for i, c in enumerate(mu.coeffs) if c]
    zero_roots = pts[0][0]
    hull: list[tuple[int, int]] = []
    for pt in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    return NewtonPolygon(p, tuple(hull), zero_roots)


def newton_polygon_valuations(mu: IntPolynomial, p: int) -> list:
    """p-adic valuations of the roots of mu (ascending, ``math.inf`` for roots at 0)."""
    return newton_polygon(mu, p).root_valuations()


def recursion_alpha(mu: IntPolynomial, p: int) -> int | float:
    """Largest alpha with v_p(c_i) >= alpha (d - i) for every coefficient below the top.

    ``math.inf`` when mu = x^d.  Equals the floor of the least root valuation.
    """
    mu = mu.monic()
    d = mu.degree
    best: int | float = math.inf
    for i, c in enumerate(mu.coeffs[:-1]):
        if c:
            v = padic_valuation(c, p)
            best = min(best, math.floor(Fraction(v, d - i)))
    return best
