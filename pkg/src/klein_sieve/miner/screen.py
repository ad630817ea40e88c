"""Screening and orbit filtering of lattice points."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from klein_sieve.klein import product_to_precision
from klein_sieve.models.vectors import ExponentVector
from klein_sieve.orbits import orbit

log = logging.getLogger(__name__)


def screen(v: ExponentVector, depth: int = 2) -> bool:
    """Coefficients of q^0, q^p, ..., q^(depth*p) in f_v are all divisible by p.

    This is the entrywise form of the test; it is necessary for a(pn) = 0 (mod p).
    """
    p = v.p
    f = product_to_precision(v, depth * p + 1)
    for n in range(depth + 1):
        c = f.coefficient(n * p)
        if c.denominator != 1 or c.numerator % p:
            return False
    return True


def orbit_filter(passed: Iterable[ExponentVector]) -> set[ExponentVector]:
    """Keep v only when its whole sigma-orbit passed screening."""
    survivors = set(passed)
    return {v for v in survivors if all(w in survivors for w in orbit(v))}


@dataclass(frozen=True)
class SeriesScreener:
    """Screener backed by the product series; picklable for process pools."""

    depth: int = 2

    def screen(self, v: ExponentVector) -> bool:
        return screen(v, self.depth)

    def screen_chunk(self, vectors: Sequence[ExponentVector]) -> list[ExponentVector]:
        return [v for v in vectors if screen(v, self.depth)]
