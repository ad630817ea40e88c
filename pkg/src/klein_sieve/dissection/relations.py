"""Quadratic relations among the weight-one generators at levels 7, 11 and 13.

Relations are read with x_n = f_{sigma_p^n(a_p)}, the n-th entry of
``generator_vectors(p)``; no other labelling is tried.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from fractions import Fraction

from klein_sieve.algebra.basis import all_monomials, monomial_series
from klein_sieve.data import KLEIN_RELATIONS, parse_relation
from klein_sieve.errors import UnsupportedError
from klein_sieve.klein import proof_window
from klein_sieve.models.algebra import Monomial

log = logging.getLogger(__name__)

Relation = Mapping[Monomial, int | Fraction]


def _windows(p: int, degree: int) -> dict[Monomial, list[Fraction]]:
    window = proof_window(p, degree)
    m = (p - 1) // 2
    return {
        mono: monomial_series(p, mono, window).window(0, window)
        for mono in all_monomials(m, degree)
    }


def _vanishes(relation: Relation, windows: dict[Monomial, list[Fraction]]) -> bool:
    length = len(next(iter(windows.values())))
    total = [Fraction(0)] * length
    for mono, c in relation.items():
        row = windows[mono]
        for n in range(length):
            total[n] += c * row[n]
    return not any(total)


def verify_klein_relation(p: int, relation: Relation) -> bool:
    """The combination of generator monomials is zero on the weight-2 proof window."""
    degree = {sum(mono) for mono in relation}
    if len(degree) != 1:
        raise ValueError("relation must be homogeneous")
    return _vanishes(relation, _windows(p, degree.pop()))


def printed_relations(p: int) -> list[dict[Monomial, int]]:
    if p not in KLEIN_RELATIONS:
        raise UnsupportedError(f"no Klein relations tabulated at level {p}")
    m = (p - 1) // 2
    return [parse_relation(text, m) for text in KLEIN_RELATIONS[p]]


def check_printed_relations(p: int) -> list[bool]:
    """Per-relation verdicts for the printed relations at level p."""
    relations = printed_relations(p)
    windows = _windows(p, 2)
    verdicts = [_vanishes(rel, windows) for rel in relations]
    if not all(verdicts):
        log.warning("Level-%d relations failing: %s", p,
                    [i + 1 for i, ok in enumerate(verdicts) if not ok])
    return verdicts
