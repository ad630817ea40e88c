"""Complete enumeration of the lattice points of a polytope slice.

The parameters t_1..t_{m-1} are split into two halves.  Each half is listed
once with its partial sum and its residues under the integrality
congruences; the second half is bucketed by residue and sorted by sum, so
for every first-half tuple the compatible completions are one dictionary
lookup plus a bisection on the remaining budget.
"""

from __future__ import annotations

import bisect
import logging
import math
import time
from collections import defaultdict

from klein_sieve.errors import BudgetError, UnsupportedError
from klein_sieve.klein import is_modular
from klein_sieve.lattice.parameterize import (
    b_max,
    box_bounds,
    compositions,
    parameterize,
    t_budget,
    to_vector,
)
from klein_sieve.models.config import DEFAULT_BUDGET
from klein_sieve.models.lattice import Parameterization
from klein_sieve.models.vectors import ExponentVector

log = logging.getLogger(__name__)

Residues = tuple[int, ...]


def _split(m: int) -> tuple[int, int]:
    k = m - 1
    return k // 2, k - k // 2


def estimate_work(p: int, a0: int) -> int:
    """Half-tuples listed plus their per-b scans; the budget is checked against this."""
    k_a, k_b = _split((p - 1) // 2)
    top = t_budget(p, a0, 0)
    listed = math.comb(top + k_a, k_a) + math.comb(top + k_b, k_b)
    scans = sum(math.comb(t_budget(p, a0, b) + k_a, k_a) for b in range(b_max(p, a0) + 1))
    return listed + scans


def _residues(param: Parameterization, offset: int, half: tuple[int, ...]) -> Residues:
    return tuple(
        sum(row[offset + j] * x for j, x in enumerate(half)) % n for row, n in param.congruences
    )


def _half_table(
    param: Parameterization, offset: int, k: int, bound: int
) -> dict[Residues, tuple[list[int], list[tuple[int, ...]]]]:
    buckets: dict[Residues, list[tuple[int, tuple[int, ...]]]] = defaultdict(list)
    for half in compositions(k, bound):
        buckets[_residues(param, offset, half)].append((sum(half), half))
    table = {}
    for key, items in buckets.items():
        items.sort()
        table[key] = ([s for s, _ in items], [h for _, h in items])
    return table


def _walk(param: Parameterization, emit) -> None:
    p, a0 = param.p, param.a0
    h = a0 // 2
    k_a, k_b = _split(param.m)
    top = t_budget(p, a0, 0)
    first = sorted(((sum(t), t) for t in compositions(k_a, top)))
    first_res = [_residues(param, 2, t) for _, t in first]
    second = _half_table(param, 2 + k_a, k_b, top)
    moduli = [n for _, n in param.congruences]

    for b in range(param.b_max + 1):
        bound = t_budget(p, a0, b)
        const = [(row[0] * h + row[1] * b) % n for row, n in param.congruences]
        for (s_a, t_a), r_a in zip(first, first_res):
            if s_a > bound:
                break
            key = tuple((-c - r) % n for c, r, n in zip(const, r_a, moduli))
            hit = second.get(key)
            if hit is None:
                continue
            sums, halves = hit
            cut = bisect.bisect_right(sums, bound - s_a)
            if cut:
                emit(b, t_a, halves, cut)


def count_lattice(p: int, a0: int, budget: int | None = DEFAULT_BUDGET) -> int:
    """Number of lattice points, without building the vectors."""
    _check_budget(p, a0, budget)
    total = 0

    def emit(b, t_a, halves, cut):
        nonlocal total
        total += cut

    _walk(parameterize(p, a0), emit)
    return total


def enumerate_lattice(
    p: int, a0: int, budget: int | None = DEFAULT_BUDGET
) -> list[ExponentVector]:
    """All exponent vectors with a0 fixed whose products lie in M_{a0/2}(Gamma_1(p)).

    Sorted lexicographically; raises BudgetError when the estimated work
    exceeds ``budget`` (None disables the check).
    """
    _check_budget(p, a0, budget)
    started = time.monotonic()
    param = parameterize(p, a0)
    h = a0 // 2
    out: list[ExponentVector] = []

    def emit(b, t_a, halves, cut):
        for t_b in halves[:cut]:
            out.append(to_vector(param, (h, b, *t_a, *t_b)))

    _walk(param, emit)
    out.sort()
    log.info(
        "Enumerated p=%d a0=%d: %d lattice points (%s) in %.2fs",
        p, a0, len(out), param.source, time.monotonic() - started,
    )
    return out


def _check_budget(p: int, a0: int, budget: int | None) -> None:
    if budget is None:
        return
    estimate = estimate_work(p, a0)
    if estimate > budget:
        raise BudgetError(
            f"enumeration at p={p}, a0={a0} needs about {estimate:,} steps "
            f"(budget {budget:,}); rerun with long_running enabled",
            estimate,
        )


def count_closed_form(p: int, a0: int) -> int:
    """Lattice-point counts in closed form for p = 5 and p = 7."""
    if p == 5:
        return (a0 + 4) ** 2 // 16
    if p == 7:
        x = a0 + 2
        return (x**3 + 3 * x**2) // 18
    raise UnsupportedError(f"no closed-form count for p={p}")


def box_search(p: int, a0: int) -> list[ExponentVector]:
    """Brute force over the bounding box of the slice, filtered by is_modular."""
    bounds = box_bounds(p, a0)
    out = []

    def rec(prefix: list[int]) -> None:
        i = len(prefix)
        if i == len(bounds):
            v = ExponentVector(p, (a0, *prefix))
            if is_modular(v)[0]:
                out.append(v)
            return
        lo, hi = bounds[i]
        for x in range(lo, hi + 1):
            prefix.append(x)
            rec(prefix)
            prefix.pop()

    rec([])
    out.sort()
    return out
