"""Polytope of holomorphic exponent vectors: systems, Smith normal form, enumeration."""

from __future__ import annotations

import pytest

from klein_sieve.data import TABLE2_COUNTS
from klein_sieve.errors import BudgetError, UnsupportedError
from klein_sieve.klein import is_modular
from klein_sieve.lattice.enumerate import (
    box_search,
    count_closed_form,
    count_lattice,
    enumerate_lattice,
)
from klein_sieve.lattice.parameterize import (
    closed_form_parameterization,
    points,
    smith_parameterization,
)
from klein_sieve.lattice.snf import check_decomposition, reference_invariants, smith_normal_form
from klein_sieve.lattice.system import build_system, is_bounded

from tests.factories import make_garvan


# ── Systems ───────────────────────────────────────────────────────


def test_system_contains_garvan_vector():
    system = build_system(5, 4)
    assert system.satisfied_by(make_garvan().a)
    assert not system.satisfied_by((4, 1, 1))


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_slices_are_bounded(p):
    assert is_bounded(build_system(p, 4))


# ── Smith normal form ─────────────────────────────────────────────


def test_smith_normal_form_small():
    snf = smith_normal_form([[2, 4], [6, 8]])
    assert snf.invariants == (2, 4)
    assert check_decomposition(snf)


@pytest.mark.parametrize("A", [
    [[1, 2, 3], [4, 5, 6], [7, 8, 10]],
    [[6, 0, 0], [0, 10, 0]],
    [[12, 18, -6], [4, 14, 22]],
])
def test_smith_normal_form_matches_reference(A):
    snf = smith_normal_form(A)
    assert check_decomposition(snf)
    nonzero = tuple(d for d in snf.invariants if d)
    assert tuple(abs(d) for d in nonzero) == tuple(d for d in reference_invariants(A) if d)


# ── Counts ────────────────────────────────────────────────────────


def test_enumerate_small_counts():
    assert len(enumerate_lattice(7, 6)) == 39
    assert len(enumerate_lattice(5, 2)) == 2


@pytest.mark.parametrize("p,a0", [
    (p, a0) for p in (5, 7, 11) for a0 in (2, 4, 6, 8, 10)
] + [(13, 2), (13, 4), (13, 6)])
def test_counts_match_table(p, a0):
    assert count_lattice(p, a0) == TABLE2_COUNTS[p][a0]


@pytest.mark.slow
@pytest.mark.parametrize("p,a0", [(13, 8), (13, 10), (17, 2), (17, 4), (19, 2), (19, 4)])
def test_counts_match_table_slow(p, a0):
    assert count_lattice(p, a0) == TABLE2_COUNTS[p][a0]


@pytest.mark.parametrize("p", [5, 7])
def test_closed_form_counts(p):
    for a0 in range(2, 21, 2):
        assert count_closed_form(p, a0) == count_lattice(p, a0, budget=None), a0


def test_closed_form_unsupported_prime():
    with pytest.raises(UnsupportedError):
        count_closed_form(11, 4)


# ── Enumeration ───────────────────────────────────────────────────


def test_enumeration_is_sorted_and_modular():
    vectors = enumerate_lattice(11, 4)
    assert vectors == sorted(vectors)
    assert all(is_modular(v) == (True, 2) for v in vectors)


@pytest.mark.parametrize("p,a0", [(5, 6), (5, 8), (7, 4), (7, 6)])
def test_enumeration_matches_box_search(p, a0):
    assert enumerate_lattice(p, a0) == sorted(box_search(p, a0))


@pytest.mark.parametrize("p,a0", [(5, 8), (7, 6)])
def test_smith_and_closed_form_parameterizations_agree(p, a0):
    smith = sorted(points(smith_parameterization(p, a0)))
    closed = sorted(points(closed_form_parameterization(p, a0)))
    assert smith == closed == enumerate_lattice(p, a0)


def test_budget_refusal_carries_estimate():
    with pytest.raises(BudgetError) as exc_info:
        enumerate_lattice(11, 6, budget=10)
    assert exc_info.value.estimate > 10
