"""Named verifications: CM vanishing, parity, eigen families and orbit sizes."""

from __future__ import annotations

import pytest
from sympy import primerange

from klein_sieve.klein import product_to_precision
from klein_sieve.miner.checks import (
    cm_identity_7,
    cm_vanishing_7,
    eigen_residual_zero,
    eigenform_congruences_11,
    elliptic_parity_11,
    parity_rows_11,
    u11_10_cubic,
    verify_large_prime_families,
    verify_mixed_moduli,
    verify_orbit_sizes,
)
from klein_sieve.miner.search import holds_mod

from tests.factories import make_garvan, make_top_family, make_vector


def _failed(results):
    return [r.name for r in results if not r.passed]


# ── Level 7 ───────────────────────────────────────────────────────


def test_cm_vanishing_short_window():
    """P_{6,3,3,3}(n - 1) vanishes on n = 3, 5, 6 (mod 7)."""
    assert cm_vanishing_7(window=150).passed


def test_cm_identity_as_cubic():
    result = cm_identity_7()
    assert result.passed, result.detail


# ── Level 11 ──────────────────────────────────────────────────────


def test_parity_rows():
    """Weight 2 on the non-residue rows, weight 4 on the residue rows → all even."""
    results = parity_rows_11()
    assert not _failed(results)
    assert results[1].detail == "rows [1, 3, 4, 5, 9]"


def test_parity_weight_four_stops_at_residues():
    """eta_1^4 eta_11^4 is odd somewhere on every non-residue row."""
    f = product_to_precision(make_vector(11, 8, 4, 4, 4, 4, 4), 11 * 30)
    assert not any(holds_mod(f, 11, r, 2, 30) for r in (2, 6, 7, 8, 10))


def test_elliptic_parity():
    result = elliptic_parity_11(limit=120)
    assert result.passed, result.detail


@pytest.mark.slow
def test_eigenform_congruences_at_eleven():
    assert not _failed(eigenform_congruences_11(n_max=10, levels=1))


@pytest.mark.slow
def test_u11_10_cubic():
    result = u11_10_cubic()
    assert result.passed, result.detail


# ── Families ──────────────────────────────────────────────────────


def test_eigen_residual():
    assert eigen_residual_zero(make_garvan(), 5)
    assert not eigen_residual_zero(make_garvan(), 4)
    assert eigen_residual_zero(make_top_family(7), 49)


def test_large_prime_families_small_primes():
    results = verify_large_prime_families([5, 7])
    assert results
    assert not _failed(results)


@pytest.mark.slow
def test_large_prime_families_eleven_to_nineteen():
    results = verify_large_prime_families([11, 13, 17, 19])
    assert not [r.name for r in results if not r.passed and not r.evidence_only]


def test_conjecture_vectors_are_evidence_only():
    results = verify_large_prime_families([11])
    conjectures = [r for r in results if r.name.startswith("conjecture_")]
    assert conjectures
    assert all(r.evidence_only for r in conjectures)


def test_orbit_sizes_at_thirteen():
    assert not _failed(verify_orbit_sizes())


@pytest.mark.slow
def test_mixed_moduli():
    assert not _failed(verify_mixed_moduli(window=60))


@pytest.mark.long_running
def test_large_prime_families_up_to_101():
    results = verify_large_prime_families(primerange(5, 102))
    assert not [r.name for r in results if not r.passed and not r.evidence_only]
