"""Congruence mining: screening, certification, chimeral detection and named checks."""

from klein_sieve.miner.certify import BasisCertifier, certify
from klein_sieve.miner.checks import (
    cm_vanishing_check,
    eigen_residual_zero,
    verify_large_prime_families,
    verify_mixed_moduli,
    verify_orbit_sizes,
)
from klein_sieve.miner.chimeral import chimeral_order
from klein_sieve.miner.scheduler import PoolMiningScheduler
from klein_sieve.miner.screen import SeriesScreener, orbit_filter, screen
from klein_sieve.miner.search import (
    build_scheduler,
    compare_dissection_table,
    dissection_congruence_search,
    expected_dissection_table,
    mine,
)

__all__ = [
    "screen", "orbit_filter", "SeriesScreener",
    "certify", "BasisCertifier", "chimeral_order",
    "PoolMiningScheduler", "build_scheduler", "mine",
    "dissection_congruence_search", "expected_dissection_table", "compare_dissection_table",
    "cm_vanishing_check", "eigen_residual_zero", "verify_large_prime_families",
    "verify_mixed_moduli", "verify_orbit_sizes",
]
