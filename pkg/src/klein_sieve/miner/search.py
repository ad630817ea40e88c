"""Slice-level searches: congruence mining and U_{p,r} dissection congruences."""

from __future__ import annotations

import asyncio
import logging
import time
from collections.abc import Iterable
from fractions import Fraction

from klein_sieve.data import DISSECTION_TABLES
from klein_sieve.errors import UnsupportedError
from klein_sieve.klein import product_to_precision, proof_window
from klein_sieve.lattice.enumerate import enumerate_lattice
from klein_sieve.miner.certify import BasisCertifier
from klein_sieve.miner.scheduler import PoolMiningScheduler
from klein_sieve.miner.screen import SeriesScreener
from klein_sieve.models.certificates import DissectionCongruence, MineReport
from klein_sieve.models.config import RunConfig
from klein_sieve.models.vectors import ExponentVector
from klein_sieve.orbits import apply_sigma
from klein_sieve.series import dissect, is_zero_mod, truncate

log = logging.getLogger(__name__)


def build_scheduler(config: RunConfig) -> PoolMiningScheduler:
    return PoolMiningScheduler(
        screener=SeriesScreener(config.screen_depth),
        certifier=BasisCertifier(config.j_max, config.chimeral_window),
        workers=config.workers,
        chunk_size=config.chunk_size,
        budget=config.budget,
    )


def mine(p: int, a0: int, config: RunConfig | None = None) -> MineReport:
    """Partition the (p, a0) slice into certified, chimeral and rejected vectors."""
    config = config or RunConfig(prime=p, a0=a0)
    return asyncio.run(build_scheduler(config).run(p, a0))


# ---------------------------------------------------------------------------
# Dissection congruences
# ---------------------------------------------------------------------------


def holds_mod(f, p: int, r: int, modulus: int, window: int) -> bool:
    """U_{p,r} f = 0 (mod modulus) on its first ``window`` exponents r/p + n."""
    return is_zero_mod(truncate(dissect(f, p, r), Fraction(r, p) + window), modulus)


def dissection_congruence_search(
    p: int,
    a0: int,
    modulus: int,
    residues: Iterable[int] | None = None,
    window: int | None = None,
    budget: int | None = None,
) -> list[DissectionCongruence]:
    """Every (r, v) in the slice with U_{p,r}(f_v) = 0 (mod modulus) on the window.

    The default window is the proof window of the weight, which decides the
    congruence for the whole Gamma(p) component.
    """
    started = time.monotonic()
    window = window or proof_window(p, a0 // 2)
    residues = tuple(range(p)) if residues is None else tuple(residues)
    found: list[DissectionCongruence] = []
    vectors = enumerate_lattice(p, a0, budget=budget)
    for v in vectors:
        f = product_to_precision(v, p * window)
        for r in residues:
            if holds_mod(f, p, r, modulus, window):
                found.append(DissectionCongruence(r, v, modulus))
    found.sort()
    log.info(
        "Dissection search p=%d a0=%d mod %d: %d hits over %d vectors in %.2fs",
        p, a0, modulus, len(found), len(vectors), time.monotonic() - started,
    )
    return found


def expected_dissection_table(table_id: str) -> dict[int, set[ExponentVector]]:
    """Printed table with the sigma-derived rows filled in."""
    if table_id not in DISSECTION_TABLES:
        raise UnsupportedError(f"unknown dissection table {table_id!r}")
    spec = DISSECTION_TABLES[table_id]
    p = spec["p"]
    rows = {
        r: {ExponentVector(p, a) for a in vecs} for r, vecs in spec["rows"].items()
    }
    for target, (source, power) in spec["derived"].items():
        rows[target] = {apply_sigma(v, power) for v in rows[source]}
    return rows


def regenerate_dissection_table(
    table_id: str, window: int | None = None
) -> dict[int, set[ExponentVector]]:
    """Exhaustive search over the weights and residues the table covers."""
    spec = DISSECTION_TABLES[table_id]
    p = spec["p"]
    residues = sorted(set(spec["rows"]) | set(spec["derived"]))
    rows: dict[int, set[ExponentVector]] = {r: set() for r in residues}
    for a0 in spec["a0"]:
        for hit in dissection_congruence_search(p, a0, p, residues, window=window):
            rows[hit.r].add(hit.vector)
    return {r: vs for r, vs in rows.items() if vs}


def compare_dissection_table(table_id: str, window: int | None = None) -> dict[int, dict]:
    """Per-residue differences between the printed table and the regenerated one."""
    expected = expected_dissection_table(table_id)
    found = regenerate_dissection_table(table_id, window)
    diff: dict[int, dict] = {}
    for r in sorted(set(expected) | set(found)):
        missing = expected.get(r, set()) - found.get(r, set())
        extra = found.get(r, set()) - expected.get(r, set())
        if missing or extra:
            diff[r] = {"missing": sorted(missing), "extra": sorted(extra)}
    return diff
