"""Regeneration of the tabulated results."""

from __future__ import annotations

import pytest

from klein_sieve.data import DISSECTION_TABLES, RAMANUJAN_COVERAGE
from klein_sieve.errors import UnsupportedError
from klein_sieve.tables import (
    TABLES,
    chimeral_order_four,
    congruence_lists,
    congruence_slice,
    run_table,
)

from tests.conftest import make_test_config


def _failed(results):
    return [f"{r.name}: {r.detail}" for r in results if not r.passed]


def test_every_table_id_is_registered():
    for table_id in ("table-2", "theorem-2", "u-matrices", "chimeral", *DISSECTION_TABLES):
        assert table_id in TABLES


def test_unknown_table():
    with pytest.raises(UnsupportedError, match="unknown table id"):
        run_table("table-99")


def test_lattice_counts():
    results = run_table("table-2", make_test_config())
    assert not _failed(results)
    assert any(r.name == "closed_form_7" for r in results)


def test_corollary_dissection_table():
    assert not _failed(run_table("corollary-5s", make_test_config()))


@pytest.mark.slow
@pytest.mark.parametrize("table_id", [
    "klein-relations", "dissection-rows", "garvan-10", "cm-checks",
    "mixed-moduli", "u-matrices", "families", "theorem-7s",
])
def test_slow_tables(table_id):
    assert not _failed(run_table(table_id, make_test_config(j_max=3)))


@pytest.mark.slow
def test_chimeral_table():
    results = run_table("chimeral", make_test_config(j_max=3))
    assert all(r.evidence_only or r.passed for r in results)
    assert not results[-1].evidence_only


@pytest.mark.slow
def test_chimeral_order_four_is_exact():
    """(12, -13, 17, -9, 4, -7, 2) at p = 13 → order exactly 4 on the basis route."""
    result = chimeral_order_four(make_test_config(j_max=3))
    assert result.passed, result.detail
    assert result.detail == "order 4 (basis)"


@pytest.mark.parametrize("p", [5, 7])
def test_congruence_lists_small_primes(p):
    """Every covered (p, a0) slice at p = 5, 7 mines exactly the tabulated orbits."""
    results = congruence_lists(make_test_config(j_max=3), primes=[p])
    assert [r.name for r in results] == [f"congruences_{p}_{a0}" for a0 in RAMANUJAN_COVERAGE[p]]
    assert not _failed(results)


def test_congruence_slice_flags_extra_certificates(mocker):
    """An untabulated certified vector → the slice check fails and names it."""
    mocker.patch("klein_sieve.tables.RAMANUJAN_SEEDS", {5: ()})
    result = congruence_slice(5, 4, make_test_config(j_max=3))
    assert not result.passed
    assert "extra ['4,-1,-1']" in result.detail


@pytest.mark.long_running
@pytest.mark.parametrize("table_id", ["theorem-2", "theorem-11s"])
def test_mining_tables(table_id):
    """Full slice mining up to p = 19 and the level-11 dissection search."""
    assert not _failed(run_table(table_id, make_test_config(j_max=3, workers=2)))
