"""Screening, certification, chimeral orders and dissection-congruence searches."""

from __future__ import annotations

import math
import sys
from fractions import Fraction

import pytest

from klein_sieve.data import CHIMERAL_SEEDS
from klein_sieve.errors import UnsupportedError
from klein_sieve.klein import product_to_precision
from klein_sieve.miner.certify import BasisCertifier, certify, window_valuation
from klein_sieve.miner.chimeral import chimeral_order, chimeral_order_series, first_failure
from klein_sieve.miner.screen import SeriesScreener, orbit_filter, screen
from klein_sieve.miner.search import (
    dissection_congruence_search,
    expected_dissection_table,
    holds_mod,
    mine,
)
from klein_sieve.models.algebra import IntPolynomial
from klein_sieve.models.certificates import CertificateKind, ChimeralFailure
from klein_sieve.models.vectors import ExponentVector
from klein_sieve.orbits import apply_sigma

from tests.conftest import make_test_config
from tests.factories import GARVAN, make_garvan, make_top_family, make_vector


# ── Screening ─────────────────────────────────────────────────────


def test_screen_accepts_eigenform():
    assert screen(make_garvan())


def test_screen_rejects_unit_constant_term():
    """The weight-one generator at p = 5 starts with 1 → fails at q^0."""
    assert not screen(make_vector(5, 2, -3, 2))


def test_screen_depth_zero_only_reads_constant_term():
    assert screen(make_garvan(), depth=0)


def test_series_screener_chunk():
    screener = SeriesScreener(depth=2)
    chunk = [make_garvan(), make_vector(5, 2, -3, 2)]
    assert screener.screen_chunk(chunk) == [make_garvan()]


def test_orbit_filter_needs_whole_orbit():
    v = make_top_family(5)
    assert orbit_filter([v]) == set()
    assert orbit_filter([v, apply_sigma(v)]) == {v, apply_sigma(v)}


# ── Certification ─────────────────────────────────────────────────


def test_certify_garvan_eigenform():
    cert = certify(make_garvan(), j_max=3)
    assert cert.kind is CertificateKind.EIGEN
    assert cert.certified and cert.proved
    assert cert.alpha == 1
    assert cert.eigenvalue == 5
    assert cert.evidence["eigen_residual_zero"]
    assert cert.evidence["recheck_2x"]


def test_certify_failed_recheck_downgrades(mocker):
    """A failing 2x-window recheck → no proof-grade certificate, flag kept as evidence."""
    mocker.patch.object(sys.modules["klein_sieve.miner.certify"], "_recheck", return_value=False)
    cert = certify(make_garvan(), j_max=3)
    assert not cert.proved
    assert cert.kind is CertificateKind.FINITE_EVIDENCE
    assert cert.evidence["recheck_2x"] is False


def test_certify_failed_eigen_residual_downgrades(mocker):
    """A wrong eigenvalue (25 instead of 5) leaves a nonzero residual → not proved."""
    mocker.patch.object(sys.modules["klein_sieve.miner.certify"], "krylov_min_poly",
        return_value=IntPolynomial.from_descending((1, -25)),
    )
    cert = certify(make_garvan(), j_max=3)
    assert not cert.proved
    assert cert.kind is not CertificateKind.EIGEN
    assert cert.evidence["eigen_residual_zero"] is False


@pytest.mark.parametrize("p", [5, 7])
def test_certify_top_family_eigenvalue_p_squared(p):
    """(6, 1, 0, ..., 0, -4) → U_p eigenvalue p^2, so alpha = 2 even at p = 5."""
    cert = certify(make_top_family(p), j_max=3)
    assert cert.kind is CertificateKind.EIGEN
    assert cert.eigenvalue == p * p
    assert cert.alpha == 2


@pytest.mark.slow
def test_certify_top_family_at_thirteen():
    cert = certify(make_top_family(13), j_max=3)
    assert cert.kind is CertificateKind.EIGEN
    assert cert.eigenvalue == 169
    assert cert.alpha == 2


def test_certify_without_basis_uses_series_route():
    v = ExponentVector(23, (6, 1) + (0,) * 9 + (-4,))
    cert = certify(v, j_max=1, n_max=2)
    assert cert.evidence["method"] == "series"


def test_certificate_to_dict():
    data = certify(make_garvan(), j_max=2).to_dict()
    assert data["vector"] == "4,-1,-1"
    assert data["kind"] == "eigen"
    assert data["lambda"] == "5"
    assert data["min_poly"] == "x - 5"


def test_basis_certifier_delegates():
    certifier = BasisCertifier(j_max=2)
    assert certifier.certify(make_garvan()).kind is CertificateKind.EIGEN
    assert certifier.chimeral_order(make_garvan()).order == 2


def test_window_valuation():
    assert window_valuation([Fraction(0), Fraction(10), Fraction(25)], 5) == 1
    assert window_valuation([Fraction(0)], 5) == math.inf


# ── Chimeral orders ───────────────────────────────────────────────


def test_first_failure():
    assert first_failure([0, 5, 3], 5, 1) == ChimeralFailure(1, 2, 3, 0)
    assert first_failure([25, 50], 5, 2) is None


def test_chimeral_order_of_eigenform_runs_out_of_levels():
    res = chimeral_order(make_garvan(), j_max=3)
    assert res.order == 3
    assert res.failure is None
    assert res.method == "basis"


def test_chimeral_series_route_is_window_limited():
    res = chimeral_order_series(make_garvan(), j_max=2, n_max=10)
    assert res.order == 2
    assert res.window_limited
    assert res.method == "series"


def test_chimeral_order_rejects_unknown_route():
    with pytest.raises(ValueError, match="unknown route"):
        chimeral_order(make_garvan(), route="guess")


@pytest.mark.slow
def test_chimeral_seed_at_eleven():
    v = ExponentVector(11, CHIMERAL_SEEDS[11][0])
    res = chimeral_order(v, j_max=3)
    assert res.order >= 1
    assert res.failure is not None
    assert certify(v, j_max=3).kind is CertificateKind.CHIMERAL


# ── Slice mining ──────────────────────────────────────────────────


def test_mine_garvan_slice():
    report = mine(5, 4, make_test_config(prime=5, a0=4))
    assert report.total == 4
    assert report.certified_vectors == [make_garvan()]
    assert report.rejected_count + len(report.certified) + len(report.chimeral) == report.total


def test_mine_report_has_no_timing():
    report = mine(5, 4, make_test_config())
    assert "duration_ms" not in report.to_dict()


# ── Dissection congruences ────────────────────────────────────────


def test_holds_mod_garvan_u5():
    f = product_to_precision(make_garvan(), 5 * 12)
    assert holds_mod(f, 5, 0, 5, 12)


def test_dissection_search_finds_garvan_at_zero():
    hits = dissection_congruence_search(5, 4, 5, residues=[0])
    assert [(h.r, h.vector) for h in hits] == [(0, make_garvan())]


def test_expected_table_rows():
    rows = expected_dissection_table("corollary-5s")
    assert rows[0] == {ExponentVector(*GARVAN)}
    assert make_vector(5, 4, 5, 5) in rows[3]


def test_expected_table_unknown_id():
    with pytest.raises(UnsupportedError):
        expected_dissection_table("no-such-table")
