"""Gamma(p) component bases, decomposition tables, sigma transport and relations."""

from __future__ import annotations

import sys
from fractions import Fraction

import pytest

from klein_sieve.algebra.basis import generator_vectors
from klein_sieve.data import DISSECTION_ROWS
from klein_sieve.dissection.bases import gamma_p_basis, residue_of
from klein_sieve.dissection.decompose import (
    decompose,
    decompose_sigma_image,
    reexpand,
    verify_slash,
)
from klein_sieve.dissection.level10 import (
    garvan_checks,
    level10_u,
    verify_garvan5,
    verify_u_expansions,
)
from klein_sieve.dissection.relations import check_printed_relations, verify_klein_relation
from klein_sieve.errors import KleinSieveError, TransportError, UnsupportedError
from klein_sieve.klein import dim_gamma_p_weight1, product_to_precision
from klein_sieve.orbits import apply_sigma
from klein_sieve.series import dissect

from tests.factories import make_garvan, make_vector


# ── Bases ─────────────────────────────────────────────────────────


@pytest.mark.parametrize("p", [
    5, 7, 11,
    pytest.param(13, marks=pytest.mark.slow),
    pytest.param(17, marks=pytest.mark.slow),
    pytest.param(19, marks=pytest.mark.slow),
])
def test_gamma_p_basis_dimension(p):
    """(p^2 - 1) / 4 members spread over all p residue classes."""
    basis = gamma_p_basis(p)
    assert basis.dim == dim_gamma_p_weight1(p)
    assert set(basis.components) == set(range(p))


def test_gamma_p_basis_wrong_dimension_raises(mocker):
    gamma_p_basis.cache_clear()
    mocker.patch("klein_sieve.dissection.bases.dim_gamma_p_weight1", return_value=7)
    with pytest.raises(KleinSieveError, match="has 6 members, expected 7"):
        gamma_p_basis(5)
    gamma_p_basis.cache_clear()


def test_generator_orbit_sits_at_residue_zero():
    basis = gamma_p_basis(7)
    assert basis.components[0] == generator_vectors(7)


def test_residue_of():
    assert residue_of(make_garvan()) == 0
    with pytest.raises(UnsupportedError):
        residue_of(make_vector(5, 2, 1, 0))


def test_decompose_rejects_odd_a0():
    with pytest.raises(UnsupportedError, match="odd a0"):
        decompose(make_vector(5, 3, 0, 0))


# ── Decomposition rows ────────────────────────────────────────────


@pytest.mark.parametrize("p", [5, 7])
def test_generator_rows_match_table(p):
    """x_n(tau/p) rows agree with the tabulated ones, row 0 being the unit vector e_n."""
    basis = gamma_p_basis(p)
    gens = generator_vectors(p)
    for n, rows in DISSECTION_ROWS[p].items():
        table = decompose(gens[n], basis)
        for r, row in rows.items():
            assert table.row(r) == row, (n, r)
        assert reexpand(table, basis)


def test_dissect_row_at_seven():
    table = decompose(make_vector(7, 2, -2, 0, 1))
    assert table.row(2) == (1, 3)
    assert table.to_dict()["rows"]["2"] == ["1", "3"]


@pytest.mark.parametrize("p", [5, 7])
def test_slash_signs_transport_tables(p):
    assert verify_slash(generator_vectors(p)[0])


def test_sigma_image_matches_direct_decomposition():
    v = generator_vectors(7)[0]
    basis = gamma_p_basis(7)
    moved = decompose_sigma_image(decompose(v, basis), 2, basis)
    assert moved.source == apply_sigma(v, 2)
    assert moved.rows == decompose(apply_sigma(v, 2), basis).rows
    assert moved.method == "sigma"
    assert moved.fallback is None


def test_sigma_image_records_failed_reexpansion(mocker):
    """A transported table that does not re-expand → direct table, reason kept."""
    mocker.patch.object(sys.modules["klein_sieve.dissection.decompose"], "reexpand", return_value=False)
    v = generator_vectors(7)[0]
    basis = gamma_p_basis(7)
    moved = decompose_sigma_image(decompose(v, basis), 1, basis)
    assert moved.method == "direct"
    assert moved.fallback == "re-expansion failed"
    assert moved.to_dict()["fallback"] == "re-expansion failed"


def test_sigma_image_strict_raises(mocker):
    mocker.patch.object(sys.modules["klein_sieve.dissection.decompose"], "reexpand", return_value=False)
    v = generator_vectors(7)[0]
    basis = gamma_p_basis(7)
    with pytest.raises(TransportError, match="re-expansion failed"):
        decompose_sigma_image(decompose(v, basis), 1, basis, strict=True)


def test_sigma_image_unlisted_member(mocker):
    """A member whose sigma image is missing from the target component is named."""
    basis = gamma_p_basis(7)
    mocker.patch.object(type(basis), "index", return_value=None)
    v = generator_vectors(7)[0]
    moved = decompose_sigma_image(decompose(v, basis), 1, basis)
    assert moved.method == "direct"
    assert "not listed in component" in moved.fallback


def test_sigma_image_of_zero_steps_is_a_copy():
    table = decompose(generator_vectors(5)[0])
    same = decompose_sigma_image(table, 0)
    assert same.rows == table.rows
    assert same is not table


# ── Relations ─────────────────────────────────────────────────────


def test_klein_relations_at_seven():
    """x0 x1 - x1 x2 - x0 x2 = 0 with x_n = f_{sigma^n (2,-2,0,1)}."""
    assert check_printed_relations(7) == [True]


def test_klein_relation_rejects_other_labelling():
    """The level-7 relation with x1 and x2 swapped is not a relation."""
    swapped = {(1, 0, 1): 1, (0, 1, 1): -1, (1, 1, 0): -1}
    assert not verify_klein_relation(7, swapped)


def test_failing_relation_is_reported(mocker):
    mocker.patch.dict("klein_sieve.dissection.relations.KLEIN_RELATIONS",
                      {7: ("x0x1 - x1x2 - x0x2", "x0x1 - x0x2")})
    assert check_printed_relations(7) == [True, False]


@pytest.mark.slow
@pytest.mark.parametrize("p", [11, 13])
def test_klein_relations_higher_levels(p):
    verdicts = check_printed_relations(p)
    assert len(verdicts) == 5
    assert all(verdicts)


def test_relation_must_be_homogeneous():
    with pytest.raises(ValueError, match="homogeneous"):
        verify_klein_relation(7, {(2, 0, 0): 1, (1, 0, 0): -1})


# ── Level ten ─────────────────────────────────────────────────────


def test_level_ten_integral_pair():
    """u_0 vanishes at q = 0, u_5 starts with 1, and u_0 u_5 = f_{4,-1,-1}."""
    u0 = product_to_precision(level10_u(0), 4)
    u5 = product_to_precision(level10_u(5), 4)
    assert u0.window(0, 3) == [0, 1, -2]
    assert u5.window(0, 3) == [1, 3, 4]
    assert tuple(x + y for x, y in zip(level10_u(0).a, level10_u(5).a)) == (4, -1, -1)


def test_level_ten_leading_images():
    """U_{10,3} f starts 2 q^(3/10) (= p(2)), U_{10,7} f starts 6 q^(7/10) (= p(6) - 5)."""
    f = product_to_precision(make_garvan(), 40)
    assert dissect(f, 10, 3).coefficient(Fraction(3, 10)) == 2
    assert dissect(f, 10, 7).coefficient(Fraction(7, 10)) == 6


def test_level_ten_u_expansions():
    assert verify_u_expansions(30)


def test_level_ten_checks_short_window():
    checks = garvan_checks(60)
    assert checks and all(checks.values()), checks


@pytest.mark.slow
def test_level_ten_full_window():
    assert verify_garvan5(300)
