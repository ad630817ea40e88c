"""sigma_p, orbits, gamma_p and the residue map of the dissection."""

from __future__ import annotations

import pytest

from klein_sieve.orbits import (
    apply_sigma,
    dissection_residue_map,
    gamma_matrix,
    least_residue,
    orbit,
    orbit_size_class,
    sigma,
)

from tests.factories import make_top_family, make_vector


# ── sigma_p ───────────────────────────────────────────────────────


@pytest.mark.parametrize("p,alpha,cycle", [
    (5, 2, (1, 2)),
    (7, 2, (1, 2, 3)),
    (11, 2, (1, 2, 4, 3, 5)),
    (13, 2, (1, 2, 4, 5, 3, 6)),
])
def test_sigma_cycle(p, alpha, cycle):
    data = sigma(p)
    assert data.alpha == alpha
    assert data.cycle == cycle
    assert data.alpha * data.alpha_inv % p == 1


def test_least_residue():
    assert least_residue(12, 7) == 2
    assert least_residue(-1, 7) == 1


def test_apply_sigma_reads_successor_entries():
    """(2, -2, 0, 1) → (2, 0, 1, -2) at p = 7."""
    assert apply_sigma(make_vector(7, 2, -2, 0, 1)) == make_vector(7, 2, 0, 1, -2)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_sigma_has_order_m(p):
    v = make_top_family(p)
    assert apply_sigma(v, v.m) == v
    assert apply_sigma(apply_sigma(v), v.m - 1) == v


# ── Orbits ────────────────────────────────────────────────────────


def test_orbit_members_are_distinct():
    members = orbit(make_top_family(13))
    assert len(members) == len(set(members)) == 6
    assert members[0] == make_top_family(13)


def test_orbit_size_classes():
    assert orbit_size_class(make_vector(7, 4, 1, 1, 1)) == 1
    assert orbit_size_class(make_top_family(5)) == 2
    # constant on the cosets {1, 4, 3} and {2, 5, 6} of the squares
    assert orbit_size_class(make_vector(13, 4, 1, -1, 1, 1, -1, -1)) == 2


# ── gamma_p ───────────────────────────────────────────────────────


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23])
def test_gamma_matrix_shape(p):
    g = gamma_matrix(p)
    assert g.det == 1
    assert g.a == sigma(p).alpha_inv
    assert g.b == p
    assert g.c % p == 0


def test_gamma_matrix_printed_level():
    g = gamma_matrix(13)
    assert (g.a, g.b, g.c, g.d) == (7, 13, 78, 145)


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_dissection_residue_map_is_a_permutation(p):
    image = [dissection_residue_map(p, r) for r in range(p)]
    assert sorted(image) == list(range(p))
    assert image[0] == 0


def test_dissection_residue_map_at_seven():
    assert [dissection_residue_map(7, r) for r in range(7)] == [0, 2, 4, 6, 1, 3, 5]
