"""Bases of M_k(Gamma(p)) split into the residue components q^{r/p} Z[[q]].

Weight one: explicit Klein-quotient lists for p = 5, 7, 11; for 13, 17, 19
the sigma-orbits of two printed seed lists, with the generator orbit at r = 0.
Higher weights are products of weight-one members whose residues add up to r.
"""

from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from functools import lru_cache

from klein_sieve.algebra.linalg import IncrementalEchelon, rank
from klein_sieve.data import GAMMA_P_COMPONENTS, GAMMA_P_SEEDS, GENERATORS
from klein_sieve.errors import KleinSieveError, UnsupportedError
from klein_sieve.klein import dim_gamma_p_weight1, ell, product_to_precision, proof_window
from klein_sieve.models.dissection import GammaPBasis
from klein_sieve.models.vectors import ExponentVector
from klein_sieve.orbits import apply_sigma, sigma
from klein_sieve.series import FracSeries

log = logging.getLogger(__name__)

# Products tried per weight before giving up on a component.
MAX_PRODUCT_CANDIDATES = 20_000


def residue_of(v: ExponentVector) -> int:
    """r with f_v in q^{r/p} Z[[q]]; raises when p * ell is not an integer."""
    scaled = ell(v) * v.p
    if scaled.denominator != 1:
        raise UnsupportedError(f"{v} does not sit on the q^(1/{v.p}) grid")
    return int(scaled) % v.p


def member_series(v: ExponentVector, r: int, window: int) -> FracSeries:
    """f_v known on the exponents r/p + n, n < window."""
    return product_to_precision(v, Fraction(r, v.p) + window)


def member_row(v: ExponentVector, r: int, window: int) -> list[Fraction]:
    return member_series(v, r, window).window(Fraction(r, v.p), window)


def _weight_one_components(p: int) -> dict[int, tuple[ExponentVector, ...]]:
    if p in GAMMA_P_COMPONENTS:
        return {
            r: tuple(ExponentVector(p, a) for a in members)
            for r, members in GAMMA_P_COMPONENTS[p].items()
        }
    if p not in GAMMA_P_SEEDS:
        raise UnsupportedError(f"no Gamma({p}) basis tabulated (supported: 5..19)")
    residues, nonresidues = GAMMA_P_SEEDS[p]
    at = sigma(p).alpha_inv
    gen = ExponentVector(p, GENERATORS[p])
    components = {0: tuple(apply_sigma(gen, n) for n in range(gen.m))}
    for n in range(gen.m):
        even = pow(at, 2 * n, p)
        odd = pow(at, 2 * n + 1, p)
        components[even] = tuple(apply_sigma(ExponentVector(p, a), n) for a in residues)
        components[odd] = tuple(apply_sigma(ExponentVector(p, a), n) for a in nonresidues)
    return dict(sorted(components.items()))


def _product_components(
    p: int, base: dict[int, tuple[ExponentVector, ...]], k: int, window: int
) -> dict[int, tuple[ExponentVector, ...]]:
    members = [(r, v) for r, vs in base.items() for v in vs]
    combos = itertools.combinations_with_replacement(range(len(members)), k)
    by_residue: dict[int, list[ExponentVector]] = {r: [] for r in range(p)}
    echelons = {r: IncrementalEchelon() for r in range(p)}
    tried = 0
    for combo in combos:
        tried += 1
        if tried > MAX_PRODUCT_CANDIDATES:
            raise UnsupportedError(
                f"weight-{k} Gamma({p}) components need more than {MAX_PRODUCT_CANDIDATES} products"
            )
        r = sum(members[i][0] for i in combo) % p
        total = [0] * ((p + 1) // 2)
        for i in combo:
            for j, x in enumerate(members[i][1].a):
                total[j] += x
        v = ExponentVector(p, tuple(total))
        if v in by_residue[r]:
            continue
        if echelons[r].add(member_row(v, r, window)):
            by_residue[r].append(v)
    return {r: tuple(vs) for r, vs in by_residue.items()}


@lru_cache(maxsize=32)
def gamma_p_basis(p: int, k: int = 1) -> GammaPBasis:
    """Component bases of M_k(Gamma(p)) for 5 <= p <= 19.

    Every member is checked to lie in the component it is filed under, and
    each component is rank-checked on the proof window.
    """
    window = proof_window(p, k)
    components = _weight_one_components(p)
    if k > 1:
        components = _product_components(p, components, k, window)
    for r, members in components.items():
        for v in members:
            if residue_of(v) != r:
                raise UnsupportedError(f"{v} belongs to residue {residue_of(v)}, filed under {r}")
        if members and rank([member_row(v, r, window) for v in members]) != len(members):
            raise UnsupportedError(f"component {r} of Gamma({p}) weight {k} is rank deficient")
    basis = GammaPBasis(
        p=p,
        generator=ExponentVector(p, GENERATORS[p]),
        components=components,
        weight=k,
        window=window,
    )
    if k == 1 and basis.dim != (expected := dim_gamma_p_weight1(p)):
        raise KleinSieveError(
            f"Gamma({p}) weight-one basis has {basis.dim} members, expected {expected}"
        )
    log.debug("Gamma(%d) weight %d: component sizes %s", p, k,
              {r: len(c) for r, c in components.items()})
    return basis
