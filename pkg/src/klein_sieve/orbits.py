"""The sigma_p permutation, orbits of exponent vectors, gamma_p and the slash-action sign.

Convention: ``sigma_p`` is the cycle ``(1, [alpha], [alpha^2], ...)`` of
least-absolute residues, and ``apply_sigma`` follows the literal display
``(a0, a_{sigma(1)}, a_{sigma(2)}, ...)``, so entry i of the image is the
entry of the input at the successor of i in the cycle.  The opposite
convention generates the same orbits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import divisors

from klein_sieve.errors import NotModularError
from klein_sieve.models.vectors import ExponentVector

# Matrices printed for the levels where the choice of beta matters for the tables.
PRINTED_GAMMA: dict[int, tuple[int, int, int, int]] = {
    13: (7, 13, 78, 145),
    17: (6, 17, 85, 241),
    19: (10, 19, 171, 325),
}


def least_residue(x: int, p: int) -> int:
    """Representative of ``x`` in (Z/pZ)^x / {+-1} taken in 1..(p-1)/2."""
    r = x % p
    return min(r, p - r)


@dataclass(frozen=True)
class PrimitiveRootData:
    """Generator data for (Z/pZ)^x / {+-1}."""

    p: int
    alpha: int  # least positive generator of the quotient group
    alpha_inv: int  # alpha^{-1} mod p in 1..p-1
    cycle: tuple[int, ...]  # (1, [alpha], [alpha^2], ...)

    @property
    def m(self) -> int:
        return (self.p - 1) // 2

    def successor(self, i: int, steps: int = 1) -> int:
        """``sigma^steps(i)`` on indices 1..m."""
        pos = self.cycle.index(i)
        return self.cycle[(pos + steps) % self.m]


@dataclass(frozen=True)
class GammaMatrix:
    """The matrix (alpha~, p; p*beta, delta) of Gamma_0(p) used for the slash action."""

    a: int
    b: int
    c: int
    d: int

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c


@lru_cache(maxsize=None)
def sigma(p: int) -> PrimitiveRootData:
    m = (p - 1) // 2
    for alpha in range(2, p):
        cycle = []
        x = 1
        for _ in range(m):
            cycle.append(least_residue(x, p))
            x = x * alpha % p
        if len(set(cycle)) == m:
            return PrimitiveRootData(p, alpha, pow(alpha, -1, p), tuple(cycle))
    # p = 5 has m = 2 and alpha = 2; every prime >= 5 has a generator.
    raise ValueError(f"no generator of (Z/{p}Z)^x/(+-1) found")


def apply_sigma(v: ExponentVector, j: int = 1) -> ExponentVector:
    """``sigma_p^j`` acting on the tail; a0 is fixed."""
    data = sigma(v.p)
    j %= v.m
    if j == 0:
        return v
    tail = tuple(v.a[data.successor(i, j)] for i in range(1, v.m + 1))
    return v.with_tail(tail)


def orbit(v: ExponentVector) -> tuple[ExponentVector, ...]:
    """Distinct members ``v, sigma v, sigma^2 v, ...`` in iteration order."""
    members = [v]
    w = apply_sigma(v)
    while w != v:
        members.append(w)
        w = apply_sigma(w)
    return tuple(members)


def orbit_size_class(v: ExponentVector) -> int:
    """Orbit size, computed by iteration and by the stabilizer pattern (which must agree)."""
    by_iteration = len(orbit(v))
    data = sigma(v.p)
    by_pattern = v.m
    for d in divisors(v.m):
        # v is fixed by sigma^d iff a_i = a_j whenever i and j differ by a power of alpha^d.
        if all(v.a[i] == v.a[data.successor(i, d)] for i in range(1, v.m + 1)):
            by_pattern = d
            break
    if by_iteration != by_pattern:
        raise RuntimeError(
            f"orbit size mismatch for {v}: iteration {by_iteration}, pattern {by_pattern}"
        )
    return by_iteration


@lru_cache(maxsize=None)
def gamma_matrix(p: int) -> GammaMatrix:
    """Printed matrix for p in {13, 17, 19}; otherwise the least beta >= 0 completion."""
    if p in PRINTED_GAMMA:
        return GammaMatrix(*PRINTED_GAMMA[p])
    at = sigma(p).alpha_inv
    beta = 0
    while (1 + p * p * beta) % at:
        beta += 1
    return GammaMatrix(at, p, p * beta, (1 + p * p * beta) // at)


def _slash_data(g: GammaMatrix, v: ExponentVector) -> tuple[int, Fraction]:
    """(number of sign flips from sgn(r_i)^{a_i}, exponent A(gamma, v))."""
    p, m = v.p, v.m
    flips = 0
    total = Fraction(0)
    for i in range(1, m + 1):
        r = g.a * i % p
        if r > m:
            r -= p
        q = (g.a * i - r) // p
        if r < 0:
            flips += v.a[i]
        total += (q * i + i + q + Fraction(r * i, p)) * v.a[i]
    return flips, total


def lambda_sign(g: GammaMatrix, v: ExponentVector) -> int:
    """Sign relating ``f_v(tau/p)`` slashed by gamma_p to ``f_{sigma v}(tau/p)``."""
    flips, total = _slash_data(g, v)
    if total.denominator != 1:
        raise NotModularError()
    return -1 if (flips + int(total)) % 2 else 1


def lambda_power_sign(g: GammaMatrix, v: ExponentVector) -> int:
    """``lambda^p``: the sign relating ``f_v`` slashed by gamma_p to ``f_{sigma v}``."""
    flips, total = _slash_data(g, v)
    scaled = total * v.p
    if scaled.denominator != 1:
        raise NotModularError(f"p * A(gamma, v) is not integral for {v}")
    return -1 if (flips + int(scaled)) % 2 else 1


def dissection_residue_map(p: int, r: int) -> int:
    """``s(r) = alpha~^2 r mod p``: where residue class r lands under sigma_p."""
    return sigma(p).alpha_inv ** 2 * r % p
