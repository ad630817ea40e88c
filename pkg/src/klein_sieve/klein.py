"""Klein forms K_{p,i}, the products f_a, the ell invariant and the modularity criterion.

For an exponent vector a = (a0, a1, ..., a_m) at a prime p,

    f_a = q^ell * (q^p; q^p)^{a0} * prod_i (q^i, q^{p-i}; q^p)^{a_i}

and the coefficient of q^{ell + n} is P_a(n).  Internally the product is
assembled from the sparse Jacobi-triple-product series
theta_i = (q^i, q^{p-i}, q^p; q^p) and the pentagonal series E = (q^p; q^p):

    f_a = q^ell * E^{a0 - sum a_i} * prod_i theta_i^{a_i}.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from functools import lru_cache

from sympy.utilities.iterables import partitions

from klein_sieve.models.vectors import CuspOrderProfile, ExponentVector
from klein_sieve.orbits import apply_sigma
from klein_sieve.series import (
    FracSeries,
    euler_power,
    euler_series,
    mul,
    shift,
    theta_power,
    theta_series,
)

log = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Invariants
# ---------------------------------------------------------------------------


def ell(v: ExponentVector) -> Fraction:
    """``ell = p*s/24 - sum_i i(p-i) a_i / (2p)``; not assumed integral."""
    p = v.p
    twisted = sum(i * (p - i) * v.a[i] for i in range(1, v.m + 1))
    return Fraction(p * v.eta_exponent, 24) - Fraction(twisted, 2 * p)


def ell_residue(v: ExponentVector) -> int | None:
    """r with ``f_v`` in q^{r/p} Z[[q]], or None when p*ell is not an integer."""
    scaled = ell(v) * v.p
    if scaled.denominator != 1:
        return None
    return int(scaled) % v.p


def cusp_order_numerators(v: ExponentVector) -> list[int]:
    """``24 p * ord_{c/p}(f_v)`` for c = 1..m, in integer arithmetic."""
    p = v.p
    s = v.eta_exponent
    out = []
    for c in range(1, v.m + 1):
        acc = p * p * s
        for i in range(1, v.m + 1):
            r = i * c % p
            acc -= 12 * r * (p - r) * v.a[i]
        out.append(acc)
    return out


def cusp_orders(v: ExponentVector) -> CuspOrderProfile:
    scale = 24 * v.p
    return CuspOrderProfile(
        p=v.p,
        orders={c: Fraction(n, scale) for c, n in enumerate(cusp_order_numerators(v), start=1)},
    )


def is_modular(v: ExponentVector) -> tuple[bool, int | None]:
    """Membership of ``f_v`` in M_{a0/2}(Gamma_1(p)) and its weight."""
    s = v.eta_exponent
    if v.a0 <= 0 or s < 0 or s % 24:
        return False, None
    if sum(i * i * v.a[i] for i in range(1, v.m + 1)) % v.p:
        return False, None
    if any(n < 0 for n in cusp_order_numerators(v)):
        return False, None
    return True, v.a0 // 2


# ---------------------------------------------------------------------------
# Series
# ---------------------------------------------------------------------------


def klein_series(p: int, i: int, N: int) -> FracSeries:
    """``K_{p,i} = q^{i(i-p)/(2p)} (q^i, q^{p-i}; q^p) / (q^p; q^p)^2`` with ``N`` further terms."""
    if not 1 <= i <= (p - 1) // 2:
        raise ValueError(f"index {i} outside 1..{(p - 1) // 2} for p={p}")
    length = N + 1
    body = mul(theta_series(p, i, length), euler_power(p, -3, length))
    return shift(body, Fraction(i * (i - p), 2 * p))


@lru_cache(maxsize=4096)
def _tail_product(p: int, tail: tuple[int, ...], length: int) -> FracSeries:
    """``prod theta_i^{a_i}`` over the given prefix of the tail (memoized per prefix)."""
    if not tail:
        return FracSeries.constant(1, length)
    head = _tail_product(p, tail[:-1], length)
    e = tail[-1]
    if e == 0:
        return head
    return mul(head, theta_power(p, len(tail), e, length))


def product_series(v: ExponentVector, N: int) -> FracSeries:
    """``f_v`` with the coefficients P_v(0..N), i.e. known below ``q^{ell + N + 1}``."""
    length = N + 1
    body = mul(_tail_product(v.p, v.tail, length), euler_power(v.p, v.a0 - sum(v.tail), length))
    return shift(body, ell(v))


def product_to_precision(v: ExponentVector, prec: int) -> FracSeries:
    """``f_v`` known below the absolute exponent ``prec``."""
    return product_series(v, max(math.ceil(prec - ell(v)) - 1, 0))


def coefficient_sequence(v: ExponentVector, N: int) -> list[int]:
    """``P_v(0), ..., P_v(N)``."""
    f = product_series(v, N)
    return [int(c) for c in f.window(ell(v), N + 1)]


def clear_caches() -> None:
    """Drop memoized building blocks (between long runs at different primes)."""
    _tail_product.cache_clear()
    theta_power.cache_clear()
    euler_power.cache_clear()
    theta_series.cache_clear()
    euler_series.cache_clear()


# ---------------------------------------------------------------------------
# Weighted colored partitions
# ---------------------------------------------------------------------------


def _part_weight(exponent: int, multiplicity: int) -> int:
    if exponent >= 0:
        return (-1) ** multiplicity * math.comb(exponent, multiplicity)
    return math.comb(-exponent + multiplicity - 1, multiplicity)


def colored_partition_count(v: ExponentVector, n: int) -> int:
    """P_v(n) as a signed weighted count of partitions of n.

    A part k belongs to color class i when k = +-i (mod p), class 0 when
    p | k; a part size used j times contributes the j-th coefficient of
    (1 - x)^{a_class}.
    """
    total = 0
    for parts in partitions(n):
        weight = 1
        for k, mult in parts.items():
            cls = min(k % v.p, v.p - k % v.p)
            weight *= _part_weight(v.a[cls], mult)
            if not weight:
                break
        total += weight
    return total


# ---------------------------------------------------------------------------
# Eigen criterion
# ---------------------------------------------------------------------------


def check_low_coefficient_vanishing(v: ExponentVector) -> bool:
    """For 2 <= j <= (p-1)/2, every ``b_j(p s)`` with ``s < ell_j`` vanishes.

    ``b_j`` are the coefficients of ``f_{sigma^j v}`` and ``ell_j`` its ell.
    """
    p = v.p
    for j in range(2, v.m + 1):
        w = apply_sigma(v, j)
        lj = ell(w)
        if lj.denominator != 1:
            return False
        lj = int(lj)
        if lj <= 1:
            continue
        f = product_to_precision(w, p * (lj - 1) + 1)
        for s in range(lj):
            if f.coefficient(p * s):
                log.debug("b_%d(%d) != 0 for %s", j, p * s, w)
                return False
    return True


# ---------------------------------------------------------------------------
# Dimensions and windows
# ---------------------------------------------------------------------------


def dim_gamma1(p: int, k: int) -> int:
    """dim M_k(Gamma_1(p)) for a prime p >= 5 and k >= 1."""
    genus = (p - 5) * (p - 7) // 24
    return (k - 1) * (genus - 1) + k * (p - 1) // 2


def dim_gamma_p_weight1(p: int) -> int:
    """dim M_1(Gamma(p))."""
    return (p * p - 1) // 4


def sturm_bound(p: int, k: int) -> int:
    """Coefficients that determine a weight-k form on Gamma_1(p)."""
    return math.ceil(Fraction(k * (p * p - 1), 12))


def proof_window(p: int, k: int, ell_max: int = 0) -> int:
    """Coefficient window used for every proof-grade comparison: Sturm + ell slack + 8."""
    return sturm_bound(p, k) + ell_max + 8

