"""Monomial bases of M_k(Gamma_1(p)) in the weight-one generators x_n = f_{sigma^n(a_p)}.

A monomial prod x_n^{e_n} is itself a product f_v with v = sum e_n sigma^n(a_p),
so its series comes straight from ``product_series``.  The printed families
are used where they exist; missing or dependent members are replaced by a
greedy rank fill over all degree-k monomials.
"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator, Mapping
from fractions import Fraction
from functools import lru_cache

from klein_sieve.algebra.linalg import IncrementalEchelon, solve_columns
from klein_sieve.data import GENERATORS, PRINTED_BASES, parse_monomials
from klein_sieve.errors import UnsupportedError
from klein_sieve.klein import dim_gamma1, product_to_precision, proof_window
from klein_sieve.models.algebra import Monomial, OrderedBasis
from klein_sieve.models.vectors import ExponentVector
from klein_sieve.orbits import apply_sigma
from klein_sieve.series import FracSeries, integral_support, linear_combination

log = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Generators and monomials
# ---------------------------------------------------------------------------


def generator_vectors(p: int) -> tuple[ExponentVector, ...]:
    """(x_0, ..., x_{m-1}) as exponent vectors."""
    if p not in GENERATORS:
        raise UnsupportedError(f"no weight-one generator tabulated for p={p}")
    base = ExponentVector(p, GENERATORS[p])
    return tuple(apply_sigma(base, n) for n in range(base.m))


def monomial_vector(p: int, mono: Monomial) -> ExponentVector:
    gens = generator_vectors(p)
    total = [0] * ((p + 1) // 2)
    for e, g in zip(mono, gens):
        if e:
            for i, x in enumerate(g.a):
                total[i] += e * x
    return ExponentVector(p, tuple(total))


def monomial_series(p: int, mono: Monomial, prec: int) -> FracSeries:
    return product_to_precision(monomial_vector(p, mono), prec)


def polynomial_series(p: int, poly: Mapping[Monomial, Fraction | int], prec: int) -> FracSeries:
    """Series of a polynomial in the generators, known below q^prec."""
    return linear_combination((c, monomial_series(p, mono, prec)) for mono, c in poly.items())


def _mono(m: int, **powers: int) -> Monomial:
    exps = [0] * m
    for name, e in powers.items():
        exps[int(name[1:])] += e
    return tuple(exps)


def all_monomials(m: int, k: int) -> Iterator[Monomial]:
    """Degree-k monomials in m variables, in the order x0^k, x0^(k-1) x1, ..."""
    for combo in itertools.combinations_with_replacement(range(m), k):
        exps = [0] * m
        for i in combo:
            exps[i] += 1
        yield tuple(exps)


# ---------------------------------------------------------------------------
# Printed families
# ---------------------------------------------------------------------------


def _family_5(k: int) -> list[Monomial]:
    return [(k - j, j) for j in range(k + 1)]


def _family_7(k: int) -> list[Monomial]:
    out = [_mono(3, x0=k), _mono(3, x1=k), _mono(3, x2=k)]
    for j in range(1, k // 2 + 1):
        out.append(_mono(3, x0=k - j, x2=j))
        out.append(_mono(3, x1=k - j, x2=j))
    for j in range(1, (k - 1) // 2 + 1):
        out.append(_mono(3, x0=j, x2=k - j))
        out.append(_mono(3, x1=j, x2=k - j))
    return out


def _pair(m: int, a: int, b: int, j: int, c: int, rest: int) -> Monomial:
    exps = [0] * m
    exps[a] += j
    exps[b] += j
    exps[c] += rest
    return tuple(exps)


def _family_11(k: int) -> list[Monomial]:
    out = [tuple(k if i == n else 0 for i in range(5)) for n in range(5)]
    for j in range(1, k // 2 + 1):
        r = k - 2 * j
        out += [
            _pair(5, 0, 3, j, 0, r),
            _pair(5, 2, 4, j, 2, r),
            _pair(5, 3, 1, j, 3, r),
            _pair(5, 1, 2, j, 1, r),
            _pair(5, 4, 0, j, 4, r),
        ]
    for j in range(1, (k - 1) // 2 + 1):
        r = k - 2 * j
        # the printed second member of this block names x5, which does not exist
        out += [
            _pair(5, 0, 2, j, 1, r),
            _pair(5, 3, 1, j, 2, r),
            _pair(5, 1, 2, j, 4, r),
            _pair(5, 4, 1, j, 0, r),
        ]
    return out


def printed_family(p: int, k: int) -> list[Monomial] | None:
    """The printed monomial list for (p, k), or None where nothing is printed."""
    if p == 5 and k <= 3:
        return _family_5(k)
    if p == 7 and k <= 3:
        return _family_7(k)
    if p == 11 and k <= 5:
        return _family_11(k)
    if (p, k) in PRINTED_BASES:
        return list(parse_monomials(PRINTED_BASES[(p, k)], (p - 1) // 2))
    return None


# ---------------------------------------------------------------------------
# Basis construction and coordinates
# ---------------------------------------------------------------------------


def _window_row(p: int, mono: Monomial, window: int) -> tuple[FracSeries, tuple[Fraction, ...]]:
    f = monomial_series(p, mono, window)
    return f, tuple(f.window(0, window))


@lru_cache(maxsize=64)
def build_basis(p: int, k: int) -> OrderedBasis:
    """Ordered basis of M_k(Gamma_1(p)) for 5 <= p <= 19 and k >= 1.

    Printed families are kept in their printed order; members that do not
    raise the rank are dropped and the basis is completed from all degree-k
    monomials in order.  Raises UnsupportedError if the rank cannot reach
    dim M_k(Gamma_1(p)) on the proof window.
    """
    if p not in GENERATORS:
        raise UnsupportedError(f"no weight-one generators for p={p} (supported: 5..19)")
    if k < 1:
        raise UnsupportedError(f"weight must be positive, got {k}")
    m = (p - 1) // 2
    dim = dim_gamma1(p, k)
    window = proof_window(p, k)

    ech = IncrementalEchelon()
    monomials: list[Monomial] = []
    series: list[FracSeries] = []
    rows: list[tuple[Fraction, ...]] = []
    seen: set[Monomial] = set()

    def offer(mono: Monomial) -> None:
        if mono in seen or len(monomials) == dim:
            return
        seen.add(mono)
        f, row = _window_row(p, mono, window)
        if ech.add(row):
            monomials.append(mono)
            series.append(f)
            rows.append(row)

    printed = printed_family(p, k)
    if printed is not None:
        for mono in printed:
            offer(mono)
        dropped = len(set(printed)) - len(monomials)
        source = "printed" if not dropped and len(monomials) == dim else "printed+fill"
        if dropped:
            log.debug("p=%d k=%d: %d printed monomials dependent on earlier ones", p, k, dropped)
    else:
        source = "greedy"
    if len(monomials) < dim:
        for mono in all_monomials(m, k):
            offer(mono)
            if len(monomials) == dim:
                break
    if len(monomials) != dim:
        raise UnsupportedError(
            f"monomials reach rank {len(monomials)} of dim M_{k}(Gamma_1({p})) = {dim}"
        )
    vectors = tuple(monomial_vector(p, mono) for mono in monomials)
    log.info("Basis for M_%d(Gamma_1(%d)): dim %d (%s), window %d", k, p, dim, source, window)
    return OrderedBasis(
        p=p,
        k=k,
        monomials=tuple(monomials),
        vectors=vectors,
        series=tuple(series),
        rows=tuple(rows),
        window=window,
        source=source,
    )


def represent(f: FracSeries, basis: OrderedBasis) -> tuple[Fraction, ...]:
    """Exact coordinates of ``f`` in ``basis``.

    ``f`` must be supported on integer exponents and known on the whole
    proof window; every coefficient of the window has to match, otherwise
    NotInSpanError is raised.
    """
    g = integral_support(f)
    target = g.window(0, basis.window)
    return solve_columns(basis.rows, target)


def coordinates(v: ExponentVector, basis: OrderedBasis | None = None) -> tuple[Fraction, ...]:
    """Coordinates of f_v in the basis of its weight."""
    if basis is None:
        basis = build_basis(v.p, v.a0 // 2)
    return represent(product_to_precision(v, basis.window), basis)


def polynomial_coordinates(
    basis: OrderedBasis, poly: Mapping[Monomial, Fraction | int]
) -> tuple[Fraction, ...]:
    return represent(polynomial_series(basis.p, poly, basis.window), basis)
