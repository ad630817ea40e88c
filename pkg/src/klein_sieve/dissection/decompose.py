"""Decomposition of f_v(tau/p) over the residue components of M_k(Gamma(p)).

The component of f_v(tau/p) in q^{r/p} Z[[q]] is U_{p,r} f_v, so each row of
a table is the coordinate vector of ``dissect(f_v, p, r)`` in component r.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from klein_sieve.algebra.linalg import solve_columns
from klein_sieve.dissection.bases import gamma_p_basis, member_row, member_series
from klein_sieve.errors import NotInSpanError, TransportError, UnsupportedError
from klein_sieve.klein import product_to_precision
from klein_sieve.models.dissection import DissectionTable, GammaPBasis
from klein_sieve.models.vectors import ExponentVector
from klein_sieve.orbits import (
    apply_sigma,
    dissection_residue_map,
    gamma_matrix,
    lambda_power_sign,
    lambda_sign,
)
from klein_sieve.series import FracSeries, dissect, linear_combination, sub, truncate

log = logging.getLogger(__name__)


def _basis_for(v: ExponentVector, basis: GammaPBasis | None) -> GammaPBasis:
    if v.a0 % 2:
        raise UnsupportedError(f"{v} has odd a0; no integral weight")
    k = v.a0 // 2
    if basis is None:
        return gamma_p_basis(v.p, k)
    if basis.weight != k:
        raise UnsupportedError(f"{v} has weight {k}, basis has weight {basis.weight}")
    return basis


def decompose(v: ExponentVector, basis: GammaPBasis | None = None) -> DissectionTable:
    """Exact coefficients of f_v(tau/p) in every component, solved on the proof window."""
    basis = _basis_for(v, basis)
    p, window = v.p, basis.window
    f = product_to_precision(v, p * window)
    rows: dict[int, tuple[Fraction, ...]] = {}
    for r, members in basis.components.items():
        target = dissect(f, p, r).window(Fraction(r, p), window)
        if not members:
            if any(target):
                raise NotInSpanError(f"U_{{{p},{r}}} of {v} is nonzero but component {r} is empty")
            rows[r] = ()
            continue
        columns = [member_row(w, r, window) for w in members]
        try:
            rows[r] = solve_columns(columns, target)
        except NotInSpanError:
            raise NotInSpanError(f"U_{{{p},{r}}} of {v} is not in component {r}") from None
    return DissectionTable(source=v, rows=rows, method="direct")


def reexpand(table: DissectionTable, basis: GammaPBasis | None = None) -> bool:
    """Sum of rows times member series equals U_{p,r} f on the window, for every r."""
    v = table.source
    basis = _basis_for(v, basis)
    p, window = v.p, basis.window
    f = product_to_precision(v, p * window)
    for r, members in basis.components.items():
        upto = Fraction(r, p) + window
        expected = truncate(dissect(f, p, r), upto)
        pairs = [
            (c, truncate(member_series(w, r, window), upto))
            for c, w in zip(table.rows.get(r, ()), members)
        ]
        got = linear_combination(pairs) if pairs else FracSeries.zero(upto)
        if not sub(expected, got).is_zero:
            log.debug("Re-expansion of %s differs in component %d", v, r)
            return False
    return True


def _sign_product(values) -> int:
    out = 1
    for x in values:
        out *= x
    return out


def _fallback(w: ExponentVector, basis: GammaPBasis, reason: str, strict: bool) -> DissectionTable:
    if strict:
        raise TransportError(f"sigma transport to {w} failed: {reason}")
    log.warning("Sigma transport to %s failed (%s); decomposing directly", w, reason)
    table = decompose(w, basis)
    table.fallback = reason
    return table


def decompose_sigma_image(
    table: DissectionTable,
    n: int,
    basis: GammaPBasis | None = None,
    verify: bool = True,
    strict: bool = False,
) -> DissectionTable:
    """Table of sigma^n(v) from the table of v.

    Component r moves to s^n(r) with s(r) = alpha~^2 r, each member w to
    sigma^n(w), and a coefficient picks up the product of lambda(gamma, .)^-1
    over the source orbit and lambda^p(gamma, .) over the member orbit.  When
    a member image is not listed in the target component, or ``verify`` is set
    and the re-expansion fails, the table is computed directly and the reason
    is kept in ``fallback``; with ``strict`` a TransportError is raised instead.
    """
    v = table.source
    basis = _basis_for(v, basis)
    p = v.p
    n %= v.m
    if n == 0:
        return DissectionTable(source=v, rows=dict(table.rows), method=table.method)
    w = apply_sigma(v, n)
    g = gamma_matrix(p)
    source_sign = _sign_product(lambda_sign(g, apply_sigma(v, i)) for i in range(n))
    rows: dict[int, list[Fraction]] = {
        r: [Fraction(0)] * len(members) for r, members in basis.components.items()
    }
    for r, row in table.rows.items():
        s = r
        for _ in range(n):
            s = dissection_residue_map(p, s)
        for d, c in enumerate(row):
            if not c:
                continue
            member = basis.components[r][d]
            image = apply_sigma(member, n)
            idx = basis.index(s, image)
            if idx is None:
                reason = f"sigma^{n} of {member} not listed in component {s}"
                return _fallback(w, basis, reason, strict)
            member_sign = _sign_product(
                lambda_power_sign(g, apply_sigma(member, i)) for i in range(n)
            )
            rows[s][idx] += source_sign * member_sign * c
    image_table = DissectionTable(
        source=w, rows={r: tuple(row) for r, row in rows.items()}, method="sigma"
    )
    if verify and not reexpand(image_table, basis):
        return _fallback(w, basis, "re-expansion failed", strict)
    return image_table


def verify_slash(v: ExponentVector, basis: GammaPBasis | None = None) -> bool:
    """The lambda signs transport the table of v onto the directly computed table of sigma(v)."""
    basis = _basis_for(v, basis)
    moved = decompose_sigma_image(decompose(v, basis), 1, basis, verify=False)
    direct = decompose(apply_sigma(v), basis)
    return moved.method == "sigma" and moved.rows == direct.rows
