"""Certificates for a(p^j n) = 0 (mod p^(alpha j)).

Let mu = x^d + c_{d-1} x^{d-1} + ... + c_0 be the minimal polynomial of U_p
on the coordinates of f.  If v_p(c_i) >= alpha (d - i) for every i and
v_p(U_p^n f) >= alpha n for 1 <= n < d, then the recursion
U_p^n f = -sum c_i U_p^(n-d+i) f carries v_p(U_p^n f) >= alpha n to all n.
Valuations of forms are read on the proof window, which bounds them by
Sturm's theorem.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from klein_sieve.algebra.basis import represent
from klein_sieve.algebra.hecke import build_up_matrix
from klein_sieve.algebra.linalg import krylov_min_poly
from klein_sieve.algebra.poly import newton_polygon_valuations, padic_valuation, recursion_alpha
from klein_sieve.errors import KleinSieveError, UnsupportedError
from klein_sieve.klein import product_to_precision
from klein_sieve.miner.chimeral import chimeral_order, chimeral_order_basis, chimeral_order_series
from klein_sieve.models.certificates import CertificateKind, ChimeralResult, CongruenceCertificate
from klein_sieve.models.vectors import ExponentVector
from klein_sieve.series import dissect

log = logging.getLogger(__name__)

# Largest alpha tried when mu = x^d puts no bound on it.
ALPHA_CAP = 16


def window_valuation(values: Sequence[Fraction], p: int) -> int | float:
    """Least p-adic valuation over the window; ``math.inf`` if it is all zero."""
    return min((padic_valuation(c, p) for c in values if c), default=math.inf)


def _recheck(v: ExponentVector, alpha: int, window: int) -> bool:
    """a(p n) = 0 (mod p^alpha) for n below twice the proof window, straight from the series."""
    p = v.p
    f = product_to_precision(v, p * 2 * window)
    values = dissect(f, p, 0).window(0, 2 * window)
    return all(Fraction(c).denominator == 1 and c.numerator % p**alpha == 0 for c in values)


def certify(v: ExponentVector, j_max: int = 5, n_max: int | None = None) -> CongruenceCertificate:
    """Strongest verdict available for f_v.

    Order of preference: eigen (deg mu = 1), Krylov recursion, finite
    evidence on j <= j_max, chimeral, none.  Without a basis for (p, k) only
    the series route is available.
    """
    p, k = v.p, v.a0 // 2
    try:
        A = build_up_matrix(p, k)
    except UnsupportedError as exc:
        log.info("No basis for p=%d weight %d (%s); using series evidence", p, k, exc)
        return _from_chimeral(v, chimeral_order_series(v, j_max, n_max), j_max)

    basis = A.basis
    window = basis.window
    f = product_to_precision(v, p * window)
    coords = represent(f, basis)

    # U_p^n f for n = 1 .. max(d - 1, j_max), as coefficient windows
    mu = krylov_min_poly(A.entries, coords)
    d = mu.degree
    powers: list[list[Fraction]] = []
    c = coords
    for _ in range(max(d - 1, j_max)):
        c = A.apply(c)
        powers.append(basis.combination(c))
    if powers and powers[0] != dissect(f, p, 0).window(0, window):
        raise KleinSieveError(f"U_{p} matrix disagrees with the series U_{p} on {v}")

    base = tuple(window_valuation(powers[n - 1], p) for n in range(1, d))
    roots = tuple(newton_polygon_valuations(mu, p))
    alpha_cand = recursion_alpha(mu, p)
    top = ALPHA_CAP if alpha_cand == math.inf else min(int(alpha_cand), ALPHA_CAP)
    evidence = {"basis": basis.source, "dim": basis.dim, "degree": d}

    for alpha in range(top, 0, -1):
        if all(base[n - 1] >= alpha * n for n in range(1, d)):
            if roots and roots[0] < alpha:
                # recursion_alpha never exceeds the least root valuation
                raise KleinSieveError(f"Newton polygon of {mu} contradicts alpha={alpha}")
            kind = CertificateKind.EIGEN if d == 1 else CertificateKind.KRYLOV
            eigenvalue = -mu.monic().coeffs[0] if d == 1 else None
            if eigenvalue is not None:
                residual = [x - eigenvalue * y for x, y in zip(powers[0], f.window(0, window))]
                evidence["eigen_residual_zero"] = not any(residual)
            evidence["recheck_2x"] = _recheck(v, alpha, window)
            failed = [name for name in ("eigen_residual_zero", "recheck_2x")
                      if evidence.get(name) is False]
            if failed:
                # a proof-grade verdict needs every cross-check; fall back to evidence
                log.warning("%s: %s certificate at alpha=%d rejected by %s",
                            v, kind.value, alpha, ", ".join(failed))
                break
            log.debug("%s: %s certificate, alpha=%d", v, kind.value, alpha)
            return CongruenceCertificate(
                vector=v,
                kind=kind,
                alpha=alpha,
                eigenvalue=eigenvalue,
                min_poly=mu,
                root_valuations=roots,
                base_valuations=tuple(_finite(x) for x in base),
                window=window,
                evidence=evidence,
            )

    chimeral = chimeral_order_basis(v, A, coords, j_max)
    cert = _from_chimeral(v, chimeral, j_max, powers)
    cert.min_poly = mu
    cert.root_valuations = roots
    cert.base_valuations = tuple(_finite(x) for x in base)
    cert.evidence.update(evidence)
    return cert


def _finite(x: int | float) -> int | None:
    return None if x == math.inf else int(x)


def _from_chimeral(
    v: ExponentVector,
    chimeral: ChimeralResult,
    j_max: int,
    powers: list[list[Fraction]] | None = None,
) -> CongruenceCertificate:
    p = v.p
    if chimeral.order >= j_max:
        alpha = 1
        if powers is not None:
            vals = [window_valuation(powers[j - 1], p) for j in range(1, j_max + 1)]
            alpha = min(
                ALPHA_CAP if val == math.inf else val // j for j, val in enumerate(vals, start=1)
            )
        return CongruenceCertificate(
            vector=v,
            kind=CertificateKind.FINITE_EVIDENCE,
            alpha=max(alpha, 1),
            window=chimeral.window,
            evidence={"levels": j_max, "method": chimeral.method},
        )
    if chimeral.order >= 1:
        return CongruenceCertificate(
            vector=v,
            kind=CertificateKind.CHIMERAL,
            alpha=1,
            chimeral=chimeral,
            window=chimeral.window,
            evidence={"method": chimeral.method},
        )
    return CongruenceCertificate(
        vector=v,
        kind=CertificateKind.NONE,
        chimeral=chimeral,
        window=chimeral.window,
        evidence={"method": chimeral.method},
    )


@dataclass(frozen=True)
class BasisCertifier:
    """Certifier over the U_p matrix of the vector's weight."""

    j_max: int = 5
    n_max: int | None = None

    def certify(self, v: ExponentVector) -> CongruenceCertificate:
        return certify(v, self.j_max, self.n_max)

    def chimeral_order(self, v: ExponentVector) -> ChimeralResult:
        return chimeral_order(v, self.j_max, self.n_max)
