"""Congruence verdicts and run reports produced by the miner."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from klein_sieve.models.algebra import IntPolynomial
from klein_sieve.models.vectors import ExponentVector


class CertificateKind(str, Enum):
    EIGEN = "eigen"  # U_p f = lambda f
    KRYLOV = "krylov"  # minimal-polynomial recursion plus base cases
    FINITE_EVIDENCE = "finite-evidence"  # every level up to j_max checked, no recursion proof
    CHIMERAL = "chimeral"  # holds for j <= order, fails at order + 1
    NONE = "none"


# ---------------------------------------------------------------------------
# Chimeral detection
# ---------------------------------------------------------------------------


@dataclass
class ChimeralFailure:
    """First coefficient breaking the congruence at level j."""

    j: int
    n: int  # the coefficient is the one of q^(p^j n) shifted by ell
    coefficient: int
    valuation: int


@dataclass
class ChimeralResult:
    vector: ExponentVector
    order: int
    failure: ChimeralFailure | None = None  # None when the window ran out first
    window: int = 0
    window_limited: bool = False
    method: str = "basis"  # "basis" (Sturm-window proof per level) | "series"

    def to_dict(self) -> dict:
        out = {
            "vector": str(self.vector),
            "prime": self.vector.p,
            "order": self.order,
            "window": self.window,
            "window_limited": self.window_limited,
            "method": self.method,
        }
        if self.failure is not None:
            out["failure"] = {
                "j": self.failure.j,
                "n": self.failure.n,
                "coefficient": str(self.failure.coefficient),
                "valuation": self.failure.valuation,
            }
        return out


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------


@dataclass
class CongruenceCertificate:
    """Verdict on ``a(p^j n) = 0 (mod p^(alpha j))`` for a single vector."""

    vector: ExponentVector
    kind: CertificateKind
    alpha: int | None = None
    eigenvalue: Fraction | None = None
    min_poly: IntPolynomial | None = None
    root_valuations: tuple = ()  # Fractions, math.inf for zero roots
    base_valuations: tuple[int | None, ...] = ()  # v_p(U_p^n f), n = 1..deg-1
    chimeral: ChimeralResult | None = None
    window: int = 0
    evidence: dict = field(default_factory=dict)

    @property
    def p(self) -> int:
        return self.vector.p

    @property
    def certified(self) -> bool:
        return self.kind in (
            CertificateKind.EIGEN,
            CertificateKind.KRYLOV,
            CertificateKind.FINITE_EVIDENCE,
        )

    @property
    def proved(self) -> bool:
        """Eigen and Krylov verdicts hold for every j; the rest are window-limited."""
        return self.kind in (CertificateKind.EIGEN, CertificateKind.KRYLOV)

    def to_dict(self) -> dict:
        out: dict = {
            "vector": str(self.vector),
            "prime": self.p,
            "a0": self.vector.a0,
            "kind": self.kind.value,
            "alpha": self.alpha,
            "window": self.window,
        }
        if self.eigenvalue is not None:
            out["lambda"] = str(self.eigenvalue)
        if self.min_poly is not None:
            out["min_poly"] = str(self.min_poly)
            out["root_valuations"] = [str(v) for v in self.root_valuations]
            out["base_valuations"] = list(self.base_valuations)
        if self.chimeral is not None:
            out["order"] = self.chimeral.order
            out["chimeral"] = self.chimeral.to_dict()
        out["evidence"] = self.evidence
        return out


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


@dataclass
class ScreenReport:
    """Summary of one screening pass over a slice."""

    total: int = 0
    passed: int = 0
    chunks: int = 0
    errors: int = 0
    duration_ms: int = 0


@dataclass
class MineReport:
    """Algorithm output for one (p, a0) slice."""

    p: int
    a0: int
    total: int = 0
    screened: int = 0
    orbit_filtered: int = 0
    certified: list[CongruenceCertificate] = field(default_factory=list)
    chimeral: list[ChimeralResult] = field(default_factory=list)
    rejected_count: int = 0
    duration_ms: int = 0

    @property
    def certified_vectors(self) -> list[ExponentVector]:
        return [c.vector for c in self.certified]

    def to_dict(self) -> dict:
        return {
            "prime": self.p,
            "a0": self.a0,
            "lattice_points": self.total,
            "screened": self.screened,
            "orbit_filtered": self.orbit_filtered,
            "certified": [c.to_dict() for c in self.certified],
            "chimeral": [c.to_dict() for c in self.chimeral],
            "rejected_count": self.rejected_count,
        }


@dataclass(frozen=True, order=True)
class DissectionCongruence:
    """``U_{p,r}(f_v) = 0 (mod modulus)`` on the checked window."""

    r: int
    vector: ExponentVector
    modulus: int


@dataclass
class CheckResult:
    """Outcome of one named verification."""

    name: str
    passed: bool
    detail: str = ""
    evidence_only: bool = False  # numerical evidence, not a proof

    def to_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "detail": self.detail}
        if self.evidence_only:
            out["evidence_only"] = True
        return out
