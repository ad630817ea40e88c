"""Weight-one bases of M_1(Gamma(p)) split by residue, and decomposition tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from klein_sieve.models.vectors import ExponentVector


@dataclass(frozen=True)
class GammaPBasis:
    """Klein quotients ``f_v`` with f_v in q^{r/p} Z[[q]] listed per residue r."""

    p: int
    generator: ExponentVector
    components: dict[int, tuple[ExponentVector, ...]]
    weight: int = 1
    window: int = 0  # coefficients per component used for rank checks and solving

    @property
    def dim(self) -> int:
        return sum(len(c) for c in self.components.values())

    def index(self, r: int, v: ExponentVector) -> int | None:
        members = self.components[r]
        return members.index(v) if v in members else None


@dataclass
class DissectionTable:
    """``source(tau/p) = sum_r rows[r] . components[r]``."""

    source: ExponentVector
    rows: dict[int, tuple[Fraction, ...]] = field(default_factory=dict)
    method: str = "direct"  # "direct" | "sigma"
    # why sigma transport was abandoned for a direct solve, if it was
    fallback: str | None = None

    def row(self, r: int) -> tuple[int, ...]:
        """Integer coefficients of residue r (raises if a coefficient is fractional)."""
        out = []
        for c in self.rows[r]:
            if c.denominator != 1:
                raise ValueError(f"non-integral coefficient {c} in row {r}")
            out.append(int(c))
        return tuple(out)

    def to_dict(self) -> dict:
        return {
            "vector": str(self.source),
            "prime": self.source.p,
            "method": self.method,
            "fallback": self.fallback,
            "rows": {str(r): [str(c) for c in row] for r, row in sorted(self.rows.items())},
        }
