"""Integer systems describing the polytope of holomorphic exponent vectors."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


@dataclass(frozen=True)
class LinearCongruenceSystem:
    """``ineq`` rows with ``rhs`` (row . a >= rhs) plus ``cong`` rows (row . a = 0 mod n).

    Rows act on the full vector (a0, a1, ..., a_m).  ``fixed`` pins coordinates
    to values (a0 for a polytope slice).
    """

    p: int
    ineq: tuple[tuple[int, ...], ...]
    rhs: tuple[int, ...]
    cong: tuple[tuple[tuple[int, ...], int], ...]
    fixed: dict[int, int] = field(default_factory=dict)

    @property
    def ncols(self) -> int:
        return (self.p + 1) // 2

    def satisfied_by(self, a: tuple[int, ...]) -> bool:
        """Integer point test (fixed coordinates, inequalities, congruences)."""
        if any(a[i] != x for i, x in self.fixed.items()):
            return False
        for row, b in zip(self.ineq, self.rhs):
            if sum(c * x for c, x in zip(row, a)) < b:
                return False
        return all(sum(c * x for c, x in zip(row, a)) % n == 0 for row, n in self.cong)


@dataclass(frozen=True)
class SNFDecomposition:
    """``D = L * A * R`` with L, R unimodular and D diagonal with d1 | d2 | ... ."""

    A: tuple[tuple[int, ...], ...]
    D: tuple[tuple[int, ...], ...]
    L: tuple[tuple[int, ...], ...]
    R: tuple[tuple[int, ...], ...]

    @property
    def invariants(self) -> tuple[int, ...]:
        return tuple(self.D[i][i] for i in range(min(len(self.D), len(self.D[0]))))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariants if d)


@dataclass(frozen=True)
class Parameterization:
    """Affine rational map (h, b, t_1, ..., t_{m-1}) -> (a_1, ..., a_m) with h = a0/2.

    ``matrix`` has m rows of m+1 rational entries.  ``congruences`` are the
    integrality conditions as (row over (h, b, t), modulus) pairs.
    """

    p: int
    a0: int
    matrix: tuple[tuple[Fraction, ...], ...]
    congruences: tuple[tuple[tuple[int, ...], int], ...]
    b_max: int
    source: str  # "closed-form" | "smith"

    @property
    def m(self) -> int:
        return (self.p - 1) // 2

    def t_budget(self, b: int) -> Fraction:
        """Upper bound on t_1 + ... + t_{m-1} at a given b."""
        return Fraction((self.p - 1) * ((self.p + 1) * self.a0 - 24 * b), 48)

    def admits(self, params: tuple[int, ...]) -> bool:
        return all(sum(c * x for c, x in zip(row, params)) % n == 0 for row, n in self.congruences)

    def apply(self, params: tuple[int, ...]) -> tuple[Fraction, ...]:
        return tuple(sum((c * x for c, x in zip(row, params)), Fraction(0)) for row in self.matrix)
