"""Exponent vectors and cusp-order profiles."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from sympy import isprime

from klein_sieve.errors import ConfigError


@dataclass(frozen=True, order=True)
class ExponentVector:
    """Exponents (a0, a1, ..., a_m) of an eta/Klein product at a prime p, with m = (p-1)/2."""

    p: int
    a: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if self.p < 5 or not isprime(self.p):
            raise ConfigError(f"p must be a prime >= 5, got {self.p}")
        if len(self.a) != (self.p + 1) // 2:
            raise ConfigError(
                f"vector for p={self.p} needs {(self.p + 1) // 2} entries, got {len(self.a)}"
            )

    @classmethod
    def parse(cls, text: str, p: int) -> ExponentVector:
        """Parse ``"6,1,0,-4"`` (a0 first, optional parentheses)."""
        body = text.strip().strip("()[]")
        try:
            entries = tuple(int(x) for x in body.split(",") if x.strip())
        except ValueError as exc:
            raise ConfigError(f"cannot parse exponent vector {text!r}") from exc
        return cls(p, entries)

    @property
    def m(self) -> int:
        return (self.p - 1) // 2

    @property
    def a0(self) -> int:
        return self.a[0]

    @property
    def tail(self) -> tuple[int, ...]:
        return self.a[1:]

    @property
    def weight(self) -> Fraction:
        return Fraction(self.a0, 2)

    @property
    def eta_exponent(self) -> int:
        """Total exponent ``s = a0 + 2 * sum(a_i)`` of eta(p tau)."""
        return self.a0 + 2 * sum(self.tail)

    @property
    def is_candidate(self) -> bool:
        """a0 even and positive."""
        return self.a0 > 0 and self.a0 % 2 == 0

    def with_tail(self, tail: tuple[int, ...]) -> ExponentVector:
        return ExponentVector(self.p, (self.a0, *tail))

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.a)


@dataclass
class CuspOrderProfile:
    """Orders of vanishing at the cusps a/p, 1 <= a <= (p-1)/2."""

    p: int
    orders: dict[int, Fraction] = field(default_factory=dict)

    @property
    def holomorphic(self) -> bool:
        return all(o >= 0 for o in self.orders.values())

    @property
    def minimum(self) -> Fraction:
        return min(self.orders.values())

    @property
    def total(self) -> Fraction:
        return sum(self.orders.values(), Fraction(0))
