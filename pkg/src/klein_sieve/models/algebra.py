"""Bases, operator matrices and polynomials for the U_p linear algebra."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from sympy import Poly, Rational, factor_list, symbols

from klein_sieve.models.vectors import ExponentVector
from klein_sieve.series import FracSeries

Monomial = tuple[int, ...]  # exponents of x_0..x_{m-1}
Vector = tuple[Fraction, ...]

_X = symbols("x")


@dataclass(frozen=True)
class OrderedBasis:
    """Monomials in the weight-one generators spanning M_k(Gamma_1(p)).

    ``rows[j]`` holds the first ``window`` coefficients (q^0 onwards) of the
    series of ``monomials[j]``; ``vectors[j]`` is the exponent vector of that
    product.
    """

    p: int
    k: int
    monomials: tuple[Monomial, ...]
    vectors: tuple[ExponentVector, ...]
    series: tuple[FracSeries, ...] = field(repr=False)
    rows: tuple[tuple[Fraction, ...], ...] = field(repr=False)
    window: int
    source: str  # "printed" | "printed+fill" | "greedy"

    @property
    def dim(self) -> int:
        return len(self.monomials)

    def label(self, j: int) -> str:
        parts = []
        for n, e in enumerate(self.monomials[j]):
            if e == 1:
                parts.append(f"x{n}")
            elif e:
                parts.append(f"x{n}^{e}")
        return "*".join(parts) or "1"

    def combination(self, coords: Vector) -> list[Fraction]:
        """Coefficient window of ``sum coords[j] * basis[j]``."""
        out = [Fraction(0)] * self.window
        for c, row in zip(coords, self.rows):
            if c:
                for n, x in enumerate(row):
                    if x:
                        out[n] += c * x
        return out


@dataclass(frozen=True)
class UpMatrix:
    """Left action of U_p on coordinates: ``A @ coords(f) = coords(U_p f)``."""

    p: int
    k: int
    entries: tuple[Vector, ...]
    basis: OrderedBasis = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def apply(self, coords: Vector) -> Vector:
        return tuple(sum((a * c for a, c in zip(row, coords)), Fraction(0)) for row in self.entries)

    def power_apply(self, coords: Vector, n: int) -> Vector:
        for _ in range(n):
            coords = self.apply(coords)
        return coords


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with exact coefficients, lowest degree first."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        if not cs:
            raise ValueError("zero polynomial")
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_descending(cls, coeffs) -> IntPolynomial:
        return cls(tuple(reversed([Fraction(c) for c in coeffs])))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def monic(self) -> IntPolynomial:
        lead = self.coeffs[-1]
        return IntPolynomial(tuple(c / lead for c in self.coeffs))

    def evaluate(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_sympy(self) -> Poly:
        return Poly(
            [Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)], _X
        )

    def divides(self, other: IntPolynomial) -> bool:
        _, rem = other.to_sympy().div(self.to_sympy())
        return rem.is_zero

    def factors(self) -> list[tuple[str, int]]:
        """Irreducible factors over Q as (expression, multiplicity)."""
        _, parts = factor_list(self.to_sympy().as_expr(), _X)
        return [(str(f), e) for f, e in parts]

    def __str__(self) -> str:
        return str(self.to_sympy().as_expr())
