"""Exact rational linear algebra on coefficient windows.

Dense systems go through sympy's DomainMatrix over QQ (or ZZ for the
fraction-free characteristic polynomial); results come back as Fractions.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from fractions import Fraction

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from klein_sieve.errors import NotInSpanError
from klein_sieve.models.algebra import IntPolynomial

log = logging.getLogger(__name__)

Rows = Sequence[Sequence[Fraction]]


def _qq(x) -> object:
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)


def _frac(e) -> Fraction:
    return Fraction(int(e.numerator), int(e.denominator))


def to_domain(rows: Rows, ncols: int | None = None) -> DomainMatrix:
    """Rows of Fractions as a DomainMatrix over QQ."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    return DomainMatrix([[_qq(x) for x in row] for row in rows], (len(rows), ncols), QQ)


def from_domain(m: DomainMatrix) -> list[list[Fraction]]:
    return [[_frac(e) for e in row] for row in m.to_list()]


def transpose(rows: Rows) -> list[list[Fraction]]:
    return [list(col) for col in zip(*rows)]


def rank(rows: Rows) -> int:
    if not rows:
        return 0
    return to_domain(rows).rank()


# ---------------------------------------------------------------------------
# Solving
# ---------------------------------------------------------------------------


def solve_columns(columns: Rows, target: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Coefficients c with ``sum c_j columns[j] == target`` exactly.

    Every equation (every entry of the windows) takes part; an inconsistent
    system raises NotInSpanError.  Free variables, if any, are set to zero.
    """
    n = len(columns)
    length = len(target)
    augmented = [[columns[j][i] for j in range(n)] + [target[i]] for i in range(length)]
    reduced, pivots = to_domain(augmented, n + 1).rref()
    if n in pivots:
        raise NotInSpanError()
    red = from_domain(reduced)
    out = [Fraction(0)] * n
    for row, col in enumerate(pivots):
        out[col] = red[row][n]
    return tuple(out)


class IncrementalEchelon:
    """Row echelon form grown one vector at a time (greedy rank fill)."""

    def __init__(self) -> None:
        self._rows: list[tuple[int, list[Fraction]]] = []  # (pivot column, row with pivot 1)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, vec: Sequence[Fraction]) -> list[Fraction]:
        v = [Fraction(x) for x in vec]
        for col, row in self._rows:
            c = v[col]
            if c:
                for i in range(col, len(v)):
                    if row[i]:
                        v[i] -= c * row[i]
        return v

    def add(self, vec: Sequence[Fraction]) -> bool:
        """Insert ``vec`` if it raises the rank; return whether it did."""
        v = self.reduce(vec)
        for col, x in enumerate(v):
            if x:
                row = [y / x for y in v]
                # keep earlier rows reduced against the new pivot
                for _, other in self._rows:
                    c = other[col]
                    if c:
                        for i in range(col, len(other)):
                            other[i] -= c * row[i]
                self._rows.append((col, row))
                self._rows.sort(key=lambda t: t[0])
                return True
        return False


def select_independent(vectors: Sequence[Sequence[Fraction]], limit: int | None = None) -> list[int]:
    """Indices of a maximal independent subset, chosen greedily in order."""
    ech = IncrementalEchelon()
    picked = []
    for i, v in enumerate(vectors):
        if ech.add(v):
            picked.append(i)
            if limit is not None and len(picked) == limit:
                break
    return picked


# ---------------------------------------------------------------------------
# Matrices and polynomials
# ---------------------------------------------------------------------------


def mat_vec(A: Rows, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(sum((a * x for a, x in zip(row, v)), Fraction(0)) for row in A)


def nullspace(rows: Rows) -> list[list[Fraction]]:
    """Basis of {x : rows @ x = 0}."""
    if not rows:
        return []
    basis = to_domain(rows).nullspace()
    return from_domain(basis) if basis.shape[0] else []


def krylov_min_poly(A: Rows, v: Sequence[Fraction]) -> IntPolynomial:
    """Monic mu of least degree with mu(A) v = 0.

    The Krylov vectors v, Av, A^2 v, ... are added until the first linear
    dependency; its coefficients are those of mu.
    """
    v = tuple(Fraction(x) for x in v)
    if not any(v):
        return IntPolynomial((Fraction(1),))
    krylov = [v]
    while True:
        krylov.append(mat_vec(A, krylov[-1]))
        kernel = nullspace(transpose(krylov))
        if kernel:
            c = kernel[0]
            lead = c[-1]
            # the previous vectors are independent, so lead is nonzero
            mu = IntPolynomial(tuple(x / lead for x in c))
            log.debug("Krylov minimal polynomial of degree %d: %s", mu.degree, mu)
            return mu


def char_poly(A: Rows) -> IntPolynomial:
    """det(xI - A), computed fraction-free on the integer matrix d*A.

    If chi' is the characteristic polynomial of d*A, then the coefficient of
    x^i in chi is chi'_i / d^(n-i).
    """
    n = len(A)
    d = math.lcm(*(Fraction(x).denominator for row in A for x in row)) if n else 1
    scaled = [[int(Fraction(x) * d) for x in row] for row in A]
    # descending: coeffs[0] multiplies x^n
    coeffs = DomainMatrix([[ZZ(x) for x in row] for row in scaled], (n, n), ZZ).charpoly()
    return IntPolynomial(tuple(Fraction(int(coeffs[n - i]), d ** (n - i)) for i in range(n + 1)))


def eigenspace(A: Rows, eigenvalue: Fraction) -> list[list[Fraction]]:
    """Basis of ker(A - eigenvalue * I)."""
    lam = Fraction(eigenvalue)
    shifted = [
        [Fraction(x) - (lam if i == j else 0) for j, x in enumerate(row)] for i, row in enumerate(A)
    ]
    return nullspace(shifted)
