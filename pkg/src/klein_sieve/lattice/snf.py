"""Smith normal form by integer row/column reduction with minimal-pivot selection.

``smith_normal_form(A)`` returns D, L, R with D = L * A * R, L and R
unimodular, and the diagonal of D non-negative with d1 | d2 | ... .  The
pivot at each stage is the entry of least absolute value in the remaining
block, which keeps intermediate entries small for the matrices used here.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from klein_sieve.models.lattice import SNFDecomposition

log = logging.getLogger(__name__)

IntMatrix = list[list[int]]


def _identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _add_rows(m: IntMatrix, target: int, source: int, q: int) -> None:
    # row[target] += q * row[source]
    src = m[source]
    row = m[target]
    for k in range(len(row)):
        row[k] += q * src[k]


def _add_columns(m: IntMatrix, target: int, source: int, q: int) -> None:
    # col[target] += q * col[source]
    for row in m:
        row[target] += q * row[source]


def _swap_rows(m: IntMatrix, i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]


def _swap_columns(m: IntMatrix, i: int, j: int) -> None:
    for row in m:
        row[i], row[j] = row[j], row[i]


def _min_pivot(m: IntMatrix, k: int) -> tuple[int, int] | None:
    best = None
    best_abs = 0
    for i in range(k, len(m)):
        for j in range(k, len(m[0])):
            x = abs(m[i][j])
            if x and (best is None or x < best_abs):
                best, best_abs = (i, j), x
                if x == 1:
                    return best
    return best


def _first_non_multiple(m: IntMatrix, k: int) -> int | None:
    pivot = m[k][k]
    for i in range(k + 1, len(m)):
        for j in range(k + 1, len(m[0])):
            if m[i][j] % pivot:
                return i
    return None


def smith_normal_form(A: Sequence[Sequence[int]]) -> SNFDecomposition:
    """Smith normal form D = L*A*R of an integer matrix."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    m = [[int(x) for x in row] for row in A]
    L = _identity(rows)
    R = _identity(cols)

    for k in range(min(rows, cols)):
        while True:
            at = _min_pivot(m, k)
            if at is None:
                break
            i, j = at
            if i != k:
                _swap_rows(m, k, i)
                _swap_rows(L, k, i)
            if j != k:
                _swap_columns(m, k, j)
                _swap_columns(R, k, j)
            pivot = m[k][k]
            clean = True
            for i in range(k + 1, rows):
                if q := m[i][k] // pivot:
                    _add_rows(m, i, k, -q)
                    _add_rows(L, i, k, -q)
                clean = clean and m[i][k] == 0
            for j in range(k + 1, cols):
                if q := m[k][j] // pivot:
                    _add_columns(m, j, k, -q)
                    _add_columns(R, j, k, -q)
                clean = clean and m[k][j] == 0
            if not clean:
                continue
            # The pivot must divide the whole remaining block.
            bad = _first_non_multiple(m, k)
            if bad is None:
                break
            _add_rows(m, k, bad, 1)
            _add_rows(L, k, bad, 1)
        if m[k][k] < 0:
            m[k] = [-x for x in m[k]]
            L[k] = [-x for x in L[k]]

    snf = SNFDecomposition(
        A=tuple(tuple(int(x) for x in row) for row in A),
        D=tuple(tuple(row) for row in m),
        L=tuple(tuple(row) for row in L),
        R=tuple(tuple(row) for row in R),
    )
    log.debug("SNF %dx%d invariants %s", rows, cols, snf.invariants)
    return snf


def check_decomposition(snf: SNFDecomposition) -> bool:
    """D == L*A*R, L and R unimodular, D diagonal with the divisibility chain."""
    A, D, L, R = (Matrix(x) for x in (snf.A, snf.D, snf.L, snf.R))
    if L * A * R != D:
        return False
    if abs(L.det()) != 1 or abs(R.det()) != 1:
        return False
    for i in range(D.rows):
        for j in range(D.cols):
            if i != j and D[i, j]:
                return False
    inv = snf.invariants
    for a, b in zip(inv, inv[1:]):
        if a == 0 and b != 0:
            return False
        if a and b % a:
            return False
    return True


def reference_invariants(A: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Invariant factors as computed by sympy, for cross-checking."""
    factors = invariant_factors(Matrix(A), domain=ZZ)
    return tuple(abs(int(x)) for x in factors)
