"""The inequality and congruence system cutting out holomorphic exponent vectors.

For fixed a0 the vectors a with ``f_a`` in M_{a0/2}(Gamma_1(p)) are the
integer points of

    a0 + 2 * sum(a_i) >= 0,      a0 + 2 * sum(a_i) = 0 (mod 24),
    sum(i^2 a_i) = 0 (mod p),
    p^2 a0 + sum_i (2p^2 - 12 r (p - r)) a_i >= 0    (r = i*c mod p),

one cusp row for each c = 1..(p-1)/2.  The cusp rows are 24p times the
orders at the cusps c/p, so the system is the modularity criterion written
over the integers.
"""

from __future__ import annotations

import logging

from sympy import Matrix

from klein_sieve.models.lattice import LinearCongruenceSystem
from klein_sieve.orbits import sigma

log = logging.getLogger(__name__)


def eta_row(p: int) -> tuple[int, ...]:
    """Coefficients of ``s = a0 + 2 * sum(a_i)``."""
    m = (p - 1) // 2
    return (1, *([2] * m))


def quadratic_row(p: int) -> tuple[int, ...]:
    m = (p - 1) // 2
    return (0, *(i * i for i in range(1, m + 1)))


def cusp_row(p: int, c: int) -> tuple[int, ...]:
    """``24p * ord_{c/p}`` as an integer row over (a0, a1, ..., a_m)."""
    m = (p - 1) // 2
    row = [p * p]
    for i in range(1, m + 1):
        r = i * c % p
        row.append(2 * p * p - 12 * r * (p - r))
    return tuple(row)


def build_system(p: int, a0: int) -> LinearCongruenceSystem:
    """The system for the slice with the given a0 (which is also pinned in ``fixed``)."""
    if a0 < 2 or a0 % 2:
        raise ValueError(f"a0 must be an even integer >= 2, got {a0}")
    m = (p - 1) // 2
    rows = [eta_row(p)] + [cusp_row(p, c) for c in range(1, m + 1)]
    return LinearCongruenceSystem(
        p=p,
        ineq=tuple(rows),
        rhs=tuple(0 for _ in rows),
        cong=((eta_row(p), 24), (quadratic_row(p), p)),
        fixed={0: a0},
    )


def recession_matrix(system: LinearCongruenceSystem) -> Matrix:
    """Inequality rows restricted to the free coordinates a1..a_m."""
    return Matrix([list(row[1:]) for row in system.ineq])


def is_bounded(system: LinearCongruenceSystem) -> bool:
    """True when the homogeneous system B d >= 0 only admits d = 0.

    B has full column rank and a strictly positive vector y with y B = 0:
    then y . (B d) = 0 with B d >= 0 forces B d = 0, hence d = 0.
    """
    B = recession_matrix(system)
    if B.rank() != B.cols:
        return False
    kernel = B.T.nullspace()
    if len(kernel) != 1:
        log.warning("recession test inconclusive: left kernel of dimension %d", len(kernel))
        return False
    y = kernel[0]
    positive = all(x > 0 for x in y) or all(x < 0 for x in y)
    log.debug("recession witness %s", list(y))
    return positive


def parameter_cusps(p: int) -> tuple[int, ...]:
    """Cusps whose orders serve as the free parameters t_1..t_{m-1}.

    The cycle of powers of alpha, without its last member whose order is
    determined by the others.
    """
    return sigma(p).cycle[:-1]


def coordinate_system(p: int) -> tuple[list[list[int]], list[list[int]]]:
    """(M, C) with ``M @ (a_1..a_m) = C @ (h, b, t_1..t_{m-1})``, h = a0/2, b = s/24.

    Row 0 is sum(a_i) = 12 b - h; the row for cusp c is
    sum_i (p^2 - 6 r (p - r)) a_i = 12 p t_c - p^2 h.
    """
    m = (p - 1) // 2
    cusps = parameter_cusps(p)
    M = [[1] * m]
    C = [[-1, 12] + [0] * (m - 1)]
    for j, c in enumerate(cusps):
        M.append([(cusp_row(p, c)[i] // 2) for i in range(1, m + 1)])
        row = [-p * p, 0] + [0] * (m - 1)
        row[2 + j] = 12 * p
        C.append(row)
    return M, C
