"""Polytope of holomorphic exponent vectors: systems, Smith normal form, enumeration."""

from klein_sieve.lattice.enumerate import count_closed_form, count_lattice, enumerate_lattice
from klein_sieve.lattice.parameterize import parameterize, points
from klein_sieve.lattice.snf import smith_normal_form
from klein_sieve.lattice.system import build_system, is_bounded

__all__ = [
    "build_system", "is_bounded",
    "smith_normal_form",
    "parameterize", "points",
    "count_closed_form", "count_lattice", "enumerate_lattice",
]
