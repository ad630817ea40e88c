"""Miner protocols - screening, certification, scheduling."""

from __future__ import annotations

from collections.abc import Sequence
from typing import Protocol

from klein_sieve.models.certificates import (
    ChimeralResult,
    CongruenceCertificate,
    MineReport,
    ScreenReport,
)
from klein_sieve.models.vectors import ExponentVector


class Screener(Protocol):
    """Cheap necessary test a(0) = a(p) = ... = 0 (mod p) on lattice points."""

    def screen(self, v: ExponentVector) -> bool:
        """True when every screened coefficient of f_v is divisible by p."""
        ...

    def screen_chunk(self, vectors: Sequence[ExponentVector]) -> list[ExponentVector]:
        """Survivors of a chunk, in input order. Must be picklable for process pools."""
        ...


class Certifier(Protocol):
    """Turns a screened vector into a congruence verdict."""

    def certify(self, v: ExponentVector) -> CongruenceCertificate:
        """Eigen, Krylov, finite-evidence, chimeral or none."""
        ...

    def chimeral_order(self, v: ExponentVector) -> ChimeralResult:
        """Largest j <= j_max for which a(p^j n) = 0 (mod p^j) holds on the window."""
        ...


class MiningScheduler(Protocol):
    """Runs the screen / orbit-filter / certify pipeline over a lattice slice."""

    async def screen_all(
        self, vectors: Sequence[ExponentVector]
    ) -> tuple[list[ExponentVector], ScreenReport]:
        """Screen every vector; survivors come back sorted."""
        ...

    async def run(self, p: int, a0: int) -> MineReport:
        """Mine one (p, a0) slice end to end."""
        ...
