"""Mining scheduler - screens lattice chunks concurrently, then filters and certifies."""

from __future__ import annotations

import asyncio
import logging
import time
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor

from klein_sieve.interfaces.miner import Certifier, Screener
from klein_sieve.lattice.enumerate import enumerate_lattice
from klein_sieve.miner.screen import orbit_filter
from klein_sieve.models.certificates import CertificateKind, MineReport, ScreenReport
from klein_sieve.models.config import DEFAULT_BUDGET
from klein_sieve.models.vectors import ExponentVector

log = logging.getLogger(__name__)


class PoolMiningScheduler:
    """Runs one (p, a0) slice through the mining pipeline.

    1. Enumerates the lattice points of the slice
    2. Screens them in chunks (process pool when workers > 1)
    3. Keeps vectors whose whole sigma-orbit survived
    4. Certifies each survivor and sorts the verdicts

    Results never depend on ``workers``: survivors are sorted before use.
    """

    def __init__(
        self,
        screener: Screener,
        certifier: Certifier,
        workers: int = 1,
        chunk_size: int = 256,
        budget: int | None = DEFAULT_BUDGET,
    ) -> None:
        self._screener = screener
        self._certifier = certifier
        self._workers = workers
        self._chunk_size = chunk_size
        self._budget = budget

    async def screen_all(
        self, vectors: Sequence[ExponentVector]
    ) -> tuple[list[ExponentVector], ScreenReport]:
        """Screen every vector; a failing chunk is logged and its error re-raised."""
        start_time = time.monotonic()
        chunks = [
            list(vectors[i : i + self._chunk_size])
            for i in range(0, len(vectors), self._chunk_size)
        ]
        loop = asyncio.get_running_loop()
        executor = ProcessPoolExecutor(max_workers=self._workers) if self._workers > 1 else None
        semaphore = asyncio.Semaphore(self._workers)

        async def _screen_one(chunk: list[ExponentVector]) -> list[ExponentVector]:
            async with semaphore:
                return await loop.run_in_executor(executor, self._screener.screen_chunk, chunk)

        try:
            results = await asyncio.gather(
                *(_screen_one(c) for c in chunks), return_exceptions=True
            )
        finally:
            if executor is not None:
                executor.shutdown()

        passed: list[ExponentVector] = []
        errors: list[BaseException] = []
        for chunk, result in zip(chunks, results):
            if isinstance(result, BaseException):
                log.error("Screening failed on chunk starting at %s: %s", chunk[0], result)
                errors.append(result)
            else:
                passed.extend(result)
        passed.sort()

        duration = int((time.monotonic() - start_time) * 1000)
        report = ScreenReport(
            total=len(vectors),
            passed=len(passed),
            chunks=len(chunks),
            errors=len(errors),
            duration_ms=duration,
        )
        log.info(
            "Screening complete: %d checked, %d passed, %d chunks, %d errors in %dms",
            report.total, report.passed, report.chunks, report.errors, duration,
        )
        if errors:
            raise errors[0]
        return passed, report

    async def run(self, p: int, a0: int) -> MineReport:
        start_time = time.monotonic()
        vectors = enumerate_lattice(p, a0, budget=self._budget)
        passed, _ = await self.screen_all(vectors)
        survivors = sorted(orbit_filter(passed))

        report = MineReport(p=p, a0=a0, total=len(vectors), screened=len(passed),
                            orbit_filtered=len(survivors))
        for v in survivors:
            cert = self._certifier.certify(v)
            if cert.certified:
                report.certified.append(cert)
            elif cert.kind is CertificateKind.CHIMERAL and cert.chimeral is not None:
                report.chimeral.append(cert.chimeral)
        report.rejected_count = report.total - len(report.certified) - len(report.chimeral)
        report.duration_ms = int((time.monotonic() - start_time) * 1000)
        log.info(
            "Mining p=%d a0=%d complete: %d points, %d screened, %d certified, %d chimeral in %dms",
            p, a0, report.total, report.screened, len(report.certified),
            len(report.chimeral), report.duration_ms,
        )
        return report
