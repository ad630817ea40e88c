"""Protocol-conforming fakes for the mining scheduler."""

from __future__ import annotations

from klein_sieve.models.certificates import (
    CertificateKind,
    ChimeralFailure,
    ChimeralResult,
    CongruenceCertificate,
)
from klein_sieve.models.vectors import ExponentVector


class MockScreener:
    """Implements Screener. Passes everything unless told otherwise."""

    def __init__(self, rejected: set[ExponentVector] | None = None,
                 fail_on: ExponentVector | None = None) -> None:
        self.rejected = rejected or set()
        self.fail_on = fail_on
        self.chunks: list[list[ExponentVector]] = []

    def screen(self, v: ExponentVector) -> bool:
        if v == self.fail_on:
            raise RuntimeError(f"screening blew up on {v}")
        return v not in self.rejected

    def screen_chunk(self, chunk: list[ExponentVector]) -> list[ExponentVector]:
        self.chunks.append(list(chunk))
        return [v for v in chunk if self.screen(v)]


class MockCertifier:
    """Implements Certifier. Verdicts come from a preset map, default eigen with alpha 1."""

    def __init__(self, verdicts: dict[ExponentVector, CertificateKind] | None = None) -> None:
        self.verdicts = verdicts or {}
        self.certify_calls: list[ExponentVector] = []

    def certify(self, v: ExponentVector) -> CongruenceCertificate:
        self.certify_calls.append(v)
        kind = self.verdicts.get(v, CertificateKind.EIGEN)
        if kind is CertificateKind.CHIMERAL:
            return CongruenceCertificate(v, kind, alpha=1, chimeral=self.chimeral_order(v))
        if kind is CertificateKind.NONE:
            return CongruenceCertificate(v, kind)
        return CongruenceCertificate(v, kind, alpha=1)

    def chimeral_order(self, v: ExponentVector) -> ChimeralResult:
        return ChimeralResult(v, 1, ChimeralFailure(2, 1, v.p, 1), window=10)
