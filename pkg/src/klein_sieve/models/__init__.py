"""Data models for klein_sieve."""

from klein_sieve.models.algebra import IntPolynomial, OrderedBasis, UpMatrix
from klein_sieve.models.certificates import (
    CertificateKind,
    CheckResult,
    ChimeralFailure,
    ChimeralResult,
    CongruenceCertificate,
    DissectionCongruence,
    MineReport,
    ScreenReport,
)
from klein_sieve.models.config import OutputFormat, RunConfig
from klein_sieve.models.dissection import DissectionTable, GammaPBasis
from klein_sieve.models.lattice import LinearCongruenceSystem, Parameterization, SNFDecomposition
from klein_sieve.models.vectors import CuspOrderProfile, ExponentVector

__all__ = [
    "IntPolynomial", "OrderedBasis", "UpMatrix",
    "CertificateKind", "CheckResult", "ChimeralFailure", "ChimeralResult", "CongruenceCertificate",
    "DissectionCongruence", "MineReport", "ScreenReport",
    "OutputFormat", "RunConfig",
    "DissectionTable", "GammaPBasis",
    "LinearCongruenceSystem", "Parameterization", "SNFDecomposition",
    "CuspOrderProfile", "ExponentVector",
]
