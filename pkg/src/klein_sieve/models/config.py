"""Configuration models for enumeration and mining runs."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from enum import Enum

from sympy import isprime

from klein_sieve.errors import ConfigError


class OutputFormat(str, Enum):
    """Serialization of CLI reports."""

    JSON = "json"  # canonical, schema-versioned
    CSV = "csv"  # enumeration lists and tables
    TEXT = "text"  # human-readable summary


# ── Budgets ──────────────────────────────────────────────────────
# Estimated lattice points (or screened vectors) above which a run is
# refused unless long_running is set.
DEFAULT_BUDGET = 2_000_000
LONG_RUNNING_BUDGET = 50_000_000


@dataclass
class RunConfig:
    """Complete run configuration.

    ``truncation`` and ``n_max`` default to windows derived from the prime
    and weight; ``workers`` never changes results, only wall time.
    """

    # Run
    prime: int = 5
    a0: int = 4
    truncation: int | None = None  # coefficients; None = Sturm window
    long_running: bool = False

    # Screening
    screen_depth: int = 2  # checks c_0, c_p, ..., c_{depth*p}
    workers: int = 1  # processes for screening; env KLEIN_SIEVE_WORKERS
    chunk_size: int = 256  # lattice points per work item

    # Chimeral detection
    j_max: int = 5
    n_max: int | None = None  # None = 10 * prime

    # Output
    output_format: OutputFormat = OutputFormat.JSON
    output_path: str | None = None
    log_level: str = "info"

    def __post_init__(self) -> None:
        if isinstance(self.output_format, str):
            self.output_format = OutputFormat(self.output_format)

    @property
    def weight(self) -> int:
        return self.a0 // 2

    @property
    def chimeral_window(self) -> int:
        return self.n_max if self.n_max is not None else 10 * self.prime

    @property
    def budget(self) -> int:
        return LONG_RUNNING_BUDGET if self.long_running else DEFAULT_BUDGET

    def validate(self) -> RunConfig:
        """Check ranges, raising ConfigError on the first violation."""
        if self.prime < 5 or not isprime(self.prime):
            raise ConfigError(f"prime must be a prime >= 5, got {self.prime}")
        if self.a0 < 2 or self.a0 % 2:
            raise ConfigError(f"a0 must be an even integer >= 2, got {self.a0}")
        if self.screen_depth < 0:
            raise ConfigError("screen_depth must be >= 0")
        if self.j_max < 1:
            raise ConfigError("j_max must be >= 1")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")
        if self.chunk_size < 1:
            raise ConfigError("chunk_size must be >= 1")
        if self.truncation is not None and self.truncation < 1:
            raise ConfigError("truncation must be positive")
        if self.n_max is not None and self.n_max < 1:
            raise ConfigError("n_max must be positive")
        return self

    def to_dict(self) -> dict:
        out = asdict(self)
        out["output_format"] = self.output_format.value
        return out
