"""Exception hierarchy shared by the engine, the miner and the CLI."""

from __future__ import annotations


class KleinSieveError(Exception):
    """Base class for all klein_sieve errors."""


class TruncationError(KleinSieveError):
    """A coefficient was requested at or beyond the known precision of a series."""


class NotInvertibleError(KleinSieveError):
    """Series with a zero leading coefficient cannot be inverted."""

    def __init__(self, message: str = "not invertible") -> None:
        super().__init__(message)


class NotIntegralError(KleinSieveError):
    """A coefficient that must be an integer is a proper fraction."""

    def __init__(self, message: str = "not p-integral") -> None:
        super().__init__(message)


class GridMismatchError(KleinSieveError):
    """Series support does not sit on the exponent grid an operation needs."""


class NotModularError(KleinSieveError):
    """The vector does not define a modular form where one is required."""

    def __init__(self, message: str = "vector not modular") -> None:
        super().__init__(message)


class NotInSpanError(KleinSieveError):
    """A series is not a combination of the given basis on the checked window."""

    def __init__(self, message: str = "not in span") -> None:
        super().__init__(message)


class TransportError(KleinSieveError):
    """A table could not be carried to a sigma image by the slash signs."""


class UnsupportedError(KleinSieveError):
    """The requested prime, weight or table is outside the supported range."""


class ConfigError(KleinSieveError):
    """Invalid configuration value or command-line argument."""


class BudgetError(KleinSieveError):
    """Work refused because its estimated size exceeds the configured budget."""

    def __init__(self, message: str, estimate: int) -> None:
        super().__init__(message)
        self.estimate = estimate
