"""klein_sieve - Exact q-series engine and congruence miner for prime-level Klein form products."""

__version__ = "0.1.0"
