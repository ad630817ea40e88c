"""Protocol interfaces for klein_sieve components."""

from klein_sieve.interfaces.miner import Certifier, MiningScheduler, Screener

__all__ = ["Certifier", "MiningScheduler", "Screener"]
