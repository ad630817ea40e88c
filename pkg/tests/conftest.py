"""Shared fixtures for klein_sieve tests."""

from __future__ import annotations

import pytest
from pytest_metadata.plugin import metadata_key

from klein_sieve import __version__
from klein_sieve.models.config import OutputFormat, RunConfig

from tests.mocks import MockCertifier, MockScreener


# ── Report metadata ──────────────────────────────────────────────


def pytest_configure(config):
    """Add engine info to the HTML report Environment table."""
    meta = config.stash.setdefault(metadata_key, {})
    meta["Engine"] = f"klein_sieve {__version__}"
    meta["Arithmetic"] = "exact (fractions.Fraction, sympy DomainMatrix)"


def make_test_config(**overrides) -> RunConfig:
    """Build a RunConfig suitable for testing."""
    defaults = dict(
        prime=5,
        a0=4,
        screen_depth=2,
        j_max=3,
        n_max=None,
        workers=1,
        chunk_size=16,
        output_format=OutputFormat.JSON,
        log_level="debug",
    )
    defaults.update(overrides)
    return RunConfig(**defaults)


@pytest.fixture
def test_config():
    """Default RunConfig for tests."""
    return make_test_config()


@pytest.fixture
def mock_screener():
    return MockScreener()


@pytest.fixture
def mock_certifier():
    return MockCertifier()
