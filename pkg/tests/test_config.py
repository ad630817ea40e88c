"""Configuration loading from TOML and the environment."""

from __future__ import annotations

import pytest
from click.testing import CliRunner

from klein_sieve.cli import cli
from klein_sieve.config import load_config
from klein_sieve.errors import ConfigError
from klein_sieve.miner.search import build_scheduler
from klein_sieve.models.config import DEFAULT_BUDGET, LONG_RUNNING_BUDGET, OutputFormat, RunConfig


FULL_TOML = """
[run]
prime = 7
a0 = 6
truncation = 40
long_running = true

[screen]
depth = 3
workers = 2
chunk_size = 64

[chimeral]
j_max = 4
n_max = 30

[output]
format = "csv"
path = "~/reports/out.csv"
log_level = "warning"
"""


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    monkeypatch.delenv("KLEIN_SIEVE_WORKERS", raising=False)
    monkeypatch.delenv("KLEIN_SIEVE_LOG_LEVEL", raising=False)


def _write(tmp_path, text):
    path = tmp_path / "config.toml"
    path.write_text(text)
    return path


# ── Test 1: Defaults ──────────────────────────────────────────────


def test_no_file_gives_defaults():
    assert load_config() == RunConfig()


def test_missing_file_is_not_an_error(tmp_path):
    assert load_config(tmp_path / "absent.toml") == RunConfig()


# ── Test 2: Sections ──────────────────────────────────────────────


def test_every_section_is_read(tmp_path):
    cfg = load_config(_write(tmp_path, FULL_TOML))
    assert (cfg.prime, cfg.a0, cfg.truncation) == (7, 6, 40)
    assert cfg.long_running and cfg.budget == LONG_RUNNING_BUDGET
    assert (cfg.screen_depth, cfg.workers, cfg.chunk_size) == (3, 2, 64)
    assert (cfg.j_max, cfg.n_max) == (4, 30)
    assert cfg.output_format is OutputFormat.CSV
    assert cfg.output_path.endswith("reports/out.csv")
    assert not cfg.output_path.startswith("~")
    assert cfg.log_level == "warning"


def test_partial_file_keeps_other_defaults(tmp_path):
    cfg = load_config(_write(tmp_path, "[run]\nprime = 11\n"))
    assert cfg.prime == 11
    assert cfg.a0 == RunConfig().a0
    assert cfg.budget == DEFAULT_BUDGET


def test_zero_and_false_values_are_read(tmp_path):
    """0 and false in the file override the defaults instead of being skipped."""
    text = (
        "[run]\nlong_running = false\n"
        "[screen]\nworkers = 0\nchunk_size = 0\n"
        "[chimeral]\nj_max = 0\n"
    )
    cfg = load_config(_write(tmp_path, text))
    assert (cfg.workers, cfg.chunk_size, cfg.j_max) == (0, 0, 0)
    assert cfg.long_running is False


@pytest.mark.parametrize("section, key, message", [
    ("screen", "workers", "workers must be >= 1"),
    ("screen", "chunk_size", "chunk_size must be >= 1"),
    ("chimeral", "j_max", "j_max must be >= 1"),
    ("chimeral", "n_max", "n_max must be positive"),
])
def test_zero_in_file_fails_validation(tmp_path, section, key, message):
    cfg = load_config(_write(tmp_path, f"[{section}]\n{key} = 0\n"))
    with pytest.raises(ConfigError, match=message):
        cfg.validate()


def test_zero_workers_in_file_is_a_cli_error(tmp_path):
    config = _write(tmp_path, "[screen]\nworkers = 0\n")
    result = CliRunner().invoke(cli, ["-c", str(config), "enumerate", "-p", "5", "--a0", "4"])
    assert result.exit_code == 2
    assert "workers must be >= 1" in result.output


# ── Test 3: Environment overrides ─────────────────────────────────


def test_env_overrides_file(tmp_path, monkeypatch):
    monkeypatch.setenv("KLEIN_SIEVE_WORKERS", "8")
    monkeypatch.setenv("KLEIN_SIEVE_LOG_LEVEL", "debug")
    cfg = load_config(_write(tmp_path, FULL_TOML))
    assert cfg.workers == 8
    assert cfg.log_level == "debug"


def test_env_workers_must_be_integer(monkeypatch):
    monkeypatch.setenv("KLEIN_SIEVE_WORKERS", "many")
    with pytest.raises(ConfigError, match="KLEIN_SIEVE_WORKERS"):
        load_config()


# ── Test 4: Invalid files ─────────────────────────────────────────


def test_malformed_toml(tmp_path):
    with pytest.raises(ConfigError, match="cannot parse"):
        load_config(_write(tmp_path, "[run\nprime = 5"))


def test_unknown_output_format(tmp_path):
    with pytest.raises(ConfigError, match="format"):
        load_config(_write(tmp_path, '[output]\nformat = "xml"\n'))


def test_boolean_is_not_an_integer(tmp_path):
    with pytest.raises(ConfigError, match=r"\[run\] prime"):
        load_config(_write(tmp_path, "[run]\nprime = true\n"))


# ── Test 5: Validation ────────────────────────────────────────────


@pytest.mark.parametrize("overrides,message", [
    ({"prime": 9}, "prime"),
    ({"prime": 3}, "prime"),
    ({"a0": 3}, "a0"),
    ({"j_max": 0}, "j_max"),
    ({"workers": 0}, "workers"),
    ({"n_max": 0}, "n_max"),
])
def test_validate_rejects(overrides, message):
    with pytest.raises(ConfigError, match=message):
        RunConfig(**overrides).validate()


def test_output_format_string_is_coerced():
    assert RunConfig(output_format="text").output_format is OutputFormat.TEXT


def test_chimeral_window_default():
    assert RunConfig(prime=11).chimeral_window == 110
    assert RunConfig(prime=11, n_max=7).chimeral_window == 7


def test_chimeral_window_reaches_the_certifier():
    scheduler = build_scheduler(RunConfig(prime=11, a0=4))
    assert scheduler._certifier.n_max == 110
