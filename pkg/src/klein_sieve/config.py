"""Configuration loading: TOML file + environment variables."""

from __future__ import annotations

import os
from pathlib import Path

try:
    import tomllib  # Python 3.11+
except ModuleNotFoundError:
    import tomli as tomllib  # type: ignore[no-redef]

from klein_sieve.errors import ConfigError
from klein_sieve.models.config import OutputFormat, RunConfig


def _int(section: str, key: str, value) -> int:
    if isinstance(value, bool):
        raise ConfigError(f"[{section}] {key} must be an integer, got {value!r}")
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ConfigError(f"[{section}] {key} must be an integer, got {value!r}") from None


def load_config(
    config_path: str | Path | None = None,
    env_prefix: str = "KLEIN_SIEVE_",
) -> RunConfig:
    """Load run configuration from a TOML file and environment variables.

    Priority (highest wins):
        1. Environment variables (KLEIN_SIEVE_WORKERS, KLEIN_SIEVE_LOG_LEVEL)
        2. TOML config file
        3. RunConfig defaults

    A missing file is not an error; an unreadable or malformed one is.
    """
    raw: dict = {}
    if config_path is not None:
        p = Path(config_path).expanduser()
        if p.exists():
            try:
                with open(p, "rb") as f:
                    raw = tomllib.load(f)
            except tomllib.TOMLDecodeError as exc:
                raise ConfigError(f"cannot parse {p}: {exc}") from None

    cfg = RunConfig()

    # ── Run section ────────────────────────────────────────
    run = raw.get("run", {})
    if (v := run.get("prime")) is not None:
        cfg.prime = _int("run", "prime", v)
    if (v := run.get("a0")) is not None:
        cfg.a0 = _int("run", "a0", v)
    if (v := run.get("truncation")) is not None:
        cfg.truncation = _int("run", "truncation", v)
    if (v := run.get("long_running")) is not None:
        cfg.long_running = bool(v)

    # ── Screen section ─────────────────────────────────────
    screen = raw.get("screen", {})
    if (v := screen.get("depth")) is not None:
        cfg.screen_depth = _int("screen", "depth", v)
    if (v := screen.get("workers")) is not None:
        cfg.workers = _int("screen", "workers", v)
    if (v := screen.get("chunk_size")) is not None:
        cfg.chunk_size = _int("screen", "chunk_size", v)

    # ── Chimeral section ───────────────────────────────────
    chimeral = raw.get("chimeral", {})
    if (v := chimeral.get("j_max")) is not None:
        cfg.j_max = _int("chimeral", "j_max", v)
    if (v := chimeral.get("n_max")) is not None:
        cfg.n_max = _int("chimeral", "n_max", v)

    # ── Output section ─────────────────────────────────────
    output = raw.get("output", {})
    if (v := output.get("format")) is not None:
        try:
            cfg.output_format = OutputFormat(str(v))
        except ValueError:
            raise ConfigError(f"[output] format must be json, csv or text, got {v!r}") from None
    if (v := output.get("path")) is not None:
        cfg.output_path = str(Path(str(v)).expanduser()) if v else None
    if (v := output.get("log_level")) is not None:
        cfg.log_level = str(v)

    # ── Environment variable overrides (highest priority) ──
    if workers := os.environ.get(f"{env_prefix}WORKERS"):
        cfg.workers = _int("env", f"{env_prefix}WORKERS", workers)
    if level := os.environ.get(f"{env_prefix}LOG_LEVEL"):
        cfg.log_level = level

    return cfg
