"""CLI entry point for klein_sieve."""

from __future__ import annotations

import logging
import sys
from dataclasses import replace
from fractions import Fraction

import click

from klein_sieve.config import load_config
from klein_sieve.data import TABLE2_COUNTS
from klein_sieve.dissection.decompose import decompose
from klein_sieve.errors import BudgetError, ConfigError, KleinSieveError, UnsupportedError
from klein_sieve.klein import product_to_precision
from klein_sieve.lattice.enumerate import enumerate_lattice
from klein_sieve.miner.certify import certify
from klein_sieve.miner.search import mine
from klein_sieve.models.config import OutputFormat, RunConfig
from klein_sieve.models.vectors import ExponentVector
from klein_sieve.report import (
    Report,
    certificate_report,
    check_report,
    dissection_report,
    enumeration_report,
    mine_report,
    write_report,
)
from klein_sieve.series import dissect
from klein_sieve.tables import TABLES, run_table

log = logging.getLogger(__name__)

FORMATS = click.Choice([f.value for f in OutputFormat])


def _fail(message: str, code: int = 2) -> None:
    """Print to stderr and exit; 2 for usage and budget errors, 1 for mismatches."""
    click.echo(f"Error: {message}", err=True)
    sys.exit(code)


def _settings(ctx: click.Context, **overrides) -> RunConfig:
    """Config file values with explicit command-line flags layered on top."""
    cfg: RunConfig = ctx.obj["config"]
    changes = {k: v for k, v in overrides.items() if v is not None}
    try:
        return replace(cfg, **changes).validate()
    except (ConfigError, ValueError) as exc:
        _fail(str(exc))


def _parse_vector(text: str, p: int) -> ExponentVector:
    try:
        return ExponentVector.parse(text, p)
    except ConfigError as exc:
        _fail(str(exc))


def _emit(report: Report, cfg: RunConfig) -> None:
    text = report.render(cfg.output_format, cfg)
    if write_report(text, cfg.output_path):
        log.info("Report written to %s", cfg.output_path)
    else:
        click.echo(text, nl=False)
    if not report.passed:
        sys.exit(1)


@click.group()
@click.option("-c", "--config", "config_path", default=None, help="Path to config TOML file")
@click.option("-v", "--verbose", is_flag=True, help="Enable debug logging")
@click.pass_context
def cli(ctx: click.Context, config_path: str | None, verbose: bool) -> None:
    """klein-sieve - Exact q-series engine and congruence miner for Klein form products."""
    ctx.ensure_object(dict)
    try:
        cfg = load_config(config_path)
    except ConfigError as exc:
        _fail(str(exc))
    ctx.obj["config_path"] = config_path
    ctx.obj["config"] = cfg
    ctx.obj["verbose"] = verbose

    level = logging.DEBUG if verbose else getattr(logging, cfg.log_level.upper(), logging.INFO)
    logging.basicConfig(
        level=level,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )


def output_options(f):
    f = click.option("-o", "--output", "output_path", default=None, help="Write the report here")(f)
    f = click.option("--format", "output_format", type=FORMATS, default=None, help="Report format")(f)
    return f


# ── Lattice ────────────────────────────────────────────


@cli.command("enumerate")
@click.option("-p", "--prime", type=int, default=None, help="Prime level p >= 5")
@click.option("--a0", type=int, default=None, help="Even exponent of eta(p tau)")
@click.option("--long-running", is_flag=True, help="Raise the enumeration budget")
@output_options
@click.pass_context
def cmd_enumerate(ctx, prime, a0, long_running, output_format, output_path) -> None:
    """List every holomorphic exponent vector with the given a0."""
    cfg = _settings(ctx, prime=prime, a0=a0, long_running=long_running or None,
                    output_format=output_format, output_path=output_path)
    try:
        vectors = enumerate_lattice(cfg.prime, cfg.a0, budget=cfg.budget)
    except BudgetError as exc:
        _fail(f"{exc} (estimate {exc.estimate:,})")
    expected = TABLE2_COUNTS.get(cfg.prime, {}).get(cfg.a0)
    _emit(enumeration_report(cfg.prime, cfg.a0, vectors, expected), cfg)


# ── Mining ─────────────────────────────────────────────


@cli.command("mine")
@click.option("-p", "--prime", type=int, default=None, help="Prime level p >= 5")
@click.option("--a0", type=int, default=None, help="Even exponent of eta(p tau)")
@click.option("--depth", "screen_depth", type=int, default=None, help="Screening depth")
@click.option("--jmax", "j_max", type=int, default=None, help="Chimeral levels to check")
@click.option("--nmax", "n_max", type=int, default=None, help="Coefficient window of the series route")
@click.option("-w", "--workers", type=int, default=None, help="Screening processes")
@click.option("--long-running", is_flag=True, help="Raise the enumeration budget")
@output_options
@click.pass_context
def cmd_mine(ctx, prime, a0, screen_depth, j_max, n_max, workers, long_running,
             output_format, output_path) -> None:
    """Mine a (p, a0) slice for Ramanujan-type and chimeral congruences."""
    cfg = _settings(ctx, prime=prime, a0=a0, screen_depth=screen_depth, j_max=j_max,
                    n_max=n_max, workers=workers, long_running=long_running or None,
                    output_format=output_format, output_path=output_path)
    try:
        report = mine(cfg.prime, cfg.a0, cfg)
    except BudgetError as exc:
        _fail(f"{exc} (estimate {exc.estimate:,})")
    _emit(mine_report(report), cfg)


@cli.command("verify")
@click.option("-p", "--prime", type=int, required=True, help="Prime level p >= 5")
@click.option("--vector", required=True, help="Exponent vector, a0 first: 6,1,0,0,0,0,-4")
@click.option("--jmax", "j_max", type=int, default=None, help="Chimeral levels to check")
@click.option("--nmax", "n_max", type=int, default=None, help="Coefficient window of the series route")
@output_options
@click.pass_context
def cmd_verify(ctx, prime, vector, j_max, n_max, output_format, output_path) -> None:
    """Certify a(p^j n) = 0 (mod p^(alpha j)) for one vector."""
    cfg = _settings(ctx, prime=prime, j_max=j_max, n_max=n_max,
                    output_format=output_format, output_path=output_path)
    v = _parse_vector(vector, prime)
    if v.a0 < 2 or v.a0 % 2:
        _fail(f"a0 must be an even integer >= 2, got {v.a0}")
    try:
        cert = certify(v, cfg.j_max, cfg.chimeral_window)
    except KleinSieveError as exc:
        _fail(str(exc), code=1)
    _emit(certificate_report(cert), cfg)


# ── Dissection ─────────────────────────────────────────


@cli.command("dissect")
@click.option("-p", "--prime", type=int, required=True, help="Prime level p >= 5")
@click.option("--vector", required=True, help="Exponent vector, a0 first")
@click.option("-r", "--residue", type=int, default=None, help="Only this residue class")
@click.option("--terms", type=int, default=10, show_default=True, help="Coefficients per component")
@output_options
@click.pass_context
def cmd_dissect(ctx, prime, vector, residue, terms, output_format, output_path) -> None:
    """Decompose f(tau/p) over the Gamma(p) components and print U_{p,r} coefficients."""
    cfg = _settings(ctx, prime=prime, output_format=output_format, output_path=output_path)
    v = _parse_vector(vector, prime)
    if residue is not None and not 0 <= residue < prime:
        _fail(f"residue must lie in 0..{prime - 1}, got {residue}")
    try:
        table = decompose(v)
    except UnsupportedError as exc:
        _fail(str(exc))
    except KleinSieveError as exc:
        _fail(str(exc), code=1)
    if residue is not None:
        table.rows = {residue: table.rows[residue]}
    f = product_to_precision(v, prime * terms)
    coefficients = {
        r: [str(c) for c in dissect(f, prime, r).window(Fraction(r, prime), terms)]
        for r in table.rows
    }
    _emit(dissection_report(table, coefficients), cfg)


# ── Tables ─────────────────────────────────────────────


@cli.command("tables")
@click.argument("table_id", type=click.Choice(sorted(TABLES)))
@click.option("--jmax", "j_max", type=int, default=None, help="Chimeral levels to check")
@click.option("-w", "--workers", type=int, default=None, help="Screening processes")
@click.option("--long-running", is_flag=True, help="Include the large cells")
@output_options
@click.pass_context
def cmd_tables(ctx, table_id, j_max, workers, long_running, output_format, output_path) -> None:
    """Regenerate a table and diff it against the embedded expectations."""
    cfg = _settings(ctx, j_max=j_max, workers=workers, long_running=long_running or None,
                    output_format=output_format, output_path=output_path)
    try:
        results = run_table(table_id, cfg)
    except BudgetError as exc:
        _fail(f"{exc} (estimate {exc.estimate:,})")
    _emit(check_report(table_id, results), cfg)


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
