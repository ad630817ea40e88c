"""Report rendering: versioned JSON envelope, CSV rows and plain text."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path

from klein_sieve import __version__
from klein_sieve.models.config import OutputFormat, RunConfig

SCHEMA_VERSION = 1

# Fields of RunConfig that only affect wall time or presentation.
_VOLATILE_CONFIG = ("workers", "chunk_size", "log_level", "output_path")


def config_section(config: RunConfig) -> dict:
    """Serialized run configuration, without the fields that never change results."""
    out = config.to_dict()
    for key in _VOLATILE_CONFIG:
        out.pop(key, None)
    return out


@dataclass
class Report:
    """One command's result in all three output formats."""

    command: str
    payload: dict
    header: list[str] = field(default_factory=list)
    rows: list[list] = field(default_factory=list)
    lines: list[str] = field(default_factory=list)
    passed: bool = True

    def envelope(self, config: RunConfig) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "engine_version": __version__,
            "command": self.command,
            "config": config_section(config),
            "passed": self.passed,
            "result": self.payload,
        }

    def render(self, fmt: OutputFormat, config: RunConfig) -> str:
        if fmt is OutputFormat.JSON:
            return json.dumps(self.envelope(config), indent=2) + "\n"
        if fmt is OutputFormat.CSV:
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(self.header)
            writer.writerows(self.rows)
            return buf.getvalue()
        return "\n".join(self.lines) + "\n"


def write_report(text: str, path: str | Path | None) -> bool:
    """Write to ``path``; returns False when the caller should print instead."""
    if path is None:
        return False
    target = Path(path).expanduser()
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text)
    return True


# ── Builders ───────────────────────────────────────────


def enumeration_report(p: int, a0: int, vectors, expected: int | None = None) -> Report:
    passed = expected is None or expected == len(vectors)
    payload = {"prime": p, "a0": a0, "count": len(vectors), "vectors": [str(v) for v in vectors]}
    if expected is not None:
        payload["expected"] = expected
    lines = [f"p={p} a0={a0}: {len(vectors)} lattice points"]
    if expected is not None and not passed:
        lines.append(f"  expected {expected}")
    lines += [f"  ({v})" for v in vectors]
    return Report(
        command="enumerate",
        payload=payload,
        header=[f"a{i}" for i in range((p + 1) // 2)],
        rows=[list(v.a) for v in vectors],
        lines=lines,
        passed=passed,
    )


def mine_report(report) -> Report:
    rows = [[str(c.vector), c.kind.value, c.alpha, ""] for c in report.certified]
    rows += [[str(c.vector), "chimeral", "", c.order] for c in report.chimeral]
    lines = [
        f"p={report.p} a0={report.a0}: {report.total} points, {report.screened} screened, "
        f"{report.orbit_filtered} after orbit filter",
        f"Certified ({len(report.certified)}):",
    ]
    lines += [f"  ({c.vector})  {c.kind.value}  alpha={c.alpha}" for c in report.certified]
    lines.append(f"Chimeral ({len(report.chimeral)}):")
    lines += [f"  ({c.vector})  order={c.order}" for c in report.chimeral]
    lines.append(f"Rejected: {report.rejected_count}")
    return Report(
        command="mine",
        payload=report.to_dict(),
        header=["vector", "kind", "alpha", "order"],
        rows=rows,
        lines=lines,
    )


def certificate_report(cert) -> Report:
    data = cert.to_dict()
    lines = [f"({cert.vector}) at p={cert.p}: {cert.kind.value}"]
    if cert.alpha is not None:
        lines.append(f"  alpha:     {cert.alpha}")
    if cert.eigenvalue is not None:
        lines.append(f"  lambda:    {cert.eigenvalue}")
    if cert.min_poly is not None:
        lines.append(f"  min poly:  {cert.min_poly}")
    if cert.chimeral is not None:
        lines.append(f"  order:     {cert.chimeral.order}")
        if cert.chimeral.failure is not None:
            fail = cert.chimeral.failure
            lines.append(f"  fails at:  j={fail.j} n={fail.n} (valuation {fail.valuation})")
    lines.append(f"  window:    {cert.window}")
    return Report(
        command="verify",
        payload=data,
        header=["vector", "prime", "kind", "alpha", "lambda", "order"],
        rows=[[
            str(cert.vector), cert.p, cert.kind.value, cert.alpha,
            data.get("lambda", ""), data.get("order", ""),
        ]],
        lines=lines,
        passed=cert.certified,
    )


def dissection_report(table, coefficients: dict[int, list[str]]) -> Report:
    payload = table.to_dict()
    payload["coefficients"] = {str(r): c for r, c in sorted(coefficients.items())}
    method = table.method if table.fallback is None else f"{table.method}, {table.fallback}"
    lines = [f"({table.source}) at p={table.source.p} [{method}]"]
    rows = []
    for r, row in sorted(table.rows.items()):
        text = ",".join(str(c) for c in row)
        lines.append(f"  r={r}: ({text})")
        rows.append([r, text])
    return Report(
        command="dissect", payload=payload, header=["residue", "row"], rows=rows, lines=lines,
    )


def check_report(table_id: str, results) -> Report:
    passed = all(r.passed for r in results)
    lines = [f"{table_id}: {'ok' if passed else 'MISMATCH'}"]
    lines += [
        f"  [{'ok' if r.passed else 'FAIL'}] {r.name}" + (f"  {r.detail}" if r.detail else "")
        + ("  (evidence)" if r.evidence_only else "")
        for r in results
    ]
    return Report(
        command="tables",
        payload={"table": table_id, "checks": [r.to_dict() for r in results]},
        header=["name", "passed", "detail", "evidence_only"],
        rows=[[r.name, r.passed, r.detail, r.evidence_only] for r in results],
        lines=lines,
        passed=passed,
    )
