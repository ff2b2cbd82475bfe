"""Report rendering and the CLI's logging and console setup."""

from __future__ import annotations

import csv
import io
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from twistlab.core.errors import ConfigError
from twistlab.verify.report import VerificationReport

SCHEMA_VERSION = 1
CSV_FIELDS = ("name", "samples", "seed", "step", "max_residual", "mean_residual", "tol", "pass")

# machine output stays on stdout; everything meant for people goes to stderr
console = Console(stderr=True, highlight=False)


def configure_logging(verbose: bool = False) -> None:
    """Route library logging through rich on stderr. DEBUG with --verbose, else WARNING."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=console, show_path=verbose, rich_tracebacks=verbose)],
        force=True,
    )


def summary(reports: Sequence[VerificationReport], wall_time_ms: float | None = None) -> dict:
    passed = sum(report.passed for report in reports)
    return {
        "total": len(reports),
        "passed": passed,
        "failed": len(reports) - passed,
        "wall_time_ms": wall_time_ms,
    }


def render_json(
    reports: Sequence[VerificationReport], wall_time_ms: float | None = None
) -> str:
    document = {
        "schema": SCHEMA_VERSION,
        "reports": [report.to_dict() for report in reports],
        "summary": summary(reports, wall_time_ms),
    }
    return json.dumps(document, indent=2, allow_nan=False) + "\n"


def render_csv(reports: Sequence[VerificationReport]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for report in reports:
        row = report.to_dict()
        writer.writerow({key: "" if row[key] is None else row[key] for key in CSV_FIELDS})
    return buffer.getvalue()


def render(
    reports: Sequence[VerificationReport], fmt: str, wall_time_ms: float | None = None
) -> str:
    if fmt == "csv":
        return render_csv(reports)
    return render_json(reports, wall_time_ms)


def check_writable(path: Path | None) -> None:
    """Fail before any work is done if the report could not be written.

    Raises:
        ConfigError: if the parent directory is missing or the path is a directory
    """
    if path is None:
        return
    if path.is_dir():
        raise ConfigError("X001", f"output path '{path}' is a directory")
    if not path.parent.is_dir():
        raise ConfigError(
            "X001",
            f"output directory '{path.parent}' does not exist",
            "Create the directory or choose another --output",
        )


def write_output(text: str, path: Path | None) -> None:
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        path.write_text(text, encoding="utf-8")


def report_table(reports: Sequence[VerificationReport]) -> Table:
    table = Table(title="twistlab verification", show_lines=False)
    table.add_column("check", style="bold")
    table.add_column("samples", justify="right")
    table.add_column("max residual", justify="right")
    table.add_column("tol", justify="right")
    table.add_column("verdict")
    for report in reports:
        verdict = "[green]pass[/green]" if report.passed else "[red]FAIL[/red]"
        table.add_row(
            report.name,
            str(report.samples),
            f"{report.max_residual:.3e}",
            f"{report.tol:.1e}",
            verdict,
        )
    return table
