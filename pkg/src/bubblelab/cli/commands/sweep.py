"""CLI sweep command: check identities over every cell with ``m + n <= R``."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Annotated

import typer
from filelock import FileLock, Timeout
from rich.console import Console
from rich.table import Table

from bubblelab.cli.common import EXIT_FAIL, ForceOption, limits_for, reporting_errors
from bubblelab.core.limits import Limits
from bubblelab.triangle import (
    IdentityReport,
    reports_to_json,
    resolve_identity_names,
    verify_all,
)
from bubblelab.word import Params

logger = logging.getLogger(__name__)


def sweep_cells(max_r: int) -> list[Params]:
    """Every ``(m, n)`` with ``m + n <= max_r``, ordered by ``m`` then ``n``."""
    return [Params(m, n) for m in range(max_r + 1) for n in range(max_r + 1 - m)]


def _run_cell(p: Params, names: list[str], limits: Limits | None) -> list[IdentityReport]:
    return verify_all(p, names, limits)


def run_sweep(
    cells: list[Params], names: list[str], limits: Limits | None, jobs: int
) -> dict[Params, list[IdentityReport]]:
    """Reports per cell; ``jobs > 1`` spreads cells over worker processes."""
    if jobs <= 1:
        return {p: _run_cell(p, names, limits) for p in cells}
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = {p: pool.submit(_run_cell, p, names, limits) for p in cells}
        return {p: future.result() for p, future in futures.items()}


def _summary_table(results: dict[Params, list[IdentityReport]]) -> Table:
    table = Table(title="Identity Sweep")
    table.add_column("m", justify="right", style="cyan")
    table.add_column("n", justify="right", style="cyan")
    table.add_column("Passed", justify="right", style="green")
    table.add_column("Failed", style="red")
    for p, reports in results.items():
        failed = [report.identity for report in reports if not report.passed]
        passed = len(reports) - len(failed)
        table.add_row(str(p.m), str(p.n), f"{passed}/{len(reports)}", ", ".join(failed) or "-")
    return table


def _write_report(path: Path, reports: list[IdentityReport]) -> None:
    lock = FileLock(f"{path}.lock", timeout=0)
    try:
        with lock:
            path.write_bytes(reports_to_json(reports))
    except Timeout:
        typer.echo(f"Error: {path} is locked by another sweep.", err=True)
        raise typer.Exit(EXIT_FAIL) from None


def sweep_command(
    max_r: Annotated[int, typer.Option("--max-r", min=0, help="Largest m + n to check.")],
    identities: Annotated[
        str, typer.Option("--identities", help="Comma-separated identity names, or 'all'.")
    ] = "all",
    jobs: Annotated[int, typer.Option("--jobs", min=1, help="Worker processes.")] = 1,
    report: Annotated[
        Path | None, typer.Option("--report", help="Write all reports to this JSON file.")
    ] = None,
    force: ForceOption = False,
) -> None:
    """Check identities on every cell with ``m + n <= R`` and print a summary table.

    Failing reports are printed below the table in canonical cell order.

    Raises:
        typer.Exit: 1 if any identity fails or the report file is locked,
            2 on an unknown name, 3 on a resource cap.
    """
    limits = limits_for(force)
    start = time.perf_counter()
    with reporting_errors():
        names = resolve_identity_names(identities)
        results = run_sweep(sweep_cells(max_r), names, limits, jobs)
    elapsed = time.perf_counter() - start
    logger.info("Swept %d cells with %d identities in %.2fs", len(results), len(names), elapsed)

    reports = [report for cell in results.values() for report in cell]
    Console().print(_summary_table(results))
    failures = [report for report in reports if not report.passed]
    for failure in failures:
        typer.echo(failure.line())
    passed = len(reports) - len(failures)
    typer.echo(f"{passed}/{len(reports)} PASS")

    if report is not None:
        _write_report(report, reports)
    if failures:
        raise typer.Exit(EXIT_FAIL)
