"""
Command-line frontend for KRStrata
"""
import csv
import io
import json
import logging
from enum import Enum
from pathlib import Path
from typing import Iterable, List, Optional

import typer

from app.core.config import settings
from app.core.exceptions import KRStrataError
from app.core.logging import configure_logging
from app.schemas.stratum import StratumReportRow
from app.services.report_service import ReportService

logger = logging.getLogger(__name__)

app = typer.Typer(name="krstrata", help="Kottwitz-Rapoport strata of Siegel modular varieties with Iwahori level")


class OutputFormat(str, Enum):
    csv = "csv"
    json = "json"


class TableFormat(str, Enum):
    text = "text"
    json = "json"


CSV_FIELDS = ["g", "word", "length", "p_rank", "superspecial_at", "is_supersingular", "component_count"]


def _setup(verbose: bool) -> ReportService:
    configure_logging("DEBUG" if verbose else None)
    return ReportService()


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        typer.echo(text, nl=False)
    else:
        out.write_text(text, encoding="utf-8")
        logger.info(f"wrote {out}")


def _fail(error: Exception) -> None:
    typer.echo(f"error: {error}", err=True)
    raise typer.Exit(code=1)


def to_json_line(row: StratumReportRow) -> str:
    return json.dumps(row.model_dump(), sort_keys=True)


def to_csv(rows: Iterable[StratumReportRow]) -> str:
    rows = list(rows)
    table_keys = list(rows[0].r_table) if rows else []
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_FIELDS + table_keys, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        record = {
            "g": row.g,
            "word": " ".join(str(i) for i in row.word),
            "length": row.length,
            "p_rank": row.p_rank,
            "superspecial_at": " ".join(str(i) for i in row.superspecial_at),
            "is_supersingular": int(row.is_supersingular),
            "component_count": "" if row.component_count is None else row.component_count,
        }
        record.update(row.r_table)
        writer.writerow(record)
    return buffer.getvalue()


def format_table(rows) -> str:
    header = ["g", "#strata", "#p-rank 0", "dim superspecial", "dim p-rank 0", "dim A_I"]
    lines = [header] + [
        [str(r.g), str(r.strata_count), str(r.prank_zero_count),
         str(r.superspecial_union_dimension), str(r.prank_zero_dimension), str(r.max_length)]
        for r in rows
    ]
    widths = [max(len(line[k]) for line in lines) for k in range(len(header))]
    return "".join("  ".join(cell.rjust(w) for cell, w in zip(line, widths)) + "\n" for line in lines)


@app.command()
def table(
    g_max: int = typer.Option(4, "--g", "--g-max", help="Largest genus"),
    fmt: TableFormat = typer.Option(TableFormat.text, "--format"),
    out: Optional[Path] = typer.Option(None, "--out"),
    verbose: bool = typer.Option(False, "--verbose", "-v"),
):
    """Strata counts and dimensions for g = 1..g_max"""
    service = _setup(verbose)
    try:
        response = service.table(g_max)
    except KRStrataError as e:
        _fail(e)
    if fmt == TableFormat.json:
        _emit(json.dumps(response.model_dump(), indent=2, sort_keys=True) + "\n", out)
    else:
        _emit(format_table(response.rows), out)


@app.command("enumerate")
def enumerate_strata(
    g: int = typer.Option(..., "--g"),
    fmt: OutputFormat = typer.Option(OutputFormat.csv, "--format"),
    filter_prank: Optional[int] = typer.Option(None, "--filter-prank", help="Keep strata of this p-rank"),
    out: Optional[Path] = typer.Option(None, "--out"),
    verbose: bool = typer.Option(False, "--verbose", "-v"),
):
    """Every KR stratum, ordered by length then alcove"""
    service = _setup(verbose)
    try:
        rows = service.enumerate(g, filter_prank)
    except KRStrataError as e:
        _fail(e)
    if fmt == OutputFormat.json:
        _emit("".join(to_json_line(row) + "\n" for row in rows), out)
    else:
        _emit(to_csv(rows), out)


@app.command()
def stratum(
    g: int = typer.Option(..., "--g"),
    word: str = typer.Option("", "--word", help="Reflection indices in front of tau, e.g. '2 0 1'"),
    p: Optional[int] = typer.Option(None, "--p"),
    N: Optional[int] = typer.Option(None, "--N"),
    out: Optional[Path] = typer.Option(None, "--out"),
    verbose: bool = typer.Option(False, "--verbose", "-v"),
):
    """Report for the stratum s_{word} tau"""
    service = _setup(verbose)
    try:
        row = service.stratum(g, word, p, N)
    except KRStrataError as e:
        _fail(e)
    _emit(to_json_line(row) + "\n", out)


@app.command()
def counts(
    g: int = typer.Option(..., "--g"),
    p: int = typer.Option(..., "--p"),
    N: int = typer.Option(..., "--N"),
    out: Optional[Path] = typer.Option(None, "--out"),
    verbose: bool = typer.Option(False, "--verbose", "-v"),
):
    """Mass formula, #A_tau and component counts of superspecial strata"""
    service = _setup(verbose)
    try:
        response = service.counts(g, p, N)
    except KRStrataError as e:
        _fail(e)
    _emit(json.dumps(response.model_dump(), indent=2, sort_keys=True) + "\n", out)


@app.command()
def verify(
    g_max: int = typer.Option(4, "--g", "--g-max"),
    fmt: TableFormat = typer.Option(TableFormat.text, "--format"),
    out: Optional[Path] = typer.Option(None, "--out"),
    verbose: bool = typer.Option(False, "--verbose", "-v"),
):
    """Run all cross-checks; exits 1 if any fails"""
    service = _setup(verbose)
    try:
        response = service.verify(g_max)
    except KRStrataError as e:
        _fail(e)
    if fmt == TableFormat.json:
        _emit(json.dumps(response.model_dump(), indent=2, sort_keys=True) + "\n", out)
    else:
        lines: List[str] = [
            f"{'PASS' if c.passed else 'FAIL'} {c.name}: {c.detail}\n" for c in response.checks
        ]
        _emit("".join(lines), out)
    if not response.passed:
        raise typer.Exit(code=1)


@app.callback()
def main():
    """KRStrata command-line interface"""
    logger.debug(f"{settings.APP_NAME} {settings.VERSION}")


if __name__ == "__main__":
    app()
