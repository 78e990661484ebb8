from enum import Enum

import orjson
from rich.console import Console
from rich.table import Table

from cli.report_models import CheckStatus, Report

_STATUS_STYLE = {
    CheckStatus.PASS: "[green]✅ pass[/green]",
    CheckStatus.FAIL: "[red]❌ fail[/red]",
    CheckStatus.FLAG: "[yellow]🔍 flag[/yellow]",
}


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    LATEX = "latex"


def _invariant_payload(report: Report) -> dict:
    entry = report.results[0]
    return {"name": entry.name, "params": entry.params, "value": entry.value}


def to_json(report: Report) -> bytes:
    """Sortierte Schlüssel, Zahlen als Strings, ohne Laufzeit. Einzelne Invarianten als flaches Objekt."""
    if report.command == "invariant" and len(report.results) == 1:
        payload = _invariant_payload(report)
    else:
        payload = report.model_dump(mode="json")
    return orjson.dumps(payload, option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2)


def _results_table(report: Report) -> Table:
    table = Table(title=f"{report.command} {' '.join(f'{k}={v}' for k, v in report.parameters.items())}".strip())
    table.add_column("Größe")
    table.add_column("Parameter")
    table.add_column("Wert", justify="right")
    table.add_column("Anker", overflow="fold")
    for entry in report.results:
        params = ", ".join(f"{k}={v}" for k, v in entry.params.items())
        table.add_row(entry.name, params, entry.value, entry.anchor)
    return table


def _checks_table(report: Report) -> Table:
    table = Table(title="Prüfungen")
    table.add_column("Suite")
    table.add_column("d", justify="right")
    table.add_column("Prüfung")
    table.add_column("Status")
    table.add_column("Erwartet", justify="right", overflow="fold")
    table.add_column("Ist", justify="right", overflow="fold")
    table.add_column("Anker / Detail", overflow="fold")
    for check in report.checks:
        table.add_row(
            check.suite,
            "" if check.d is None else str(check.d),
            check.name,
            _STATUS_STYLE[check.status],
            check.expected or "",
            check.actual or "",
            check.detail or check.anchor,
        )
    return table


def render_text(report: Report, console: Console):
    if report.results:
        console.print(_results_table(report))
    if report.checks:
        console.print(_checks_table(report))
        failed = sum(1 for c in report.checks if c.failed)
        console.print(f"{len(report.checks)} Prüfungen, {failed} fehlgeschlagen → {report.status}")
    if report.timing_seconds is not None:
        console.print(f"⏱️ {report.timing_seconds:.3f} s")


def render_latex(report: Report) -> str:
    lines = []
    for entry in report.results:
        body = entry.latex if entry.latex is not None else entry.value
        lines.append(f"% {entry.name} ({entry.anchor})")
        lines.append(f"\\[ {body} \\]")
    if report.checks:
        lines.append("\\begin{tabular}{llll}")
        lines.append("Suite & Prüfung & $d$ & Status \\\\ \\hline")
        for check in report.checks:
            d = "" if check.d is None else str(check.d)
            name = check.name.replace("_", "\\_")
            lines.append(f"{check.suite} & {name} & {d} & {check.status.value} \\\\")
        lines.append("\\end{tabular}")
    return "\n".join(lines)


def emit(report: Report, output_format: OutputFormat, console: Console):
    if output_format is OutputFormat.JSON:
        console.file.write(to_json(report).decode() + "\n")
    elif output_format is OutputFormat.LATEX:
        console.file.write(render_latex(report) + "\n")
    else:
        render_text(report, console)
