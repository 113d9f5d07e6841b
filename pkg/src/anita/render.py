"""Human-readable and machine-readable (JSON) views of check results.

The JSON document is byte-stable: keys are emitted sorted with compact
separators and contain no timestamps, so identical input always produces an
identical body (the CLI and the HTTP service share this renderer).
"""

from __future__ import annotations

import json
import os
import sys

from .checker import (
    CheckReport,
    Countermodel,
    CountermodelFound,
    Incomplete,
    Invalid,
    Sequent,
    Valid,
)
from .formula import ParseError, format_formula

_GREEN = "\x1b[32m"
_RED = "\x1b[31m"
_YELLOW = "\x1b[33m"
_RESET = "\x1b[0m"


def verdict_name(report: CheckReport) -> str:
    verdict = report.verdict
    if isinstance(verdict, Valid):
        return "valid"
    if isinstance(verdict, CountermodelFound):
        return "countermodel"
    if isinstance(verdict, Incomplete):
        return "incomplete"
    return "invalid"


def countermodel_text(model: Countermodel) -> str:
    return str(model)


def report_to_dict(report: CheckReport, latex: str | None = None) -> dict:
    doc: dict = {
        "verdict": verdict_name(report),
        "diagnostics": [
            {"line": d.line, "code": d.code, "message": d.message, "refs": list(d.refs)}
            for d in report.diagnostics
        ],
    }
    if report.sequent is not None:
        doc["sequent"] = {
            "premises": [format_formula(p) for p in report.sequent.premises],
            "conclusion": format_formula(report.sequent.conclusion),
        }
    verdict = report.verdict
    if isinstance(verdict, CountermodelFound):
        doc["countermodel"] = {format_formula(atom): str(sign)
                               for atom, sign in verdict.model.assignments.items()}
    if latex is not None:
        doc["latex"] = latex
    return doc


def parse_error_to_dict(err: ParseError) -> dict:
    return {
        "verdict": "parse_error",
        "diagnostics": [
            {"line": err.line, "code": "PARSE_ERROR",
             "message": f"column {err.column}: {err.message}", "refs": []}
        ],
    }


def to_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def use_color(stream=None) -> bool:
    mode = os.environ.get("ANITA_COLOR", "auto")
    if mode == "never":
        return False
    stream = stream if stream is not None else sys.stdout
    return hasattr(stream, "isatty") and stream.isatty()


def _paint(text: str, color: str, colored: bool) -> str:
    return f"{color}{text}{_RESET}" if colored else text


def render_human(report: CheckReport, colored: bool = False) -> str:
    out: list[str] = []
    verdict = report.verdict
    if isinstance(verdict, Valid):
        out.append(_paint("Valid.", _GREEN, colored))
    elif isinstance(verdict, CountermodelFound):
        out.append(_paint(f"Countermodel: {verdict.model}", _GREEN, colored))
    elif isinstance(verdict, Incomplete):
        out.append(_paint("Incomplete.", _YELLOW, colored))
        for start in verdict.open_branches:
            out.append(f"Open branch at line {start}.")
    else:
        out.append(_paint("Invalid.", _RED, colored))
    for d in report.diagnostics:
        out.append(_paint(f"Line {d.line}: [{d.code}] {d.message}", _RED, colored))
    return "\n".join(out)


def render_parse_error(err: ParseError, colored: bool = False) -> str:
    return _paint(f"Parse error at line {err.line}, column {err.column}: {err.message}",
                  _RED, colored)


def sequent_text(seq: Sequent) -> str:
    return str(seq)
