"""Verification reports: tolerance-aware inequality checks and their JSON
and CSV serializations.

The tolerance rule for "lhs <= rhs" is lhs <= rhs*(1+tol) + tol — relative
slack away from zero, absolute slack near it. Every check carries a slack
value with the convention that the check holds iff slack >= 0, so a report
consumer can re-derive `holds` from the row alone. Reals are serialized
with 17 significant digits, which round-trips doubles; two runs with the
same inputs and seed produce byte-identical documents (timings are
excluded unless explicitly requested).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Optional

LE = "<="
GE = ">="
EQ = "=="
ERROR = "error"


@dataclass(frozen=True)
class Check:
    name: str
    lhs: float
    rhs: float
    relation: str
    holds: bool
    slack: float
    reason: str = ""


def _le_slack(lhs: float, rhs: float, tol: float) -> float:
    return float(rhs) * (1.0 + tol) + tol - float(lhs)


def check_le(name: str, lhs: float, rhs: float, tol: float) -> Check:
    slack = _le_slack(lhs, rhs, tol)
    return Check(name, float(lhs), float(rhs), LE, slack >= 0.0, slack)


def check_ge(name: str, lhs: float, rhs: float, tol: float) -> Check:
    slack = _le_slack(rhs, lhs, tol)
    return Check(name, float(lhs), float(rhs), GE, slack >= 0.0, slack)


def check_eq(name: str, lhs: float, rhs: float, tol: float) -> Check:
    slack = min(_le_slack(lhs, rhs, tol), _le_slack(rhs, lhs, tol))
    return Check(name, float(lhs), float(rhs), EQ, slack >= 0.0, slack)


def check_error(name: str, reason: str) -> Check:
    return Check(name, 0.0, 0.0, ERROR, False, -1.0, reason)


@dataclass
class VerificationReport:
    tool_version: str
    seed: Optional[int]
    tolerance: float
    graph_summary: dict
    quantities: dict[str, float] = field(default_factory=dict)
    witnesses: dict[str, list[int]] = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    timing_ms: dict[str, float] = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks)


def _json_fragment(value, out: list[str]) -> None:
    if value is None:
        out.append("null")
    elif value is True:
        out.append("true")
    elif value is False:
        out.append("false")
    elif isinstance(value, int):
        out.append(repr(value))
    elif isinstance(value, float):
        out.append(format(value, ".17g"))
    elif isinstance(value, str):
        out.append('"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"')
    elif isinstance(value, dict):
        out.append("{")
        for i, (k, v) in enumerate(value.items()):
            if i:
                out.append(", ")
            _json_fragment(str(k), out)
            out.append(": ")
            _json_fragment(v, out)
        out.append("}")
    elif isinstance(value, (list, tuple)):
        out.append("[")
        for i, v in enumerate(value):
            if i:
                out.append(", ")
            _json_fragment(v, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(value)!r}")


def _check_row(c: Check) -> dict:
    return {"name": c.name, "lhs": c.lhs, "rhs": c.rhs, "relation": c.relation,
            "holds": c.holds, "slack": c.slack, "reason": c.reason}


def emit_report(report: VerificationReport, fmt: str = "json",
                include_timing: bool = False) -> str:
    """Render the report. `fmt` is "json" or "csv"; timings are volatile and
    only appear when asked for, keeping default output reproducible."""
    if fmt == "json":
        doc = {
            "tool_version": report.tool_version,
            "seed": report.seed,
            "tolerance": report.tolerance,
            "graph_summary": report.graph_summary,
            "quantities": report.quantities,
            "witnesses": report.witnesses,
            "checks": [_check_row(c) for c in report.checks],
            "timing_ms": dict(report.timing_ms) if include_timing else {},
        }
        out: list[str] = []
        _json_fragment(doc, out)
        return "".join(out) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["name", "lhs", "rhs", "relation", "holds", "slack", "reason"])
        for c in report.checks:
            writer.writerow([c.name, format(c.lhs, ".17g"), format(c.rhs, ".17g"),
                             c.relation, str(c.holds).lower(),
                             format(c.slack, ".17g"), c.reason])
        return buf.getvalue()
    raise ValueError(f"unknown report format {fmt!r}")
