"""Strength sweeps over a scenario with CSV and JSON emission.

Sweeps are deterministic: the same configuration always produces byte
identical output.  Floats are printed with 17 significant digits so parsing
an emitted file recovers the in-memory values exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .channels import ChannelKind
from .evolution import ChannelScenario, Mode, coherence_l1, evolve
from .negativity import (
    EsdReport,
    NoClosedFormError,
    esd_report,
    negativity_analytic,
    negativity_numeric,
)
from .states import StateParams

TOOL_VERSION = "0.1.0"

CSV_HEADER = "gamma,negativity,negativity_analytic,coherence"


@dataclass(frozen=True)
class SweepRow:
    gamma: float
    negativity: float
    negativity_analytic: float | None
    coherence: float


@dataclass(frozen=True)
class SweepResult:
    kind: ChannelKind
    mode: Mode
    b: float
    c: float
    rows: tuple[SweepRow, ...]
    esd: EsdReport


def run_sweep(
    kind: ChannelKind,
    mode: Mode,
    params: StateParams,
    start: float = 0.0,
    stop: float = 1.0,
    steps: int = 513,
    tol: float = 1e-9,
) -> SweepResult:
    """Tabulate negativity and coherence over a uniform strength grid."""
    kind, mode = ChannelKind(kind), Mode(mode)
    if steps < 2:
        raise ValueError("a sweep grid needs at least 2 points")
    if not (0.0 <= start < stop <= 1.0):
        raise ValueError(f"grid must satisfy 0 <= start < stop <= 1, got [{start}, {stop}]")

    rows = []
    for k in range(steps):
        g = start + (stop - start) * k / (steps - 1)
        scenario = ChannelScenario.at(kind, mode, g)
        state = evolve(scenario, params)
        try:
            analytic = negativity_analytic(scenario, params)
        except NoClosedFormError:
            analytic = None
        rows.append(
            SweepRow(
                gamma=g,
                negativity=negativity_numeric(state).value,
                negativity_analytic=analytic,
                coherence=coherence_l1(state),
            )
        )
    report = esd_report(kind, mode, params, tol=tol)
    return SweepResult(kind=kind, mode=mode, b=params.b, c=params.c, rows=tuple(rows), esd=report)


def _fmt(x: float | None) -> str:
    return "" if x is None else format(x, ".17g")


def sweep_csv(result: SweepResult) -> str:
    lines = [CSV_HEADER]
    for r in result.rows:
        lines.append(
            f"{_fmt(r.gamma)},{_fmt(r.negativity)},{_fmt(r.negativity_analytic)},{_fmt(r.coherence)}"
        )
    return "\n".join(lines) + "\n"


def parse_sweep_csv(text: str) -> list[SweepRow]:
    """Read back a sweep CSV; inverse of :func:`sweep_csv` on the rows."""
    lines = text.strip().split("\n")
    if lines[0] != CSV_HEADER:
        raise ValueError(f"unexpected header {lines[0]!r}")
    rows = []
    for line in lines[1:]:
        g, n, na, coh = line.split(",")
        rows.append(
            SweepRow(
                gamma=float(g),
                negativity=float(n),
                negativity_analytic=float(na) if na else None,
                coherence=float(coh),
            )
        )
    return rows


def esd_report_obj(report: EsdReport) -> dict:
    return {
        "kind": report.kind.value,
        "mode": report.mode.value,
        "b": report.b,
        "c": report.c,
        "esd_gamma": report.esd_gamma,
        "analytic_gamma": report.analytic_gamma,
        "classification": report.classification,
    }


def sweep_json_obj(result: SweepResult) -> dict:
    return {
        "kind": result.kind.value,
        "mode": result.mode.value,
        "b": result.b,
        "c": result.c,
        "tool_version": TOOL_VERSION,
        "rows": [
            {
                "gamma": r.gamma,
                "negativity": r.negativity,
                "negativity_analytic": r.negativity_analytic,
                "coherence": r.coherence,
            }
            for r in result.rows
        ],
        "esd": esd_report_obj(result.esd),
    }


def sweep_json(result: SweepResult) -> str:
    return json.dumps(sweep_json_obj(result), indent=2) + "\n"


def render_sweep(result: SweepResult, fmt: str) -> str:
    if fmt == "csv":
        return sweep_csv(result)
    if fmt == "json":
        return sweep_json(result)
    raise ValueError(f"unknown format {fmt!r}")
