"""Report rendering: aligned text tables through pandas, or one schema-tagged JSON document."""

import json
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence, Union

import pandas as pd

from cli.schema import ModelDocument, document_data
from exactpoly.polynomial import Polynomial
from exactpoly.rational import format_vector
from exactpoly.text import format_polynomial
from gkm_core.graded import Generator
from gkm_core.presentation import AssignmentTuple
from strata_oracle.space import StrataAssignment

SCHEMA = "assignalg.report/v1"

Section = tuple[str, Union[str, list[dict[str, Any]]]]


@dataclass
class Outcome:
    """Result of one subcommand: a verdict, machine payload and text sections."""

    command: str
    ok: bool
    verdict: str
    data: dict[str, Any] = field(default_factory=dict)
    sections: list[Section] = field(default_factory=list)
    document: Optional[ModelDocument] = None
    degree_bound: Optional[int] = None

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1


def table(rows: Sequence[dict[str, Any]]) -> str:
    if not rows:
        return "(none)"
    return pd.DataFrame(list(rows)).to_string(index=False)


def poly_text(p: Polynomial) -> str:
    return format_polynomial(p)


def tuple_text(element: AssignmentTuple) -> str:
    return "(" + ", ".join(format_polynomial(p) for p in element.polys) + ")"


def strata_text(assignment: StrataAssignment) -> dict[str, str]:
    return {k: format_polynomial(v) for k, v in assignment.values.items()}


def generator_rows(generators: Sequence[Generator]) -> list[dict[str, Any]]:
    return [
        {"degree": g.degree, "generator": tuple_text(g.element)} for g in generators
    ]


def dims_rows(**columns: Sequence[Any]) -> list[dict[str, Any]]:
    """One row per degree with the given per-degree columns side by side."""
    length = max((len(c) for c in columns.values()), default=0)
    return [
        {"degree": d, **{name: values[d] for name, values in columns.items() if d < len(values)}}
        for d in range(length)
    ]


def vector_text(values) -> str:
    return "(" + ", ".join(format_vector(values)) + ")"


def render_text(outcome: Outcome) -> str:
    lines = []
    header = outcome.command
    if outcome.document is not None and outcome.document.name:
        header += f" {outcome.document.name}"
    if outcome.degree_bound is not None:
        header += f" (degree bound {outcome.degree_bound})"
    lines.append(header)
    for title, content in outcome.sections:
        lines.append("")
        lines.append(f"{title}:")
        lines.append(content if isinstance(content, str) else table(content))
    lines.append("")
    lines.append(f"verdict: {outcome.verdict}")
    return "\n".join(lines) + "\n"


def render_machine(outcome: Outcome) -> str:
    payload = {
        "schema": SCHEMA,
        "command": outcome.command,
        "ok": outcome.ok,
        "verdict": outcome.verdict,
        "degree_bound": outcome.degree_bound,
        "input": document_data(outcome.document) if outcome.document is not None else None,
        "result": outcome.data,
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
