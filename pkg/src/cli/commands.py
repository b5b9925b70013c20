"""Typer application: one subcommand per analysis, shared output and ledger options."""

import logging
from enum import Enum
from pathlib import Path
from typing import Callable, Optional

import typer

from cli import analysis
from cli.corpus import run_corpus
from cli.properties import run_properties
from cli.render import Outcome, render_machine, render_text
from cli.schema import ModelDocument, parse_document, print_document
from config.storage import CORPUS_DIR
from db.database import Database
from exactpoly.errors import AssignmentError
from exactpoly.rational import to_rational
from utils.fingerprint import document_sha256
from utils.timestamps import get_iso_datetime

logger = logging.getLogger(__name__)

app = typer.Typer(help="Exact polynomial assignment algebras of torus actions", no_args_is_help=True)

MALFORMED = 2


class OutputFormat(str, Enum):
    text = "text"
    machine = "machine"


DocumentArg = typer.Argument(..., exists=True, dir_okay=False, help="Model document (JSON)")
DegreeBound = typer.Option(None, "--degree-bound", "-D", min=0, help="Highest degree computed")
Output = typer.Option(OutputFormat.text, "--output", "-o", help="text tables or one JSON document")
Record = typer.Option(False, "--record", help="Store the run in the local ledger")


class _Run:
    """Loads inputs, renders the outcome and maps it to an exit code."""

    def __init__(self, command: str, output: OutputFormat, record: bool):
        self.command = command
        self.output = output
        self.record = record
        self.started_at = get_iso_datetime()
        self.sha256: Optional[str] = None

    def load(self, path: Path) -> ModelDocument:
        text = path.read_text(encoding="utf-8")
        if self.sha256 is None:
            self.sha256 = document_sha256(text)
        return parse_document(text)

    def execute(self, compute: Callable[[], Outcome]) -> None:
        try:
            outcome = compute()
        except AssignmentError as exc:
            typer.secho(f"error: {exc}", fg=typer.colors.RED, err=True)
            self._record(MALFORMED, "malformed input")
            raise typer.Exit(code=MALFORMED)
        except (OSError, ValueError) as exc:
            typer.secho(f"error: {exc}", fg=typer.colors.RED, err=True)
            self._record(MALFORMED, "malformed input")
            raise typer.Exit(code=MALFORMED)

        if self.output is OutputFormat.machine:
            typer.echo(render_machine(outcome), nl=False)
        else:
            typer.echo(render_text(outcome), nl=False)
        self._record(outcome.exit_code, outcome.verdict, outcome.degree_bound)
        raise typer.Exit(code=outcome.exit_code)

    def _record(self, exit_code: int, verdict: str, degree_bound: Optional[int] = None) -> None:
        if not self.record:
            return
        Database.get_instance().record_run(
            self.command,
            self.started_at,
            exit_code,
            verdict=verdict,
            degree_bound=degree_bound,
            document_sha256=self.sha256,
        )


@app.command()
def validate(
    document: Path = DocumentArg,
    canonical: bool = typer.Option(False, "--canonical", help="Print the document in canonical form"),
    output: OutputFormat = Output,
    record: bool = Record,
) -> None:
    """Check a document against the schema and its structural rules."""
    run = _Run("validate", output, record)

    def compute() -> Outcome:
        parsed = run.load(document)
        outcome = analysis.validate(parsed)
        if canonical:
            outcome.sections.append(("canonical form", print_document(parsed).rstrip("\n")))
        return outcome

    run.execute(compute)


@app.command()
def basis(
    document: Path = DocumentArg,
    degree_bound: Optional[int] = DegreeBound,
    output: OutputFormat = Output,
    record: bool = Record,
) -> None:
    """Graded dimensions with a basis listing or minimal generators."""
    run = _Run("basis", output, record)
    run.execute(lambda: analysis.basis(run.load(document), degree_bound))


@app.command()
def members(
    document: Path = DocumentArg,
    tuples: list[str] = typer.Option(
        ..., "--tuple", "-t", help="Polynomials per component or stratum, separated by ';'"
    ),
    output: OutputFormat = Output,
    record: bool = Record,
) -> None:
    """Decide membership of candidate tuples."""
    run = _Run("members", output, record)
    run.execute(lambda: analysis.members(run.load(document), tuples))


@app.command()
def report(
    document: Path = DocumentArg,
    degree_bound: Optional[int] = DegreeBound,
    output: OutputFormat = Output,
    record: bool = Record,
) -> None:
    """Module structure of a presentation, or localization checks of a stratum model."""
    run = _Run("report", output, record)
    run.execute(lambda: analysis.report(run.load(document), degree_bound))


@app.command()
def kirwan(
    document: Path = DocumentArg,
    degree_bound: Optional[int] = DegreeBound,
    circle: Optional[str] = typer.Option(None, "--circle", help="Circle direction, e.g. 1,1"),
    level: Optional[str] = typer.Option(None, "--level", help="Regular level of the moment map"),
    reduced: Optional[Path] = typer.Option(
        None, "--reduced", exists=True, dir_okay=False, help="Presentation of the reduced space"
    ),
    output: OutputFormat = Output,
    record: bool = Record,
) -> None:
    """Kernel K+ + K- of restriction to a level set and the quotient it leaves."""
    run = _Run("kirwan", output, record)

    def compute() -> Outcome:
        parsed = run.load(document)
        return analysis.kirwan(
            parsed,
            degree_bound,
            circle=analysis.circle_option(circle, parsed),
            level=to_rational(level) if level is not None else None,
            reduced=run.load(reduced) if reduced is not None else None,
        )

    run.execute(compute)


@app.command()
def extend(
    document: Path = DocumentArg,
    degree_bound: Optional[int] = DegreeBound,
    output: OutputFormat = Output,
    record: bool = Record,
) -> None:
    """Find a polynomial with the prescribed restrictions, or an obstruction."""
    run = _Run("extend", output, record)
    run.execute(lambda: analysis.extend(run.load(document), degree_bound))


@app.command("quotient-circle")
def quotient_circle(
    document: Path = DocumentArg,
    circle: Optional[str] = typer.Option(None, "--circle", help="Circle direction, e.g. 1,1"),
    degree_bound: Optional[int] = DegreeBound,
    output: OutputFormat = Output,
    record: bool = Record,
) -> None:
    """Quotient a stratum model by a locally free circle and compare the algebras."""
    run = _Run("quotient-circle", output, record)

    def compute() -> Outcome:
        parsed = run.load(document)
        return analysis.quotient_circle(parsed, analysis.circle_option(circle, parsed), degree_bound)

    run.execute(compute)


@app.command("oracle-compare")
def oracle_compare(
    gkm_document: Path = typer.Argument(..., exists=True, dir_okay=False, help="GKM presentation"),
    strata_document: Path = typer.Argument(..., exists=True, dir_okay=False, help="Stratum model"),
    degree_bound: Optional[int] = DegreeBound,
    output: OutputFormat = Output,
    record: bool = Record,
) -> None:
    """Compare graded dimensions of a presentation and a stratum model."""
    run = _Run("oracle-compare", output, record)
    run.execute(
        lambda: analysis.oracle_compare(run.load(gkm_document), run.load(strata_document), degree_bound)
    )


@app.command()
def examples(
    corpus: Path = typer.Option(CORPUS_DIR, "--corpus", file_okay=False, help="Directory of documents"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Also run randomized property checks"),
    samples: int = typer.Option(20, "--samples", min=1, help="Random samples per property"),
    output: OutputFormat = Output,
    record: bool = Record,
) -> None:
    """Run the claims embedded in the bundled documents."""
    run = _Run("examples", output, record)

    def compute() -> Outcome:
        claims = run_corpus(corpus)
        rows = [
            {"document": r.document, "check": r.check, "claim": r.claim,
             "result": "pass" if r.ok else "FAIL", "detail": r.detail}
            for r in claims
        ]
        sections = [("claims", rows)]
        data = {"claims": rows}
        ok = all(r.ok for r in claims)
        if seed is not None:
            properties = run_properties(seed, samples)
            summary = {}
            for result in properties:
                entry = summary.setdefault(result.suite, {"suite": result.suite, "runs": 0, "failed": 0})
                entry["runs"] += 1
                entry["failed"] += 0 if result.ok else 1
            sections.append((f"property checks (seed {seed})", list(summary.values())))
            data["properties"] = list(summary.values())
            ok = ok and all(r.ok for r in properties)
        failed = sum(r["result"] != "pass" for r in rows)
        verdict = f"{len(rows) - failed} of {len(rows)} claims hold"
        return Outcome("examples", ok, verdict, data, sections)

    run.execute(compute)


@app.command()
def history(limit: int = typer.Option(20, "--limit", min=1, help="Number of runs to show")) -> None:
    """Recent recorded runs from the local ledger."""
    runs = Database.get_instance().recent_runs(limit)
    rows = [
        {"id": r.id, "command": r.command, "exit": r.exit_code, "verdict": r.verdict or "",
         "degree_bound": "" if r.degree_bound is None else r.degree_bound,
         "created_at": r.created_at, "seconds": r.duration_seconds}
        for r in runs
    ]
    typer.echo(render_text(Outcome("history", True, f"{len(rows)} runs", sections=[("runs", rows)])), nl=False)
