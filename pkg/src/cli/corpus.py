"""Runs the expected-result claims embedded in the bundled model documents.

Every claim names a ``check``, an ``expected`` value and a human readable
``claim``; ``degree_bound`` defaults to the document's own default. Each
document is also printed and re-parsed, which must give it back unchanged.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Optional, Union

from cli import analysis
from cli.schema import ModelDocument, load_document, parse_document, print_document
from config.storage import CORPUS_DIR
from exactpoly.errors import AssignmentError
from exactpoly.text import parse_polynomial
from extendlib.solve import Infeasible, extend_solve
from gkm_core.graded import graded_bases
from gkm_core.report import module_report
from kirwan.kernel import compare_with_reduced, kernel_generators, quotient_report
from kirwan.moment import moment_data
from kirwan.surjectivity import check_surjectivity_hypothesis
from strata_oracle.assignment import is_assignment, oracle_dims
from strata_oracle.localization import chang_skjelbred_check
from strata_oracle.quotient import quotient_by_circle
from utils.workers import map_by_key

logger = logging.getLogger(__name__)

CHECKS = frozenset(
    {
        "dims", "generator_degrees", "verdict", "members", "surjectivity", "kernel_degrees",
        "quotient", "reduced", "oracle", "quotient_dims", "chang_skjelbred", "assignment",
        "feasible", "extends",
    }
)


@dataclass(frozen=True)
class ClaimResult:
    document: str
    check: str
    claim: str
    ok: bool
    detail: str = ""


def corpus_paths(directory: Union[str, Path] = CORPUS_DIR) -> list[Path]:
    return sorted(Path(directory).glob("*.json"))


class _Checker:
    def __init__(self, document: ModelDocument, directory: Path):
        self.document = document
        self.directory = directory

    def bound(self, claim: dict) -> int:
        return claim.get("degree_bound", self.document.degree_bound_default)

    def sibling(self, claim: dict) -> ModelDocument:
        return load_document(self.directory / claim["document"])

    def dims(self, claim: dict) -> list[int]:
        bound = self.bound(claim)
        body = self.document.body
        if self.document.kind == "gkm":
            bases = graded_bases(body, bound)
            return [len(bases[d]) for d in range(bound + 1)]
        return list(oracle_dims(body, bound))

    def generator_degrees(self, claim: dict) -> list[int]:
        return list(module_report(self.document.body, self.bound(claim)).generator_degrees)

    def verdict(self, claim: dict) -> str:
        return module_report(self.document.body, self.bound(claim)).verdict

    def members(self, claim: dict) -> bool:
        return analysis.members(self.document, [claim["tuple"]]).ok

    def surjectivity(self, claim: dict) -> dict[str, bool]:
        report = check_surjectivity_hypothesis(self.document.body)
        return {v.name: v.independent for v in report.components}

    def _moment(self):
        return moment_data(self.document.body, self.document.circle, self.document.level)

    def kernel_degrees(self, claim: dict) -> dict[str, list[int]]:
        kernel = kernel_generators(self.document.body, self._moment(), self.bound(claim))
        return {
            "positive": [g.degree for g in kernel.positive],
            "negative": [g.degree for g in kernel.negative],
        }

    def quotient(self, claim: dict) -> dict[str, list[int]]:
        report = quotient_report(self.document.body, self._moment(), self.bound(claim))
        return {"dims": list(report.dims), "generator_degrees": list(report.generator_degrees)}

    def reduced(self, claim: dict) -> bool:
        report = quotient_report(self.document.body, self._moment(), self.bound(claim))
        return compare_with_reduced(report, self.sibling(claim).body).equal

    def oracle(self, claim: dict) -> bool:
        return analysis.oracle_compare(self.document, self.sibling(claim), self.bound(claim)).ok

    def quotient_dims(self, claim: dict) -> list[int]:
        quotient = quotient_by_circle(self.document.body, self.document.circle)
        return list(oracle_dims(quotient.space, self.bound(claim)))

    def chang_skjelbred(self, claim: dict) -> bool:
        return chang_skjelbred_check(self.document.body, self.bound(claim)).ok

    def assignment(self, claim: dict) -> bool:
        space = self.document.body
        values = {
            stratum_id: parse_polynomial(text, space.torus_dim)
            for stratum_id, text in claim["values"].items()
        }
        return is_assignment(space, values).ok

    def feasible(self, claim: dict) -> bool:
        return not isinstance(extend_solve(self.document.body, self.bound(claim)), Infeasible)

    def extends(self, claim: dict) -> bool:
        return analysis.extend(self.document, claim.get("degree_bound")).ok

    def handler(self, check: str) -> Optional[Callable[[dict], Any]]:
        return getattr(self, check) if check in CHECKS else None


def _round_trip(name: str, document: ModelDocument) -> ClaimResult:
    again = parse_document(print_document(document))
    ok = again == document
    return ClaimResult(name, "round_trip", "print then parse gives the document back", ok)


def run_document(path: Path) -> list[ClaimResult]:
    text = path.read_text(encoding="utf-8")
    document = parse_document(text)
    checker = _Checker(document, path.parent)
    results = [_round_trip(path.name, document)]
    for claim in document.claims:
        check = claim.get("check", "")
        description = claim.get("claim", "")
        handler = checker.handler(check)
        if handler is None:
            results.append(ClaimResult(path.name, check, description, False, f"unknown check {check!r}"))
            continue
        try:
            actual = handler(claim)
        except AssignmentError as exc:
            results.append(ClaimResult(path.name, check, description, False, str(exc)))
            continue
        expected = claim.get("expected")
        ok = actual == expected
        detail = "" if ok else f"expected {expected!r}, got {actual!r}"
        results.append(ClaimResult(path.name, check, description, ok, detail))
    return results


def run_corpus(directory: Union[str, Path] = CORPUS_DIR) -> list[ClaimResult]:
    paths = corpus_paths(directory)
    by_path = map_by_key(run_document, paths)
    results = [r for path in paths for r in by_path[path]]
    failed = [r for r in results if not r.ok]
    if failed:
        logger.warning("%d of %d corpus claims failed", len(failed), len(results))
    else:
        logger.info("all %d corpus claims hold", len(results))
    return results
