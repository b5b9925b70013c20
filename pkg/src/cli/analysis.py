"""Subcommand computations, each returning an Outcome for the renderer."""

import logging
from typing import Optional, Sequence

from cli.render import (
    Outcome,
    dims_rows,
    generator_rows,
    poly_text,
    strata_text,
    vector_text,
)
from cli.schema import DocumentError, ModelDocument
from exactpoly.errors import AssignmentError
from exactpoly.linalg import RationalMatrix, rank
from exactpoly.rational import format_rational, format_vector, to_rational
from exactpoly.text import parse_polynomial
from extendlib.errors import AssemblyVerificationError
from extendlib.independent import compatibility_check, extend_independent
from extendlib.problem import ExtensionProblem
from extendlib.solve import Infeasible, extend_solve
from gkm_core.graded import graded_bases, sweep_generators, variables
from gkm_core.membership import is_member
from gkm_core.presentation import AssignmentTuple, GkmPresentation
from gkm_core.report import FREE, module_report
from kirwan.kernel import compare_with_reduced, quotient_report
from kirwan.moment import moment_data
from kirwan.surjectivity import SurjectivityReport, check_surjectivity_hypothesis
from strata_oracle.assignment import graded_basis_oracle, is_assignment, moment_assignment, oracle_dims
from strata_oracle.localization import (
    chang_skjelbred_check,
    fixed_and_skeleton,
    lint_fixed_closure,
    localize_kernel_check,
    rank_certificate,
    restriction_kernel_dims,
)
from strata_oracle.quotient import quotient_by_circle
from strata_oracle.space import StratifiedSpace
from toruslin.subalgebra import Subalgebra

logger = logging.getLogger(__name__)


def _require(document: ModelDocument, *kinds: str) -> None:
    if document.kind not in kinds:
        raise DocumentError(
            f"this command needs a {' or '.join(kinds)} document, got {document.kind}",
            "document-kind",
        )


def _bound(document: ModelDocument, degree_bound: Optional[int]) -> int:
    bound = document.degree_bound_default if degree_bound is None else degree_bound
    if bound < 0:
        raise DocumentError("degree bound must be non-negative", "degree-bound")
    return bound


def parse_vector_option(text: str, dim: int) -> tuple:
    """Comma-separated rationals, e.g. ``1,-1/2``."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if len(parts) != dim:
        raise DocumentError(f"expected {dim} comma-separated rationals, got {text!r}", "vector-length")
    try:
        return tuple(to_rational(p) for p in parts)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"not an exact rational vector: {text!r}", "rational-syntax") from exc


def circle_option(text: Optional[str], document: ModelDocument) -> Optional[Subalgebra]:
    if text is None:
        return document.circle
    circle = Subalgebra.from_span([parse_vector_option(text, document.torus_dim)], document.torus_dim)
    if circle.dim != 1:
        raise DocumentError("circle direction must be a nonzero vector", "circle-dim")
    return circle


# ---- validate ---------------------------------------------------------------


def validate(document: ModelDocument) -> Outcome:
    body = document.body
    if isinstance(body, GkmPresentation):
        summary = [
            {"components": body.n, "pieces": len(body.pieces), "torus_dim": body.torus_dim,
             "generalized": body.generalized}
        ]
    elif isinstance(body, StratifiedSpace):
        summary = [
            {"strata": len(body.strata), "relations": len(body.relations()),
             "fixed": len(body.fixed_ids()), "torus_dim": body.torus_dim}
        ]
    else:
        summary = [
            {"forms": len(body.forms), "constraints": len(body.constraints),
             "torus_dim": body.ambient_dim}
        ]
    return Outcome(
        command="validate",
        ok=True,
        verdict=f"valid {document.kind} document",
        data={"summary": summary[0]},
        sections=[("summary", summary)],
        document=document,
    )


# ---- basis ------------------------------------------------------------------


def basis(document: ModelDocument, degree_bound: Optional[int] = None) -> Outcome:
    _require(document, "gkm", "strata")
    bound = _bound(document, degree_bound)
    if isinstance(document.body, GkmPresentation):
        presentation = document.body
        bases = graded_bases(presentation, bound)
        generators = sweep_generators(bases, bound, variables(presentation.torus_dim))
        dims = [len(bases[d]) for d in range(bound + 1)]
        rows = generator_rows(generators)
        return Outcome(
            command="basis",
            ok=True,
            verdict=f"{len(generators)} minimal generators",
            data={
                "dims": dims,
                "generators": [
                    {"degree": g.degree, "tuple": [poly_text(p) for p in g.element.polys]}
                    for g in generators
                ],
            },
            sections=[("dimensions", dims_rows(dim=dims)), ("minimal generators", rows)],
            document=document,
            degree_bound=bound,
        )

    space = document.body
    listing = []
    for degree in range(bound + 1):
        for element in graded_basis_oracle(space, degree):
            listing.append({"degree": degree, **strata_text(element)})
    dims = list(oracle_dims(space, bound))
    return Outcome(
        command="basis",
        ok=True,
        verdict=f"dimensions {tuple(dims)}",
        data={"dims": dims, "basis": listing},
        sections=[("dimensions", dims_rows(dim=dims)), ("basis", listing)],
        document=document,
        degree_bound=bound,
    )


# ---- members ----------------------------------------------------------------


def _split(text: str) -> list[str]:
    return [part.strip() for part in text.split(";")]


def members(document: ModelDocument, tuples: Sequence[str]) -> Outcome:
    """Each entry lists one polynomial per component (or stratum), separated by ';'."""
    _require(document, "gkm", "strata")
    rows = []
    k = document.torus_dim
    for text in tuples:
        parts = _split(text)
        try:
            polys = [parse_polynomial(p, k) for p in parts]
        except AssignmentError as exc:
            raise DocumentError(exc.message, exc.invariant) from exc
        if isinstance(document.body, GkmPresentation):
            result = is_member(document.body, AssignmentTuple.of(polys))
            failures = [
                f"piece {f.piece + 1}: {document.body.components[f.first].name}-"
                f"{document.body.components[f.second].name} leaves {poly_text(f.residue)}"
                for f in result.failures
            ]
        else:
            space = document.body
            if len(polys) != len(space.strata):
                raise DocumentError(
                    f"{len(polys)} values for {len(space.strata)} strata", "tuple-length"
                )
            result = is_assignment(space, dict(zip(space.ids, polys)))
            failures = [
                f"{f.lower} < {f.upper} leaves {poly_text(f.residue)}" for f in result.failures
            ]
        rows.append({"tuple": text, "member": result.ok, "diagnostics": "; ".join(failures)})
    ok = all(r["member"] for r in rows)
    return Outcome(
        command="members",
        ok=ok,
        verdict="all members" if ok else "some tuples are not members",
        data={"results": rows},
        sections=[("membership", rows)],
        document=document,
    )


# ---- report -----------------------------------------------------------------


def _gkm_report(document: ModelDocument, degree_bound: Optional[int]) -> Outcome:
    report = module_report(document.body, degree_bound)
    sections = [
        ("hilbert function", report.hilbert_table()),
        ("minimal generators", generator_rows(report.generators)),
        ("rank", str(report.rank)),
    ]
    if report.caveat:
        sections.append(("caveat", report.caveat))
    return Outcome(
        command="report",
        ok=report.verdict == FREE,
        verdict=report.verdict,
        data={
            "dims": list(report.dims),
            "free_dims": list(report.free_dims),
            "generator_degrees": list(report.generator_degrees),
            "generators": [
                {"degree": g.degree, "tuple": [poly_text(p) for p in g.element.polys]}
                for g in report.generators
            ],
            "rank": report.rank,
            "caveat": report.caveat,
            "citation": "rank equals the number of fixed components; not_free when generators exceed rank",
        },
        sections=sections,
        document=document,
        degree_bound=report.degree_bound,
    )


def _strata_report(document: ModelDocument, bound: int) -> Outcome:
    space = document.body
    dims = list(oracle_dims(space, bound))
    fixed, skeleton = fixed_and_skeleton(space)
    images = chang_skjelbred_check(space, bound)
    certificate = rank_certificate(space, bound)
    kernel = list(restriction_kernel_dims(space, bound))
    lint = lint_fixed_closure(space)
    torsion_ok = localize_kernel_check(space, bound)
    sections = [
        (
            "dimensions",
            dims_rows(
                dim=dims,
                fixed_image=[b.image for b in certificate.bounds],
                skeleton_image=[r.skeleton_image for r in images.degrees],
                restriction_kernel=kernel,
            ),
        ),
        ("fixed strata", ", ".join(fixed.ids) or "(none)"),
        ("1-skeleton", ", ".join(skeleton.ids) or "(none)"),
        ("rank", f"{certificate.rank} (annihilator degree {certificate.annihilator_degree})"),
    ]
    data = {
        "dims": dims,
        "fixed": list(fixed.ids),
        "skeleton": list(skeleton.ids),
        "skeleton_images_equal": images.ok,
        "rank": certificate.rank,
        "rank_bounds_hold": certificate.ok,
        "restriction_kernel_dims": kernel,
        "torsion_annihilated": torsion_ok,
        "lint": lint,
    }
    if lint:
        sections.append(("lint", "no fixed stratum in the closure of " + ", ".join(lint)))
    if document.moments is not None:
        _, check = moment_assignment(space, dict(document.moments))
        data["moment_assignment"] = check.ok
        sections.append(
            ("moment assignment", "consistent" if check.ok else f"fails on {len(check.failures)} relations")
        )
    ok = images.ok and certificate.ok and torsion_ok
    return Outcome(
        command="report",
        ok=ok,
        verdict="localization checks hold" if ok else "localization checks fail",
        data=data,
        sections=sections,
        document=document,
        degree_bound=bound,
    )


def report(document: ModelDocument, degree_bound: Optional[int] = None) -> Outcome:
    _require(document, "gkm", "strata")
    bound = _bound(document, degree_bound)
    if isinstance(document.body, GkmPresentation):
        return _gkm_report(document, degree_bound)
    return _strata_report(document, bound)


# ---- kirwan -----------------------------------------------------------------


def _hypothesis_rows(hypothesis: SurjectivityReport) -> list[dict]:
    return [
        {
            "component": v.name,
            "classes": " ".join(vector_text(c.representative) for c in v.classes),
            "independent": v.independent,
        }
        for v in hypothesis.components
    ]


def kirwan(
    document: ModelDocument,
    degree_bound: Optional[int] = None,
    circle: Optional[Subalgebra] = None,
    level=None,
    reduced: Optional[ModelDocument] = None,
) -> Outcome:
    _require(document, "gkm")
    presentation = document.body
    bound = _bound(document, degree_bound)
    has_moments = any(
        c.moment is not None or c.moment_vector is not None for c in presentation.components
    )
    if not has_moments:
        hypothesis = check_surjectivity_hypothesis(presentation)
        return Outcome(
            command="kirwan",
            ok=hypothesis.ok,
            verdict="weight classes independent" if hypothesis.ok else "weight classes dependent",
            data={"hypothesis": _hypothesis_rows(hypothesis)},
            sections=[("surjectivity hypothesis", _hypothesis_rows(hypothesis))],
            document=document,
        )

    moment = moment_data(
        presentation, circle or document.circle, document.level if level is None else level
    )
    result = quotient_report(presentation, moment, bound)
    kernel = result.kernel
    sections = [
        ("moment values", [
            {"component": c.name, "value": format_rational(v)}
            for c, v in zip(presentation.components, moment.values)
        ]),
        ("K+ generators (zero above the level)", generator_rows(kernel.positive)),
        ("K- generators (zero below the level)", generator_rows(kernel.negative)),
        ("quotient dimensions", dims_rows(
            quotient=list(result.dims), positive=list(kernel.positive_dims),
            negative=list(kernel.negative_dims))),
        ("quotient generators over the subring", generator_rows(result.generators)),
        ("subring", ", ".join(poly_text(f.to_polynomial()) for f in result.subring_forms) or "constants"),
    ]
    data = {
        "moments": [format_rational(v) for v in moment.values],
        "positive": [{"degree": g.degree, "tuple": [poly_text(p) for p in g.element.polys]} for g in kernel.positive],
        "negative": [{"degree": g.degree, "tuple": [poly_text(p) for p in g.element.polys]} for g in kernel.negative],
        "positive_dims": list(kernel.positive_dims),
        "negative_dims": list(kernel.negative_dims),
        "direct": kernel.direct,
        "quotient_dims": list(result.dims),
        "quotient_generator_degrees": list(result.generator_degrees),
        "subring": [format_vector(f.coeffs) for f in result.subring_forms],
        "hypothesis_applies": result.hypothesis_applies,
        "caveat": result.caveat,
    }
    if result.hypothesis is not None:
        sections.insert(0, ("surjectivity hypothesis", _hypothesis_rows(result.hypothesis)))
        data["hypothesis"] = _hypothesis_rows(result.hypothesis)
    if result.caveat:
        sections.append(("caveat", result.caveat))
    ok = kernel.direct
    if result.hypothesis is not None and not result.hypothesis.ok:
        ok = False
    if reduced is not None:
        _require(reduced, "gkm")
        comparison = compare_with_reduced(result, reduced.body)
        sections.append(("reduced space", dims_rows(
            quotient=list(comparison.quotient_dims), reduced=list(comparison.reduced_dims))))
        data["reduced_dims"] = list(comparison.reduced_dims)
        data["reduced_equal"] = comparison.equal
        ok = ok and comparison.equal
    verdict = (
        "quotient is the assignment algebra of the reduced space"
        if result.hypothesis_applies
        else "quotient A/(K+ + K-) computed; surjectivity not established"
    )
    return Outcome(
        command="kirwan",
        ok=ok,
        verdict=verdict,
        data=data,
        sections=sections,
        document=document,
        degree_bound=bound,
    )


# ---- extend -----------------------------------------------------------------


def _independent(problem: ExtensionProblem) -> bool:
    if any(f.is_zero() for f in problem.forms):
        return False
    if not problem.forms:
        return True
    matrix = RationalMatrix(tuple(f.coeffs for f in problem.forms), problem.ambient_dim)
    return rank(matrix) == len(problem.forms)


def extend(document: ModelDocument, degree_bound: Optional[int] = None) -> Outcome:
    _require(document, "extension")
    problem = document.body
    bound = _bound(document, degree_bound)
    compatibility = compatibility_check(problem)
    pairs = [
        {"first": f.first + 1, "second": f.second + 1, "residue": poly_text(f.residue)}
        for f in compatibility.failures
    ]
    if not compatibility.ok:
        return Outcome(
            command="extend",
            ok=False,
            verdict="incompatible targets",
            data={"incompatible": pairs},
            sections=[("incompatible constraint pairs", pairs)],
            document=document,
            degree_bound=bound,
        )

    method = "degreewise solve"
    witness = None
    note = None
    if _independent(problem):
        try:
            witness = extend_independent(problem)
            method = "kernel-intersection assembly"
            if witness.degree > bound:
                note = (
                    f"assembled extension has degree {witness.degree} above the bound {bound}; "
                    "solved degreewise within the bound instead"
                )
                logger.info(note)
                witness = None
                method = "degreewise solve"
        except AssemblyVerificationError as exc:
            note = f"assembly failed verification ({exc.message}); fell back to the degreewise solve"
            logger.error(note)
    if witness is None:
        found = extend_solve(problem, bound)
        if isinstance(found, Infeasible):
            data = {
                "degree": found.degree,
                "reason": found.reason,
                "certificate": format_vector(found.certificate) if found.certificate else None,
            }
            sections = [("obstruction", found.reason)]
            if found.certificate is not None:
                sections.append(("inconsistent row", vector_text(found.certificate)))
            if note:
                sections.append(("note", note))
            return Outcome(
                command="extend",
                ok=False,
                verdict=f"infeasible at degree bound {bound} (degree {found.degree})",
                data={"infeasible": data},
                sections=sections,
                document=document,
                degree_bound=bound,
            )
        witness = found
    sections = [("extension", poly_text(witness)), ("method", method)]
    if note:
        sections.append(("note", note))
    return Outcome(
        command="extend",
        ok=True,
        verdict="extension found",
        data={"extension": poly_text(witness), "method": method, "note": note},
        sections=sections,
        document=document,
        degree_bound=bound,
    )


# ---- quotient-circle --------------------------------------------------------


def quotient_circle(
    document: ModelDocument, circle: Optional[Subalgebra], degree_bound: Optional[int] = None
) -> Outcome:
    _require(document, "strata")
    if circle is None:
        raise DocumentError("a circle direction is required (--circle or \"circle\")", "circle-dim")
    bound = _bound(document, degree_bound)
    quotient = quotient_by_circle(document.body, circle)
    source_dims = oracle_dims(document.body, bound)
    quotient_dims = oracle_dims(quotient.space, bound)
    round_trips = True
    for degree in range(bound + 1):
        for element in graded_basis_oracle(document.body, degree):
            moved = quotient.transport(element)
            if not is_assignment(quotient.space, moved).ok or quotient.lift(moved) != element:
                round_trips = False
    rows = [
        {"id": s.id, "isotropy": " ".join(vector_text(r) for r in s.isotropy.basis.rows) or "0"} for s in quotient.space.strata
    ]
    ok = source_dims == quotient_dims and round_trips
    return Outcome(
        command="quotient-circle",
        ok=ok,
        verdict="quotient preserves the algebra" if ok else "quotient changes the algebra",
        data={
            "source_dims": list(source_dims),
            "quotient_dims": list(quotient_dims),
            "transport_round_trips": round_trips,
            "quotient_strata": rows,
        },
        sections=[
            ("quotient strata", rows),
            ("dimensions", dims_rows(source=list(source_dims), quotient=list(quotient_dims))),
            ("transport", "isomorphism on every basis element" if round_trips else "round trip fails"),
        ],
        document=document,
        degree_bound=bound,
    )


# ---- oracle-compare ---------------------------------------------------------


def oracle_compare(
    gkm_document: ModelDocument, strata_document: ModelDocument, degree_bound: Optional[int] = None
) -> Outcome:
    _require(gkm_document, "gkm")
    _require(strata_document, "strata")
    bound = _bound(gkm_document, degree_bound)
    bases = graded_bases(gkm_document.body, bound)
    gkm_dims = [len(bases[d]) for d in range(bound + 1)]
    strata_dims = list(oracle_dims(strata_document.body, bound))
    rows = [
        {"degree": d, "gkm": a, "strata": b, "equal": a == b}
        for d, (a, b) in enumerate(zip(gkm_dims, strata_dims))
    ]
    ok = all(r["equal"] for r in rows)
    return Outcome(
        command="oracle-compare",
        ok=ok,
        verdict="dimensions agree" if ok else "dimensions differ",
        data={"rows": rows},
        sections=[("dimensions", rows)],
        document=gkm_document,
        degree_bound=bound,
    )

