"""Kernel of the restriction to a regular level and the quotient it leaves.

K+ collects the assignments vanishing on every component above the level,
K- those vanishing on every component below it. The quotient A/(K+ + K-) is
reported as a graded module over the polynomials on the quotient torus, that
is, over the subring generated by the linear forms that annihilate the circle.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from exactpoly.linalg import EchelonBasis
from exactpoly.linear_form import LinearForm
from gkm_core.graded import Generator, graded_bases, sweep_generators, variables
from gkm_core.presentation import AssignmentTuple, GkmPresentation
from kirwan.moment import MomentData
from kirwan.surjectivity import SurjectivityReport, check_surjectivity_hypothesis

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KernelDecomposition:
    degree_bound: int
    positive: tuple[Generator, ...]
    negative: tuple[Generator, ...]
    positive_dims: tuple[int, ...]
    negative_dims: tuple[int, ...]
    direct: bool


@dataclass(frozen=True)
class QuotientReport:
    degree_bound: int
    dims: tuple[int, ...]
    generators: tuple[Generator, ...]
    kernel: KernelDecomposition
    subring_forms: tuple[LinearForm, ...]
    hypothesis: Optional[SurjectivityReport]
    hypothesis_applies: bool
    caveat: Optional[str]

    @property
    def generator_degrees(self) -> tuple[int, ...]:
        return tuple(g.degree for g in self.generators)


@dataclass(frozen=True)
class ReducedComparison:
    quotient_dims: tuple[int, ...]
    reduced_dims: tuple[int, ...]

    @property
    def equal(self) -> bool:
        return self.quotient_dims == self.reduced_dims

    def mismatches(self) -> tuple[int, ...]:
        return tuple(
            d for d, (a, b) in enumerate(zip(self.quotient_dims, self.reduced_dims)) if a != b
        )


def _check_moment(presentation: GkmPresentation, moment: MomentData) -> None:
    if len(moment.values) != presentation.n:
        raise ValueError(
            f"{len(moment.values)} moment values for {presentation.n} components"
        )
    if moment.circle.ambient_dim != presentation.torus_dim:
        raise ValueError(
            f"circle lives in dimension {moment.circle.ambient_dim}, torus has {presentation.torus_dim}"
        )


def _is_direct(
    positive: dict[int, list[AssignmentTuple]],
    negative: dict[int, list[AssignmentTuple]],
    degree_bound: int,
) -> bool:
    for degree in range(degree_bound + 1):
        elements = positive[degree] + negative[degree]
        if not elements:
            continue
        span = EchelonBasis(len(elements[0].to_vector(degree)))
        if span.extend(e.to_vector(degree) for e in elements) != len(elements):
            return False
    return True


def _kernel_bases(
    presentation: GkmPresentation, moment: MomentData, degree_bound: int
) -> tuple[dict[int, list[AssignmentTuple]], dict[int, list[AssignmentTuple]]]:
    _check_moment(presentation, moment)
    if degree_bound < 0:
        raise ValueError("degree bound must be non-negative")
    positive = graded_bases(presentation, degree_bound, vanishing=moment.positive)
    negative = graded_bases(presentation, degree_bound, vanishing=moment.negative)
    return positive, negative


def _decomposition(
    presentation: GkmPresentation,
    degree_bound: int,
    positive: dict[int, list[AssignmentTuple]],
    negative: dict[int, list[AssignmentTuple]],
) -> KernelDecomposition:
    ring = variables(presentation.torus_dim)
    direct = _is_direct(positive, negative, degree_bound)
    if not direct:
        logger.warning("kernel summands intersect; the moment data is inconsistent with the presentation")
    return KernelDecomposition(
        degree_bound=degree_bound,
        positive=tuple(sweep_generators(positive, degree_bound, ring)),
        negative=tuple(sweep_generators(negative, degree_bound, ring)),
        positive_dims=tuple(len(positive[d]) for d in range(degree_bound + 1)),
        negative_dims=tuple(len(negative[d]) for d in range(degree_bound + 1)),
        direct=direct,
    )


def kernel_generators(
    presentation: GkmPresentation, moment: MomentData, degree_bound: int
) -> KernelDecomposition:
    """Minimal generators of K+ (zero above the level) and K- (zero below it)."""
    positive, negative = _kernel_bases(presentation, moment, degree_bound)
    return _decomposition(presentation, degree_bound, positive, negative)


def quotient_report(
    presentation: GkmPresentation, moment: MomentData, degree_bound: int
) -> QuotientReport:
    positive, negative = _kernel_bases(presentation, moment, degree_bound)
    kernel = _decomposition(presentation, degree_bound, positive, negative)
    bases = graded_bases(presentation, degree_bound)
    subring = tuple(moment.circle.vanishing_ideal.linear_forms())
    generators = sweep_generators(
        bases,
        degree_bound,
        [form.to_polynomial() for form in subring],
        extra_span=lambda d: positive[d] + negative[d],
    )
    dims = tuple(
        len(bases[d]) - len(positive[d]) - len(negative[d]) for d in range(degree_bound + 1)
    )

    hypothesis = None
    caveat = None
    if all(c.weights is not None for c in presentation.components):
        hypothesis = check_surjectivity_hypothesis(presentation)
        if not hypothesis.ok:
            caveat = (
                "weight classes are dependent at "
                + ", ".join(hypothesis.failing)
                + "; the surjectivity criterion does not apply and the result is only A/(K+ + K-)"
            )
    else:
        caveat = "no weights supplied; the result is A/(K+ + K-) without a surjectivity check"
    applies = hypothesis is not None and hypothesis.ok
    logger.info(
        "quotient over %d subring forms: dims %s, %d generators",
        len(subring),
        dims,
        len(generators),
    )
    return QuotientReport(
        degree_bound=degree_bound,
        dims=dims,
        generators=tuple(generators),
        kernel=kernel,
        subring_forms=subring,
        hypothesis=hypothesis,
        hypothesis_applies=applies,
        caveat=caveat,
    )


def compare_with_reduced(report: QuotientReport, reduced: GkmPresentation) -> ReducedComparison:
    """Set the quotient dimensions beside those of an independent presentation of the reduced space."""
    bases = graded_bases(reduced, report.degree_bound)
    return ReducedComparison(
        quotient_dims=report.dims,
        reduced_dims=tuple(len(bases[d]) for d in range(report.degree_bound + 1)),
    )
