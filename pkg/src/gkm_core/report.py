import logging
from dataclasses import dataclass
from typing import Optional, Sequence

from exactpoly.monomial import monomial_count
from gkm_core.graded import Generator, graded_bases, sweep_generators, variables
from gkm_core.presentation import GkmPresentation

logger = logging.getLogger(__name__)

FREE = "free"
NOT_FREE = "not_free"
UNDETERMINED = "undetermined_at_bound"


@dataclass(frozen=True)
class GradedModuleReport:
    degree_bound: int
    dims: tuple[int, ...]
    generators: tuple[Generator, ...]
    rank: int
    verdict: str
    caveat: Optional[str]
    free_dims: tuple[int, ...]

    @property
    def generator_degrees(self) -> tuple[int, ...]:
        return tuple(g.degree for g in self.generators)

    def hilbert_table(self) -> list[dict[str, int]]:
        """Per-degree dimension next to the free module on the same generator degrees."""
        return [
            {"degree": d, "dim": dim, "free_on_generators": free}
            for d, (dim, free) in enumerate(zip(self.dims, self.free_dims))
        ]


def free_module_dims(nvars: int, generator_degrees: Sequence[int], degree_bound: int) -> tuple[int, ...]:
    """Hilbert function of the free module with the given generator degrees."""
    return tuple(
        sum(monomial_count(nvars, d - e) for e in generator_degrees if e <= d)
        for d in range(degree_bound + 1)
    )


def freeness_verdict(
    generator_degrees: Sequence[int], rank: int, degree_bound: int
) -> tuple[str, Optional[str]]:
    count = len(generator_degrees)
    if count > rank:
        return NOT_FREE, None
    late = sorted({e for e in generator_degrees if e >= degree_bound - 1})
    if count == rank and not late:
        return FREE, (
            f"generator list taken as complete: no new generators in degrees "
            f"{max(degree_bound - 1, 0)}..{degree_bound}"
        )
    if count < rank:
        reason = f"{count} generators found below rank {rank}"
    else:
        reason = f"generators still appearing in degree(s) {', '.join(map(str, late))}"
    return UNDETERMINED, f"{reason} at degree bound {degree_bound}; raise the bound to decide"


def _report_at(presentation: GkmPresentation, degree_bound: int) -> GradedModuleReport:
    bases = graded_bases(presentation, degree_bound)
    generators = sweep_generators(bases, degree_bound, variables(presentation.torus_dim))
    degrees = [g.degree for g in generators]
    verdict, caveat = freeness_verdict(degrees, presentation.n, degree_bound)
    logger.info(
        "module over %d components: %d generators, verdict %s at bound %d",
        presentation.n,
        len(generators),
        verdict,
        degree_bound,
    )
    return GradedModuleReport(
        degree_bound=degree_bound,
        dims=tuple(len(bases[d]) for d in range(degree_bound + 1)),
        generators=tuple(generators),
        rank=presentation.n,
        verdict=verdict,
        caveat=caveat,
        free_dims=free_module_dims(presentation.torus_dim, degrees, degree_bound),
    )


def module_report(
    presentation: GkmPresentation, degree_bound: Optional[int] = None
) -> GradedModuleReport:
    """Dimensions, minimal generators, rank and freeness verdict up to ``degree_bound``.

    Without a bound, start at the component count and widen to two degrees
    past the highest generator until the verdict settles or stops moving.
    """
    if degree_bound is not None:
        if degree_bound < 0:
            raise ValueError("degree bound must be non-negative")
        return _report_at(presentation, degree_bound)
    bound = presentation.n
    report = _report_at(presentation, bound)
    while report.verdict == UNDETERMINED and report.generators:
        widened = max(report.generator_degrees) + 2
        if widened <= bound:
            break
        logger.info("generators reach the top degrees; widening the bound to %d", widened)
        bound = widened
        report = _report_at(presentation, bound)
    return report
