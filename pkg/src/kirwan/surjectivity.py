import logging
from dataclasses import dataclass

from gkm_core.presentation import GkmPresentation
from kirwan.errors import MissingWeightsError
from toruslin.weights import WeightClass, classes_independent, collinearity_classes

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ComponentVerdict:
    name: str
    classes: tuple[WeightClass, ...]
    independent: bool


@dataclass(frozen=True)
class SurjectivityReport:
    """Per-component outcome of the weight-independence hypothesis."""

    ok: bool
    components: tuple[ComponentVerdict, ...]

    def __bool__(self) -> bool:
        return self.ok

    @property
    def failing(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.components if not c.independent)


def check_surjectivity_hypothesis(presentation: GkmPresentation) -> SurjectivityReport:
    """Weights at each component, taken up to scaling, must be linearly independent."""
    missing = [c.name for c in presentation.components if c.weights is None]
    if missing:
        raise MissingWeightsError(f"components without weights: {', '.join(missing)}")
    verdicts = []
    for component in presentation.components:
        classes = tuple(collinearity_classes(component.weights))
        verdicts.append(ComponentVerdict(component.name, classes, classes_independent(classes)))
    report = SurjectivityReport(all(v.independent for v in verdicts), tuple(verdicts))
    if not report.ok:
        logger.info("weight classes dependent at %s", ", ".join(report.failing))
    return report
