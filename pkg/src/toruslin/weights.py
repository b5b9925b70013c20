from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from exactpoly.errors import DimensionMismatchError
from exactpoly.linalg import RationalMatrix, rank
from exactpoly.linear_form import LinearForm
from toruslin.errors import ZeroWeightError


@dataclass(frozen=True)
class WeightClass:
    """A class of weights up to nonzero scaling, with its primitive integer representative."""

    representative: tuple[int, ...]
    multiplicity: int

    def as_form(self) -> LinearForm:
        return LinearForm.of(self.representative)


def collinearity_classes(weights: Sequence[LinearForm]) -> list[WeightClass]:
    """Group weights into scaling classes, sorted by representative."""
    if not weights:
        return []
    nvars = weights[0].nvars
    counts: Counter[tuple[int, ...]] = Counter()
    for weight in weights:
        if weight.nvars != nvars:
            raise DimensionMismatchError(
                f"weights with {weight.nvars} and {nvars} coefficients"
            )
        if weight.is_zero():
            raise ZeroWeightError("isotropy weights must be nonzero")
        counts[weight.primitive()] += 1
    return [WeightClass(rep, counts[rep]) for rep in sorted(counts)]


def classes_independent(classes: Sequence[WeightClass]) -> bool:
    if not classes:
        return True
    matrix = RationalMatrix.of([c.representative for c in classes])
    return rank(matrix) == len(classes)
