"""Subalgebras of the torus Lie algebra, their vanishing ideals and restrictions."""

from toruslin.errors import ZeroWeightError
from toruslin.restriction import (
    free_monomials,
    normal_form,
    normal_form_matrix,
    restrict,
    restricts_to_zero,
)
from toruslin.subalgebra import (
    Subalgebra,
    VanishingIdealBasis,
    contains,
    from_kernel,
    intersect,
    span_sum,
    vanishing_ideal,
)
from toruslin.weights import WeightClass, classes_independent, collinearity_classes

__all__ = [
    "Subalgebra",
    "VanishingIdealBasis",
    "WeightClass",
    "ZeroWeightError",
    "classes_independent",
    "collinearity_classes",
    "contains",
    "free_monomials",
    "from_kernel",
    "intersect",
    "normal_form",
    "normal_form_matrix",
    "restrict",
    "restricts_to_zero",
    "span_sum",
    "vanishing_ideal",
]
