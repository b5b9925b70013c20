"""Kernel and quotient of the restriction of assignments to a regular level of a circle moment map."""

from kirwan.errors import CircleError, MissingMomentError, MissingWeightsError, RegularityError
from kirwan.kernel import (
    KernelDecomposition,
    QuotientReport,
    ReducedComparison,
    compare_with_reduced,
    kernel_generators,
    quotient_report,
)
from kirwan.moment import MomentData, moment_data
from kirwan.surjectivity import ComponentVerdict, SurjectivityReport, check_surjectivity_hypothesis

__all__ = [
    "CircleError",
    "ComponentVerdict",
    "KernelDecomposition",
    "MissingMomentError",
    "MissingWeightsError",
    "MomentData",
    "QuotientReport",
    "ReducedComparison",
    "RegularityError",
    "SurjectivityReport",
    "check_surjectivity_hypothesis",
    "compare_with_reduced",
    "kernel_generators",
    "moment_data",
    "quotient_report",
]
