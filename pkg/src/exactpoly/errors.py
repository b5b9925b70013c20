"""Exception hierarchy shared by every package of the library."""

from typing import Optional


class AssignmentError(Exception):
    """Base class for all library errors.

    ``invariant`` names the violated rule when the error comes from input
    validation, so the CLI can cite it.
    """

    def __init__(self, message: str, invariant: Optional[str] = None):
        super().__init__(message)
        self.message = message
        self.invariant = invariant

    def __str__(self) -> str:
        if self.invariant:
            return f"{self.message} [invariant: {self.invariant}]"
        return self.message


class DimensionMismatchError(AssignmentError):
    """Operands live in coordinate systems of different sizes."""

    def __init__(self, message: str):
        super().__init__(message, invariant="dimension-match")


class PolynomialSyntaxError(AssignmentError):
    """Polynomial text could not be parsed."""

    def __init__(self, message: str):
        super().__init__(message, invariant="polynomial-syntax")
