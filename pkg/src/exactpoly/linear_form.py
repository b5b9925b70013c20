from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from exactpoly.errors import DimensionMismatchError
from exactpoly.linalg import Vector, as_vector, dot, is_zero_vector
from exactpoly.polynomial import Polynomial
from exactpoly.rational import RationalLike, primitive_integer_vector


@dataclass(frozen=True)
class LinearForm:
    """Element of the dual space, stored as its coefficient vector."""

    coeffs: Vector

    @classmethod
    def of(cls, coeffs: Sequence[RationalLike]) -> "LinearForm":
        return cls(as_vector(coeffs))

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> "LinearForm":
        """Read back a homogeneous degree-1 (or zero) polynomial."""
        if any(sum(monomial) != 1 for monomial, _ in p.terms):
            raise ValueError(f"{p} is not a linear form")
        return cls(p.to_vector(1))

    @property
    def nvars(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return is_zero_vector(self.coeffs)

    def to_polynomial(self) -> Polynomial:
        return Polynomial.linear(self.coeffs)

    def __call__(self, vector: Sequence[Fraction]) -> Fraction:
        if len(vector) != self.nvars:
            raise DimensionMismatchError(
                f"form on {self.nvars} coordinates evaluated at a vector of length {len(vector)}"
            )
        return dot(self.coeffs, vector)

    def scale(self, factor: RationalLike) -> "LinearForm":
        return LinearForm.of([c * Fraction(factor) for c in self.coeffs])

    def primitive(self) -> tuple[int, ...]:
        return primitive_integer_vector(self.coeffs)
