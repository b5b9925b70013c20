"""Sparse multivariate polynomials with exact rational coefficients."""

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Mapping, Sequence, Union

from exactpoly.errors import DimensionMismatchError
from exactpoly.linalg import RationalMatrix, Vector
from exactpoly.monomial import (
    Monomial,
    grlex_key,
    monomial_basis,
    monomial_index,
    monomial_product,
    unit_monomial,
    variable_monomial,
)
from exactpoly.rational import ZERO, RationalLike, to_rational


@total_ordering
class _MinusInfinity:
    """Degree of the zero polynomial. Compares below every integer; no arithmetic."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("-inf-degree")

    def __repr__(self):
        return "-inf"


MINUS_INFINITY = _MinusInfinity()

Scalar = Union[Fraction, int]


@dataclass(frozen=True)
class Polynomial:
    """Element of Q[u1..uN]; terms are sorted largest-first in graded-lex order.

    No stored coefficient is zero, and the zero polynomial has no terms.
    """

    nvars: int
    terms: tuple[tuple[Monomial, Fraction], ...]

    # ---- construction -------------------------------------------------

    @classmethod
    def from_dict(cls, nvars: int, coefficients: Mapping[Monomial, RationalLike]) -> "Polynomial":
        cleaned = {}
        for monomial, value in coefficients.items():
            if len(monomial) != nvars:
                raise DimensionMismatchError(
                    f"monomial {monomial} does not have {nvars} exponents"
                )
            coefficient = to_rational(value)
            if coefficient != 0:
                cleaned[tuple(monomial)] = coefficient
        ordered = sorted(cleaned.items(), key=lambda item: grlex_key(item[0]), reverse=True)
        return cls(nvars, tuple(ordered))

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars, ())

    @classmethod
    def constant(cls, value: RationalLike, nvars: int) -> "Polynomial":
        return cls.from_dict(nvars, {unit_monomial(nvars): value})

    @classmethod
    def variable(cls, index: int, nvars: int) -> "Polynomial":
        if not 0 <= index < nvars:
            raise DimensionMismatchError(f"variable u{index + 1} outside {nvars} variables")
        return cls.from_dict(nvars, {variable_monomial(index, nvars): 1})

    @classmethod
    def monomial(cls, exponents: Monomial, coefficient: RationalLike = 1) -> "Polynomial":
        return cls.from_dict(len(exponents), {tuple(exponents): coefficient})

    @classmethod
    def linear(cls, coefficients: Sequence[RationalLike]) -> "Polynomial":
        nvars = len(coefficients)
        return cls.from_dict(
            nvars,
            {variable_monomial(i, nvars): c for i, c in enumerate(coefficients)},
        )

    @classmethod
    def from_vector(cls, nvars: int, degree: int, vector: Sequence[Fraction]) -> "Polynomial":
        """Homogeneous polynomial from coordinates in ``monomial_basis(nvars, degree)``."""
        basis = monomial_basis(nvars, degree)
        if len(vector) != len(basis):
            raise DimensionMismatchError(
                f"{len(vector)} coordinates for {len(basis)} monomials of degree {degree}"
            )
        return cls.from_dict(nvars, dict(zip(basis, vector)))

    # ---- inspection ---------------------------------------------------

    def as_dict(self) -> dict[Monomial, Fraction]:
        return dict(self.terms)

    def coefficient(self, monomial: Monomial) -> Fraction:
        return self.as_dict().get(tuple(monomial), ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(monomial) == 0 for monomial, _ in self.terms)

    @property
    def degree(self):
        """Total degree; ``MINUS_INFINITY`` for the zero polynomial."""
        if not self.terms:
            return MINUS_INFINITY
        return sum(self.terms[0][0])

    def degrees(self) -> list[int]:
        return sorted({sum(monomial) for monomial, _ in self.terms})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def to_vector(self, degree: int) -> Vector:
        """Coordinates of the degree-``degree`` component in ``monomial_basis``."""
        index = monomial_index(self.nvars, degree)
        vector = [ZERO] * len(index)
        for monomial, coefficient in self.terms:
            if sum(monomial) == degree:
                vector[index[monomial]] = coefficient
        return tuple(vector)

    def evaluate(self, point: Sequence[RationalLike]) -> Fraction:
        if len(point) != self.nvars:
            raise DimensionMismatchError(
                f"evaluating a polynomial in {self.nvars} variables at a point of length {len(point)}"
            )
        values = [to_rational(p) for p in point]
        total = ZERO
        for monomial, coefficient in self.terms:
            term = coefficient
            for value, exponent in zip(values, monomial):
                if exponent:
                    term *= value**exponent
            total += term
        return total

    # ---- arithmetic ---------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise DimensionMismatchError(
                f"polynomials in {self.nvars} and {other.nvars} variables"
            )

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, str)) and not isinstance(other, bool):
            return Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        merged = self.as_dict()
        for monomial, coefficient in other.terms:
            merged[monomial] = merged.get(monomial, ZERO) + coefficient
        return Polynomial.from_dict(self.nvars, merged)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, factor: RationalLike) -> "Polynomial":
        factor = to_rational(factor)
        if factor == 0:
            return Polynomial.zero(self.nvars)
        return Polynomial(self.nvars, tuple((m, c * factor) for m, c in self.terms))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, str)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        product: dict[Monomial, Fraction] = {}
        for left, a in self.terms:
            for right, b in other.terms:
                key = monomial_product(left, right)
                product[key] = product.get(key, ZERO) + a * b
        return Polynomial.from_dict(self.nvars, product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(1, self.nvars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ---- structure ----------------------------------------------------

    def graded_component(self, degree: int) -> "Polynomial":
        return Polynomial(
            self.nvars, tuple((m, c) for m, c in self.terms if sum(m) == degree)
        )

    def homogeneous_components(self) -> dict[int, "Polynomial"]:
        return {d: self.graded_component(d) for d in self.degrees()}

    def substitute_linear(self, substitution: RationalMatrix) -> "Polynomial":
        """Replace u_i by the linear form in row i of ``substitution``.

        The result lives in ``substitution.ncols`` variables.
        """
        if substitution.nrows != self.nvars:
            raise DimensionMismatchError(
                f"substitution has {substitution.nrows} rows for {self.nvars} variables"
            )
        new_nvars = substitution.ncols
        images = [Polynomial.linear(row) for row in substitution.rows]
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(index: int, exponent: int) -> Polynomial:
            key = (index, exponent)
            if key not in powers:
                powers[key] = images[index] ** exponent
            return powers[key]

        total = Polynomial.zero(new_nvars)
        for monomial, coefficient in self.terms:
            term = Polynomial.constant(coefficient, new_nvars)
            for index, exponent in enumerate(monomial):
                if exponent:
                    term = term * power(index, exponent)
                    if term.is_zero():
                        break
            total = total + term
        return total

    def zero_variables(self, indices: Iterable[int]) -> "Polynomial":
        """Set the listed variables to 0 (restriction to a coordinate subspace)."""
        dropped = set(indices)
        return Polynomial.from_dict(
            self.nvars,
            {
                m: c
                for m, c in self.terms
                if all(m[i] == 0 for i in dropped)
            },
        )

    def __str__(self) -> str:
        from exactpoly.text import format_polynomial

        return format_polynomial(self)


def poly_arith(op: str, a: Polynomial, b: Union[Polynomial, RationalLike, None] = None) -> Polynomial:
    """Dispatch ``add``/``sub``/``mul``/``scale``/``neg`` on polynomials."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    if op == "neg":
        return -a
    raise ValueError(f"unknown polynomial operation {op!r}")


def substitute_linear(p: Polynomial, substitution: RationalMatrix) -> Polynomial:
    return p.substitute_linear(substitution)


def graded_component(p: Polynomial, degree: int) -> Polynomial:
    return p.graded_component(degree)
