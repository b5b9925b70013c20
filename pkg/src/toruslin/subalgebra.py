"""Linear subspaces of the torus Lie algebra in canonical (RREF span) form."""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Union

from exactpoly.errors import DimensionMismatchError
from exactpoly.linalg import RationalMatrix, Vector, as_vector, nullspace_basis, rref
from exactpoly.linear_form import LinearForm
from exactpoly.rational import RationalLike

FormLike = Union[LinearForm, Sequence[RationalLike]]


def _coeffs(form: FormLike) -> Vector:
    if isinstance(form, LinearForm):
        return form.coeffs
    return as_vector(form)


@dataclass(frozen=True)
class VanishingIdealBasis:
    """RREF rows spanning the annihilator of a subalgebra; ``pivots[i]`` leads row i."""

    ambient_dim: int
    forms: RationalMatrix
    pivots: tuple[int, ...]

    def __len__(self) -> int:
        return self.forms.nrows

    def linear_forms(self) -> list[LinearForm]:
        return [LinearForm(row) for row in self.forms.rows]


@dataclass(frozen=True)
class Subalgebra:
    """Subspace of Q^ambient_dim; ``basis`` is its RREF row basis, so equality is canonical."""

    ambient_dim: int
    basis: RationalMatrix

    def __post_init__(self):
        if self.ambient_dim < 0:
            raise ValueError("ambient dimension must be non-negative")
        if self.basis.ncols != self.ambient_dim:
            raise DimensionMismatchError(
                f"basis rows of length {self.basis.ncols} in ambient dimension {self.ambient_dim}"
            )

    @classmethod
    def from_span(cls, vectors: Iterable[Sequence[RationalLike]], ambient_dim: int) -> "Subalgebra":
        rows = [as_vector(v) for v in vectors]
        for row in rows:
            if len(row) != ambient_dim:
                raise DimensionMismatchError(
                    f"spanning vector of length {len(row)} in ambient dimension {ambient_dim}"
                )
        return cls(ambient_dim, rref(RationalMatrix(tuple(rows), ambient_dim)).matrix)

    @classmethod
    def from_kernel(cls, forms: Iterable[FormLike], ambient_dim: int) -> "Subalgebra":
        """Joint kernel of the forms; dependent or zero forms are fine."""
        rows = [_coeffs(f) for f in forms]
        for row in rows:
            if len(row) != ambient_dim:
                raise DimensionMismatchError(
                    f"form with {len(row)} coefficients in ambient dimension {ambient_dim}"
                )
        kernel = nullspace_basis(RationalMatrix(tuple(rows), ambient_dim))
        return cls.from_span(kernel, ambient_dim)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subalgebra":
        return cls(ambient_dim, RationalMatrix.identity(ambient_dim))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subalgebra":
        return cls(ambient_dim, RationalMatrix((), ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.dim

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def is_zero(self) -> bool:
        return self.dim == 0

    @cached_property
    def vanishing_ideal(self) -> VanishingIdealBasis:
        echelon = rref(
            RationalMatrix(tuple(nullspace_basis(self.basis)), self.ambient_dim)
        )
        return VanishingIdealBasis(self.ambient_dim, echelon.matrix, echelon.pivots)

    @cached_property
    def free_coordinates(self) -> tuple[int, ...]:
        """Coordinates left after eliminating the vanishing-ideal pivots; there are ``dim`` of them."""
        pivots = set(self.vanishing_ideal.pivots)
        return tuple(j for j in range(self.ambient_dim) if j not in pivots)

    def __str__(self) -> str:
        rows = ", ".join(
            "(" + ", ".join(str(x) for x in row) + ")" for row in self.basis.rows
        )
        return f"span{{{rows}}}" if rows else "0"


def vanishing_ideal(h: Subalgebra) -> VanishingIdealBasis:
    return h.vanishing_ideal


def from_kernel(forms: Iterable[FormLike], ambient_dim: int) -> Subalgebra:
    return Subalgebra.from_kernel(forms, ambient_dim)


def _same_ambient(h1: Subalgebra, h2: Subalgebra) -> None:
    if h1.ambient_dim != h2.ambient_dim:
        raise DimensionMismatchError(
            f"subalgebras of ambient dimensions {h1.ambient_dim} and {h2.ambient_dim}"
        )


def intersect(h1: Subalgebra, h2: Subalgebra) -> Subalgebra:
    _same_ambient(h1, h2)
    forms = h1.vanishing_ideal.forms.rows + h2.vanishing_ideal.forms.rows
    return Subalgebra.from_kernel(forms, h1.ambient_dim)


def span_sum(h1: Subalgebra, h2: Subalgebra) -> Subalgebra:
    _same_ambient(h1, h2)
    return Subalgebra.from_span(h1.basis.rows + h2.basis.rows, h1.ambient_dim)


def contains(h1: Subalgebra, h2: Subalgebra) -> bool:
    """True when h2 is a subspace of h1."""
    _same_ambient(h1, h2)
    forms = h1.vanishing_ideal.forms
    return all(all(x == 0 for x in forms.apply(row)) for row in h2.basis.rows)
