"""GKM presentations: fixed components glued by congruences along isotropy pieces."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from exactpoly.errors import DimensionMismatchError
from exactpoly.linalg import Vector
from exactpoly.linear_form import LinearForm
from exactpoly.monomial import monomial_count
from exactpoly.polynomial import Polynomial
from gkm_core.errors import LengthMismatchError, PresentationError
from toruslin.subalgebra import Subalgebra


@dataclass(frozen=True)
class Component:
    """A connected component of the fixed set.

    ``moment`` is the scalar moment value, ``moment_vector`` the full moment
    image in the dual of the torus algebra and ``weights`` the isotropy weights
    of the normal representation. All three are optional.
    """

    name: str
    moment: Optional[Fraction] = None
    moment_vector: Optional[Vector] = None
    weights: Optional[tuple[LinearForm, ...]] = None


@dataclass(frozen=True)
class Piece:
    """Components ``members`` lie in one connected component of the fixed set of ``g``."""

    g: Subalgebra
    members: tuple[int, ...]


@dataclass(frozen=True)
class GkmPresentation:
    torus_dim: int
    components: tuple[Component, ...]
    pieces: tuple[Piece, ...] = field(default_factory=tuple)
    generalized: bool = False

    def __post_init__(self):
        if self.torus_dim < 1:
            raise PresentationError("torus dimension must be positive", "torus-dim-positive")
        if not self.components:
            raise PresentationError("a presentation needs at least one component", "components-nonempty")
        names = [c.name for c in self.components]
        duplicates = sorted({n for n in names if names.count(n) > 1})
        if duplicates:
            raise PresentationError(
                f"duplicate component names: {', '.join(duplicates)}", "component-names-unique"
            )
        for component in self.components:
            for weight in component.weights or ():
                if weight.nvars != self.torus_dim:
                    raise PresentationError(
                        f"weight of component {component.name} has {weight.nvars} coefficients",
                        "weight-length",
                    )
            if component.moment_vector is not None and len(component.moment_vector) != self.torus_dim:
                raise PresentationError(
                    f"moment vector of component {component.name} has wrong length",
                    "moment-vector-length",
                )
        for index, piece in enumerate(self.pieces):
            self._validate_piece(index, piece)

    def _validate_piece(self, index: int, piece: Piece) -> None:
        label = f"piece {index + 1}"
        if piece.g.ambient_dim != self.torus_dim:
            raise PresentationError(
                f"{label}: subalgebra lives in dimension {piece.g.ambient_dim}", "piece-ambient"
            )
        if self.generalized:
            if piece.g.dim > self.torus_dim - 1:
                raise PresentationError(
                    f"{label}: subalgebra must be proper, got dimension {piece.g.dim}",
                    "piece-codimension",
                )
        elif piece.g.dim != self.torus_dim - 1:
            raise PresentationError(
                f"{label}: subalgebra has dimension {piece.g.dim}, expected {self.torus_dim - 1}",
                "piece-codimension",
            )
        if len(piece.members) < 2:
            raise PresentationError(f"{label}: needs at least two members", "piece-members-size")
        if len(set(piece.members)) != len(piece.members):
            raise PresentationError(f"{label}: repeated members", "piece-members-distinct")
        for member in piece.members:
            if not 0 <= member < len(self.components):
                raise PresentationError(
                    f"{label}: member index {member} out of range", "piece-members-valid"
                )

    @property
    def n(self) -> int:
        return len(self.components)

    def component_index(self, name: str) -> int:
        for index, component in enumerate(self.components):
            if component.name == name:
                return index
        raise KeyError(name)

    def block_size(self, degree: int) -> int:
        return monomial_count(self.torus_dim, degree)

    def with_pieces(self, pieces: Sequence[Piece]) -> "GkmPresentation":
        return GkmPresentation(self.torus_dim, self.components, tuple(pieces), self.generalized)


@dataclass(frozen=True)
class AssignmentTuple:
    """One polynomial per fixed component, in the presentation's component order."""

    polys: tuple[Polynomial, ...]

    @classmethod
    def of(cls, polys: Sequence[Polynomial]) -> "AssignmentTuple":
        polys = tuple(polys)
        if polys:
            nvars = polys[0].nvars
            if any(p.nvars != nvars for p in polys):
                raise DimensionMismatchError("tuple entries in different numbers of variables")
        return cls(polys)

    @classmethod
    def constant(cls, value, n: int, nvars: int) -> "AssignmentTuple":
        return cls(tuple(Polynomial.constant(value, nvars) for _ in range(n)))

    @classmethod
    def from_vector(cls, nvars: int, n: int, degree: int, vector: Sequence[Fraction]) -> "AssignmentTuple":
        """Inverse of ``to_vector``: block r of the vector holds component r's coefficients."""
        size = monomial_count(nvars, degree)
        if len(vector) != n * size:
            raise LengthMismatchError(
                f"vector of length {len(vector)} for {n} components of block size {size}"
            )
        return cls(
            tuple(
                Polynomial.from_vector(nvars, degree, vector[r * size : (r + 1) * size])
                for r in range(n)
            )
        )

    def __len__(self) -> int:
        return len(self.polys)

    def __getitem__(self, index: int) -> Polynomial:
        return self.polys[index]

    @property
    def nvars(self) -> int:
        return self.polys[0].nvars

    def to_vector(self, degree: int) -> Vector:
        out: list[Fraction] = []
        for p in self.polys:
            out.extend(p.to_vector(degree))
        return tuple(out)

    def __add__(self, other: "AssignmentTuple") -> "AssignmentTuple":
        if len(other) != len(self):
            raise LengthMismatchError(f"adding tuples of lengths {len(self)} and {len(other)}")
        return AssignmentTuple(tuple(a + b for a, b in zip(self.polys, other.polys)))

    def __sub__(self, other: "AssignmentTuple") -> "AssignmentTuple":
        if len(other) != len(self):
            raise LengthMismatchError(f"subtracting tuples of lengths {len(self)} and {len(other)}")
        return AssignmentTuple(tuple(a - b for a, b in zip(self.polys, other.polys)))

    def times(self, factor: Polynomial) -> "AssignmentTuple":
        """Module action of a polynomial on the ambient algebra."""
        return AssignmentTuple(tuple(factor * p for p in self.polys))

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.polys)

    def degree(self) -> Optional[int]:
        """Common degree of a homogeneous nonzero tuple, else None."""
        degrees = {d for p in self.polys for d in p.degrees()}
        return degrees.pop() if len(degrees) == 1 else None
