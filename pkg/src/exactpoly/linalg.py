"""Dense linear algebra over the rationals.

Pivoting always takes the first nonzero entry of a column, scanning rows top
to bottom. Arithmetic is exact, so no magnitude-based pivoting is needed and
every result is deterministic.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from exactpoly.errors import DimensionMismatchError
from exactpoly.rational import ONE, ZERO, RationalLike, to_rational

Vector = tuple[Fraction, ...]


def as_vector(values: Iterable[RationalLike]) -> Vector:
    return tuple(to_rational(v) for v in values)


def zero_vector(size: int) -> Vector:
    return (ZERO,) * size


def unit_vector(index: int, size: int) -> Vector:
    entries = [ZERO] * size
    entries[index] = ONE
    return tuple(entries)


def is_zero_vector(vector: Sequence[Fraction]) -> bool:
    return all(entry == 0 for entry in vector)


def dot(left: Sequence[Fraction], right: Sequence[Fraction]) -> Fraction:
    if len(left) != len(right):
        raise DimensionMismatchError(
            f"cannot pair vectors of length {len(left)} and {len(right)}"
        )
    return sum((a * b for a, b in zip(left, right)), ZERO)


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable rows x cols matrix of Fractions. ``ncols`` is kept for empty matrices."""

    rows: tuple[Vector, ...]
    ncols: int

    def __post_init__(self):
        for row in self.rows:
            if len(row) != self.ncols:
                raise DimensionMismatchError(
                    f"row of length {len(row)} in a matrix with {self.ncols} columns"
                )

    @classmethod
    def of(
        cls, rows: Iterable[Iterable[RationalLike]], ncols: Optional[int] = None
    ) -> "RationalMatrix":
        converted = tuple(as_vector(row) for row in rows)
        if ncols is None:
            if not converted:
                raise ValueError("ncols is required for a matrix without rows")
            ncols = len(converted[0])
        return cls(converted, ncols)

    @classmethod
    def identity(cls, size: int) -> "RationalMatrix":
        return cls(tuple(unit_vector(i, size) for i in range(size)), size)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RationalMatrix":
        return cls(tuple(zero_vector(ncols) for _ in range(nrows)), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def column(self, index: int) -> Vector:
        return tuple(row[index] for row in self.rows)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            tuple(self.column(j) for j in range(self.ncols)), self.nrows
        )

    def apply(self, vector: Sequence[Fraction]) -> Vector:
        """Matrix-vector product ``self @ vector``."""
        if len(vector) != self.ncols:
            raise DimensionMismatchError(
                f"matrix with {self.ncols} columns applied to a vector of length {len(vector)}"
            )
        return tuple(dot(row, vector) for row in self.rows)

    def left_apply(self, vector: Sequence[Fraction]) -> Vector:
        """Row vector times matrix ``vector @ self``."""
        if len(vector) != self.nrows:
            raise DimensionMismatchError(
                f"row vector of length {len(vector)} against {self.nrows} rows"
            )
        result = [ZERO] * self.ncols
        for coefficient, row in zip(vector, self.rows):
            if coefficient == 0:
                continue
            for j, entry in enumerate(row):
                if entry != 0:
                    result[j] += coefficient * entry
        return tuple(result)

    def matmul(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise DimensionMismatchError(
                f"cannot multiply {self.shape} by {other.shape}"
            )
        return RationalMatrix(
            tuple(other.left_apply(row) for row in self.rows), other.ncols
        )

    def stack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.ncols:
            raise DimensionMismatchError(
                f"cannot stack {self.ncols} columns on {other.ncols}"
            )
        return RationalMatrix(self.rows + other.rows, self.ncols)


@dataclass(frozen=True)
class RowEchelon:
    """Result of Gauss-Jordan elimination: nonzero RREF rows and their pivot columns."""

    matrix: RationalMatrix
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def free_columns(self) -> tuple[int, ...]:
        pivot_set = set(self.pivots)
        return tuple(j for j in range(self.matrix.ncols) if j not in pivot_set)


def _gauss_jordan(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    pivots: list[int] = []
    pivot_row = 0
    nrows = len(rows)
    for column in range(ncols):
        if pivot_row >= nrows:
            break
        found = next(
            (r for r in range(pivot_row, nrows) if rows[r][column] != 0), None
        )
        if found is None:
            continue
        rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
        pivot = rows[pivot_row][column]
        if pivot != 1:
            rows[pivot_row] = [entry / pivot for entry in rows[pivot_row]]
        lead = rows[pivot_row]
        for r in range(nrows):
            if r == pivot_row:
                continue
            factor = rows[r][column]
            if factor == 0:
                continue
            rows[r] = [a - factor * b if b != 0 else a for a, b in zip(rows[r], lead)]
        pivots.append(column)
        pivot_row += 1
    return rows[:pivot_row], pivots


def rref(matrix: RationalMatrix) -> RowEchelon:
    """Reduced row echelon form with zero rows dropped."""
    rows = [list(row) for row in matrix.rows]
    reduced, pivots = _gauss_jordan(rows, matrix.ncols)
    return RowEchelon(
        RationalMatrix(tuple(tuple(row) for row in reduced), matrix.ncols),
        tuple(pivots),
    )


def rank(matrix: RationalMatrix) -> int:
    return rref(matrix).rank


def nullspace_basis(matrix: RationalMatrix) -> list[Vector]:
    """Basis of the right nullspace.

    One vector per free column in ascending order, with that free variable set
    to 1 and the other free variables set to 0.
    """
    echelon = rref(matrix)
    ncols = matrix.ncols
    basis: list[Vector] = []
    for free in echelon.free_columns():
        entries = [ZERO] * ncols
        entries[free] = ONE
        for row, pivot in zip(echelon.matrix.rows, echelon.pivots):
            entries[pivot] = -row[free]
        basis.append(tuple(entries))
    return basis


def row_space(vectors: Sequence[Sequence[Fraction]], ncols: int) -> RationalMatrix:
    """Canonical (RREF) basis of the span of the given vectors."""
    return rref(RationalMatrix(tuple(tuple(v) for v in vectors), ncols)).matrix


@dataclass(frozen=True)
class Inconsistency:
    """An RREF row of the augmented system reading ``0 = c`` with c nonzero."""

    row: Vector


def solve(matrix: RationalMatrix, rhs: Sequence[Fraction]) -> Union[Vector, Inconsistency]:
    """One solution of ``matrix @ x = rhs`` (free variables 0) or the inconsistent row."""
    if len(rhs) != matrix.nrows:
        raise DimensionMismatchError(
            f"right-hand side of length {len(rhs)} for {matrix.nrows} equations"
        )
    augmented = [list(row) + [to_rational(b)] for row, b in zip(matrix.rows, rhs)]
    reduced, pivots = _gauss_jordan(augmented, matrix.ncols + 1)
    solution = [ZERO] * matrix.ncols
    for row, pivot in zip(reduced, pivots):
        if pivot == matrix.ncols:
            return Inconsistency(tuple(row))
        solution[pivot] = row[-1]
    return tuple(solution)


def inverse(matrix: RationalMatrix) -> RationalMatrix:
    size = matrix.nrows
    if size != matrix.ncols:
        raise DimensionMismatchError(f"cannot invert a {matrix.shape} matrix")
    augmented = [
        list(row) + list(unit_vector(i, size)) for i, row in enumerate(matrix.rows)
    ]
    reduced, pivots = _gauss_jordan(augmented, 2 * size)
    if len(pivots) < size or any(p >= size for p in pivots):
        raise ValueError("matrix is singular")
    return RationalMatrix(tuple(tuple(row[size:]) for row in reduced), size)


class EchelonBasis:
    """Incrementally built basis of a subspace of Q^n.

    Rows are kept in semi-echelon form keyed by their leading column, which is
    enough to decide membership and extend the span one vector at a time.
    """

    def __init__(self, size: int):
        self.size = size
        self._rows: dict[int, list[Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, vector: Sequence[Fraction]) -> list[Fraction]:
        if len(vector) != self.size:
            raise DimensionMismatchError(
                f"vector of length {len(vector)} in a space of dimension {self.size}"
            )
        residue = list(vector)
        for lead in sorted(self._rows):
            factor = residue[lead]
            if factor == 0:
                continue
            row = self._rows[lead]
            for j in range(lead, self.size):
                if row[j] != 0:
                    residue[j] -= factor * row[j]
        return residue

    def add(self, vector: Sequence[Fraction]) -> bool:
        """Add the vector to the span; return False when it was already inside."""
        residue = self.reduce(vector)
        lead = next((j for j, entry in enumerate(residue) if entry != 0), None)
        if lead is None:
            return False
        pivot = residue[lead]
        self._rows[lead] = [entry / pivot for entry in residue]
        return True

    def extend(self, vectors: Iterable[Sequence[Fraction]]) -> int:
        return sum(1 for vector in vectors if self.add(vector))

    def __contains__(self, vector: Sequence[Fraction]) -> bool:
        return is_zero_vector(self.reduce(vector))

    def copy(self) -> "EchelonBasis":
        clone = EchelonBasis(self.size)
        clone._rows = {lead: list(row) for lead, row in self._rows.items()}
        return clone

    def canonical(self) -> RationalMatrix:
        return row_space([tuple(row) for row in self._rows.values()], self.size)
