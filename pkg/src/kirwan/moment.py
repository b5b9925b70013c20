import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from exactpoly.linalg import dot
from exactpoly.rational import ZERO, RationalLike, to_rational, to_vector
from gkm_core.presentation import GkmPresentation
from kirwan.errors import CircleError, MissingMomentError, RegularityError
from toruslin.subalgebra import Subalgebra

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MomentData:
    """Moment values of the fixed components, translated so the level sits at 0.

    ``values[r]`` is the scalar moment of component r minus the level.
    """

    values: tuple[Fraction, ...]
    circle: Subalgebra
    level: Fraction = ZERO

    def __post_init__(self):
        if self.circle.dim != 1:
            raise CircleError(f"circle direction must be one-dimensional, got {self.circle.dim}")
        zero = [str(r + 1) for r, value in enumerate(self.values) if value == 0]
        if zero:
            raise RegularityError(
                f"components {', '.join(zero)} lie on the level {self.level}; it is not a regular value"
            )

    @classmethod
    def from_scalars(
        cls, values: Sequence[RationalLike], circle: Subalgebra, level: RationalLike = 0
    ) -> "MomentData":
        mu = to_rational(level)
        return cls(tuple(to_rational(v) - mu for v in values), circle, mu)

    @classmethod
    def from_vectors(
        cls,
        moment_vectors: Sequence[Sequence[RationalLike]],
        circle: Subalgebra,
        level: RationalLike = 0,
    ) -> "MomentData":
        """Pair each moment image with the circle's spanning vector, then subtract the level."""
        if circle.dim != 1:
            raise CircleError(f"circle direction must be one-dimensional, got {circle.dim}")
        direction = circle.basis.rows[0]
        mu = to_rational(level)
        values = tuple(dot(to_vector(v), direction) - mu for v in moment_vectors)
        return cls(values, circle, mu)

    @property
    def positive(self) -> tuple[int, ...]:
        return tuple(r for r, value in enumerate(self.values) if value > 0)

    @property
    def negative(self) -> tuple[int, ...]:
        return tuple(r for r, value in enumerate(self.values) if value < 0)


def moment_data(
    presentation: GkmPresentation,
    circle: Optional[Subalgebra] = None,
    level: RationalLike = 0,
) -> MomentData:
    """Read moment data off the components: scalars when all have one, else moment vectors.

    Without an explicit circle a one-dimensional torus is its own circle.
    """
    if circle is None:
        if presentation.torus_dim != 1:
            raise CircleError(
                f"a circle direction is required for a {presentation.torus_dim}-dimensional torus"
            )
        circle = Subalgebra.full(1)
    components = presentation.components
    if all(c.moment is not None for c in components):
        return MomentData.from_scalars([c.moment for c in components], circle, level)
    if all(c.moment_vector is not None for c in components):
        return MomentData.from_vectors([c.moment_vector for c in components], circle, level)
    missing = [c.name for c in components if c.moment is None and c.moment_vector is None]
    raise MissingMomentError(f"components without moment data: {', '.join(missing) or 'mixed kinds'}")
