"""Stratified spaces: strata labelled by isotropy, ordered by closure.

A pair (Y, Z) means Y lies in the closure of Z, so the isotropy of Z is
contained in that of Y. Fixed strata are minimal; the free stratum is maximal.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Optional, Union

from exactpoly.errors import DimensionMismatchError
from exactpoly.polynomial import Polynomial
from strata_oracle.errors import MissingStratumError, StrataError
from toruslin.restriction import normal_form
from toruslin.subalgebra import Subalgebra, contains

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Stratum:
    id: str
    isotropy: Subalgebra


@dataclass(frozen=True)
class StratifiedSpace:
    torus_dim: int
    strata: tuple[Stratum, ...]
    # reflexive and transitively closed
    order: frozenset[tuple[str, str]]

    @classmethod
    def build(
        cls,
        torus_dim: int,
        strata: Iterable[Stratum],
        relations: Iterable[tuple[str, str]] = (),
    ) -> "StratifiedSpace":
        strata = tuple(strata)
        ids = [s.id for s in strata]
        duplicates = sorted({i for i in ids if ids.count(i) > 1})
        if duplicates:
            raise StrataError(f"duplicate stratum ids: {', '.join(duplicates)}", "stratum-ids-unique")
        for stratum in strata:
            if stratum.isotropy.ambient_dim != torus_dim:
                raise StrataError(
                    f"isotropy of {stratum.id} lives in dimension {stratum.isotropy.ambient_dim}",
                    "isotropy-ambient",
                )
        known = set(ids)
        given = set()
        for lower, upper in relations:
            for name in (lower, upper):
                if name not in known:
                    raise StrataError(f"order pair names unknown stratum {name}", "order-ids-known")
            given.add((lower, upper))

        closed = _transitive_closure(ids, given)
        added = {(y, z) for y, z in closed if y != z} - given
        if added:
            logger.warning(
                "closure order was not transitively closed; added %d pairs", len(added)
            )
        space = cls(torus_dim, strata, frozenset(closed))
        space._validate()
        return space

    def _validate(self) -> None:
        for lower, upper in self.order:
            if lower == upper:
                continue
            if (upper, lower) in self.order:
                raise StrataError(
                    f"{lower} and {upper} precede each other", "order-antisymmetric"
                )
            if not contains(self.isotropy(lower), self.isotropy(upper)):
                raise StrataError(
                    f"{lower} precedes {upper} but the isotropy of {upper} is not inside that of {lower}",
                    "isotropy-monotone",
                )

    @cached_property
    def _by_id(self) -> dict[str, Stratum]:
        return {s.id: s for s in self.strata}

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(s.id for s in self.strata)

    def isotropy(self, stratum_id: str) -> Subalgebra:
        try:
            return self._by_id[stratum_id].isotropy
        except KeyError:
            raise MissingStratumError(f"unknown stratum {stratum_id}") from None

    def precedes(self, lower: str, upper: str) -> bool:
        return (lower, upper) in self.order

    def relations(self) -> list[tuple[str, str]]:
        """Non-reflexive order pairs in stratum order."""
        position = {s: i for i, s in enumerate(self.ids)}
        return sorted(
            ((y, z) for y, z in self.order if y != z),
            key=lambda pair: (position[pair[0]], position[pair[1]]),
        )

    def is_downward_closed(self, ids: Iterable[str]) -> bool:
        subset = set(ids)
        return all(y in subset for y, z in self.order if z in subset)

    def down_closure(self, ids: Iterable[str]) -> tuple[str, ...]:
        subset = set(ids)
        closure = {y for y, z in self.order if z in subset} | subset
        return tuple(i for i in self.ids if i in closure)

    def subspace(self, ids: Iterable[str]) -> "StratifiedSpace":
        keep = set(ids)
        for name in keep:
            self.isotropy(name)
        return StratifiedSpace(
            self.torus_dim,
            tuple(s for s in self.strata if s.id in keep),
            frozenset((y, z) for y, z in self.order if y in keep and z in keep),
        )

    def fixed_ids(self) -> tuple[str, ...]:
        return tuple(s.id for s in self.strata if s.isotropy.is_full())

    def skeleton_ids(self) -> tuple[str, ...]:
        return tuple(s.id for s in self.strata if s.isotropy.dim >= self.torus_dim - 1)


def _transitive_closure(ids: list[str], pairs: set[tuple[str, str]]) -> set[tuple[str, str]]:
    reach = {i: {i} for i in ids}
    for lower, upper in pairs:
        reach[lower].add(upper)
    for middle in ids:
        for start in ids:
            if middle in reach[start]:
                reach[start] |= reach[middle]
    return {(start, end) for start in ids for end in reach[start]}


ValueMap = Mapping[str, Polynomial]


@dataclass(frozen=True)
class StrataAssignment:
    """Polynomial per stratum, each stored as its normal form on the stratum's isotropy."""

    values: dict[str, Polynomial] = field(hash=False)

    @classmethod
    def normalized(
        cls, space: StratifiedSpace, values: ValueMap, ids: Optional[Iterable[str]] = None
    ) -> "StrataAssignment":
        wanted = tuple(ids) if ids is not None else space.ids
        missing = [i for i in wanted if i not in values]
        if missing:
            raise MissingStratumError(f"no value for strata {', '.join(missing)}")
        extra = sorted(set(values) - set(wanted))
        if extra:
            raise MissingStratumError(f"values given for unknown strata {', '.join(extra)}")
        out = {}
        for stratum_id in wanted:
            value = values[stratum_id]
            if value.nvars != space.torus_dim:
                raise DimensionMismatchError(
                    f"value on {stratum_id} has {value.nvars} variables, torus has {space.torus_dim}"
                )
            out[stratum_id] = normal_form(value, space.isotropy(stratum_id))
        return cls(out)

    def __getitem__(self, stratum_id: str) -> Polynomial:
        return self.values[stratum_id]

    def __contains__(self, stratum_id: str) -> bool:
        return stratum_id in self.values

    def ids(self) -> tuple[str, ...]:
        return tuple(self.values)

    def restrict_to(self, ids: Iterable[str]) -> "StrataAssignment":
        return StrataAssignment({i: self.values[i] for i in ids})

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values.values())


AssignmentLike = Union[StrataAssignment, ValueMap]


def as_assignment(
    space: StratifiedSpace, values: AssignmentLike, ids: Optional[Iterable[str]] = None
) -> StrataAssignment:
    if isinstance(values, StrataAssignment):
        values = values.values
    return StrataAssignment.normalized(space, values, ids)
