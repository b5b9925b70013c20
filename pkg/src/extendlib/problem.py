from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from exactpoly.linear_form import LinearForm
from exactpoly.polynomial import Polynomial
from extendlib.errors import ExtensionProblemError
from toruslin.restriction import normal_form
from toruslin.subalgebra import Subalgebra


@dataclass(frozen=True)
class Constraint:
    """Prescribed restriction ``target`` on the joint kernel of the forms in ``index_set`` (0-based)."""

    index_set: tuple[int, ...]
    target: Polynomial


@dataclass(frozen=True)
class ExtensionProblem:
    ambient_dim: int
    forms: tuple[LinearForm, ...]
    constraints: tuple[Constraint, ...] = field(default_factory=tuple)

    @classmethod
    def build(
        cls,
        ambient_dim: int,
        forms: Sequence[LinearForm],
        constraints: Iterable[tuple[Iterable[int], Polynomial]],
    ) -> "ExtensionProblem":
        forms = tuple(forms)
        for index, form in enumerate(forms):
            if form.nvars != ambient_dim:
                raise ExtensionProblemError(
                    f"form {index + 1} has {form.nvars} coefficients in dimension {ambient_dim}",
                    "form-length",
                )
        seen = set()
        built = []
        for raw_set, target in constraints:
            index_set = tuple(sorted(set(raw_set)))
            if not index_set:
                raise ExtensionProblemError("constraint with empty index set", "index-set-nonempty")
            if any(not 0 <= i < len(forms) for i in index_set):
                raise ExtensionProblemError(
                    f"index set {[i + 1 for i in index_set]} names a missing form", "index-set-valid"
                )
            if index_set in seen:
                raise ExtensionProblemError(
                    f"index set {[i + 1 for i in index_set]} appears twice", "index-sets-distinct"
                )
            if target.nvars != ambient_dim:
                raise ExtensionProblemError(
                    f"target in {target.nvars} variables in dimension {ambient_dim}", "target-nvars"
                )
            seen.add(index_set)
            space = Subalgebra.from_kernel([forms[i] for i in index_set], ambient_dim)
            built.append(Constraint(index_set, normal_form(target, space)))
        return cls(ambient_dim, forms, tuple(built))

    @cached_property
    def subspaces(self) -> tuple[Subalgebra, ...]:
        return tuple(
            Subalgebra.from_kernel([self.forms[i] for i in c.index_set], self.ambient_dim)
            for c in self.constraints
        )
