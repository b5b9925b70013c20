"""Seeded random problems for the property spot-checks run by ``examples --seed``.

Extension problems are generated from a hidden global polynomial, so every
one of them is feasible. Stratified models live over tori of dimension one
to three: fixed points, then one level of strata per isotropy corank, each
isotropy inside the isotropies below it, and one free stratum on top.
"""

import logging
import random
from dataclasses import dataclass
from itertools import combinations

from exactpoly.linalg import RationalMatrix, rank
from exactpoly.linear_form import LinearForm
from exactpoly.monomial import monomial_basis
from exactpoly.polynomial import Polynomial
from extendlib.independent import extend_independent, first_failure
from extendlib.problem import ExtensionProblem
from extendlib.solve import Infeasible, extend_solve
from strata_oracle.assignment import graded_basis_oracle
from strata_oracle.gluing import glue
from strata_oracle.localization import lint_fixed_closure, localize_kernel_check, rank_certificate
from strata_oracle.space import StrataAssignment, Stratum, StratifiedSpace
from toruslin.subalgebra import Subalgebra, contains

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PropertyResult:
    suite: str
    sample: int
    ok: bool
    detail: str = ""


def random_polynomial(rng: random.Random, nvars: int, max_degree: int) -> Polynomial:
    coefficients = {}
    for degree in range(max_degree + 1):
        for monomial in monomial_basis(nvars, degree):
            if rng.random() < 0.4:
                coefficients[monomial] = rng.randint(-3, 3)
    return Polynomial.from_dict(nvars, coefficients)


def random_independent_forms(rng: random.Random, nvars: int, count: int) -> list[LinearForm]:
    while True:
        rows = [tuple(rng.randint(-2, 2) for _ in range(nvars)) for _ in range(count)]
        if rank(RationalMatrix.of(rows, nvars)) == count:
            return [LinearForm.of(row) for row in rows]


def random_extension_problem(rng: random.Random, max_vars: int = 4, max_degree: int = 4) -> ExtensionProblem:
    """Independent forms with targets restricted from one hidden polynomial."""
    nvars = rng.randint(1, max_vars)
    count = rng.randint(1, nvars)
    forms = random_independent_forms(rng, nvars, count)
    hidden = random_polynomial(rng, nvars, rng.randint(0, max_degree))
    subsets = [
        subset
        for size in range(1, count + 1)
        for subset in combinations(range(count), size)
    ]
    chosen = rng.sample(subsets, rng.randint(1, len(subsets)))
    return ExtensionProblem.build(nvars, forms, [(subset, hidden) for subset in chosen])


def extension_suite(seed: int, samples: int) -> list[PropertyResult]:
    rng = random.Random(seed)
    results = []
    for sample in range(samples):
        problem = random_extension_problem(rng)
        witness = extend_independent(problem)
        failure = first_failure(problem, witness)
        bound = max((c.target.degree for c in problem.constraints if not c.target.is_zero()), default=0)
        solved = extend_solve(problem, bound)
        ok = failure is None and not isinstance(solved, Infeasible)
        detail = "" if ok else f"forms {[f.coeffs for f in problem.forms]}"
        results.append(PropertyResult("extension", sample, ok, detail))
    return results


def random_subspace(rng: random.Random, h: Subalgebra, dim: int) -> Subalgebra:
    """A random ``dim``-dimensional subspace of h, drawn from small integer combinations."""
    while True:
        vectors = [
            [sum(rng.randint(-2, 2) * row[j] for row in h.basis.rows) for j in range(h.ambient_dim)]
            for _ in range(dim)
        ]
        candidate = Subalgebra.from_span(vectors, h.ambient_dim)
        if candidate.dim == dim:
            return candidate


def random_stratified_space(rng: random.Random, max_torus_dim: int = 3) -> StratifiedSpace:
    """Fixed points at the bottom, one level per isotropy corank, a free stratum on top.

    Every stratum of corank c sits above one stratum of corank c - 1 whose
    isotropy contains its own, and above any other such stratum half the time.
    """
    k = rng.randint(1, max_torus_dim)
    strata = [Stratum(f"p{i + 1}", Subalgebra.full(k)) for i in range(rng.randint(1, 3))]
    beneath: dict[str, set[str]] = {s.id: set() for s in strata}
    below = list(strata)
    for corank in range(1, k):
        level = []
        for i in range(rng.randint(0, 2) if corank > 1 else rng.randint(0, 3)):
            parent = rng.choice(below)
            stratum = Stratum(f"s{corank}_{i + 1}", random_subspace(rng, parent.isotropy, k - corank))
            covers = [parent] + [
                other
                for other in below
                if other is not parent and contains(other.isotropy, stratum.isotropy) and rng.random() < 0.5
            ]
            beneath[stratum.id] = {c.id for c in covers}.union(*(beneath[c.id] for c in covers))
            level.append(stratum)
        if not level:
            break
        strata.extend(level)
        below = level
    beneath["free"] = {s.id for s in strata}
    strata.append(Stratum("free", Subalgebra.zero(k)))
    relations = [(lower, upper) for upper, lowers in beneath.items() for lower in sorted(lowers)]
    return StratifiedSpace.build(k, strata, relations)


def random_assignment(rng: random.Random, space: StratifiedSpace, degree: int) -> StrataAssignment:
    basis = graded_basis_oracle(space, degree)
    values = {i: Polynomial.zero(space.torus_dim) for i in space.ids}
    for element in basis:
        factor = rng.randint(-2, 2)
        for i in space.ids:
            values[i] = values[i] + element[i].scale(factor)
    return StrataAssignment(values)


def gluing_suite(seed: int, samples: int) -> list[PropertyResult]:
    """Glue the restrictions to two closed pieces covering the space and compare."""
    rng = random.Random(seed)
    results = []
    for sample in range(samples):
        space = random_stratified_space(rng)
        assignment = random_assignment(rng, space, rng.randint(0, 2))
        ids = list(space.ids)
        rng.shuffle(ids)
        cut = rng.randint(1, len(ids))
        left = space.down_closure(ids[:cut])
        right = space.down_closure(ids[cut:])
        glued = glue(
            space, left, right, assignment.restrict_to(left), assignment.restrict_to(right)
        )
        ok = glued == assignment
        results.append(PropertyResult("gluing", sample, ok, "" if ok else ", ".join(space.ids)))
    return results


def localization_suite(seed: int, samples: int, degree_bound: int = 3) -> list[PropertyResult]:
    rng = random.Random(seed)
    results = []
    for sample in range(samples):
        space = random_stratified_space(rng)
        certificate = rank_certificate(space, degree_bound)
        ok = localize_kernel_check(space, degree_bound) and certificate.ok
        if not lint_fixed_closure(space):
            ok = ok and certificate.rank == len(space.fixed_ids())
        results.append(PropertyResult("localization", sample, ok))
    return results


def run_properties(seed: int, samples: int) -> list[PropertyResult]:
    results = extension_suite(seed, samples) + gluing_suite(seed, samples) + localization_suite(seed, samples)
    failed = sum(not r.ok for r in results)
    logger.info("property checks with seed %d: %d run, %d failed", seed, len(results), failed)
    return results
