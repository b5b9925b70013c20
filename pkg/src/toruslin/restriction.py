"""Restriction of polynomials on the ambient algebra to a subalgebra.

Two views are offered: ``normal_form`` keeps an ambient representative
(polynomial in the free coordinates of the subalgebra) and is what the
constraint systems compare; ``restrict`` returns the polynomial in dim(h)
parameters along the RREF basis, which is what reports show.
"""

import logging
from functools import lru_cache

from exactpoly.errors import DimensionMismatchError
from exactpoly.linalg import RationalMatrix
from exactpoly.monomial import monomial_basis
from exactpoly.polynomial import Polynomial
from exactpoly.rational import ONE, ZERO
from toruslin.subalgebra import Subalgebra

logger = logging.getLogger(__name__)


def _check(p: Polynomial, h: Subalgebra) -> None:
    if p.nvars != h.ambient_dim:
        raise DimensionMismatchError(
            f"polynomial in {p.nvars} variables restricted to a subalgebra of dimension-{h.ambient_dim} space"
        )


@lru_cache(maxsize=1024)
def elimination_substitution(h: Subalgebra) -> RationalMatrix:
    """Row i is u_i itself for free coordinates and -(sum of other terms) of its ideal row for pivots."""
    n = h.ambient_dim
    rows = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    ideal = h.vanishing_ideal
    for form, pivot in zip(ideal.forms.rows, ideal.pivots):
        rows[pivot] = [ZERO if j == pivot else -form[j] for j in range(n)]
    return RationalMatrix.of(rows, n)


def normal_form(p: Polynomial, h: Subalgebra) -> Polynomial:
    """Canonical representative of p modulo the ideal of polynomials vanishing on h."""
    _check(p, h)
    if h.is_full() or p.is_zero():
        return p
    return p.substitute_linear(elimination_substitution(h))


def restrict(p: Polynomial, h: Subalgebra) -> Polynomial:
    """p pulled back along s -> sum_i s_i * basis_i; a polynomial in dim(h) variables."""
    _check(p, h)
    return p.substitute_linear(h.basis.transpose())


def restricts_to_zero(p: Polynomial, h: Subalgebra) -> bool:
    return normal_form(p, h).is_zero()


def free_monomials(h: Subalgebra, degree: int) -> tuple[tuple[int, ...], ...]:
    """Degree-``degree`` ambient monomials supported on the free coordinates of h."""
    free = set(h.free_coordinates)
    return tuple(
        m
        for m in monomial_basis(h.ambient_dim, degree)
        if all(e == 0 or i in free for i, e in enumerate(m))
    )


@lru_cache(maxsize=4096)
def normal_form_matrix(h: Subalgebra, degree: int) -> RationalMatrix:
    """Matrix of p -> normal_form(p, h) on degree-``degree`` coefficient vectors.

    Columns follow ``monomial_basis(ambient_dim, degree)``, rows follow
    ``free_monomials(h, degree)`` (the only monomials a normal form can use).
    """
    n = h.ambient_dim
    targets = free_monomials(h, degree)
    index = {m: i for i, m in enumerate(targets)}
    columns = []
    for monomial in monomial_basis(n, degree):
        image = normal_form(Polynomial.monomial(monomial), h)
        column = [ZERO] * len(targets)
        for term, coefficient in image.terms:
            column[index[term]] = coefficient
        columns.append(column)
    logger.debug(
        "normal form matrix for %s in degree %d: %dx%d", h, degree, len(targets), len(columns)
    )
    if not columns:
        return RationalMatrix((), 0)
    return RationalMatrix.of(columns, len(targets)).transpose()
