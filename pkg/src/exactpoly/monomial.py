"""Monomials as exponent tuples, ordered graded-lexicographically."""

from functools import lru_cache
from math import comb
from typing import Sequence

Monomial = tuple[int, ...]


def monomial_degree(monomial: Monomial) -> int:
    return sum(monomial)


def grlex_key(monomial: Monomial) -> tuple[int, Monomial]:
    """Sort key: total degree first, then lexicographic on the exponents."""
    return (sum(monomial), monomial)


def monomial_product(left: Monomial, right: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(left, right))


def unit_monomial(nvars: int) -> Monomial:
    return (0,) * nvars


def variable_monomial(index: int, nvars: int) -> Monomial:
    exponents = [0] * nvars
    exponents[index] = 1
    return tuple(exponents)


def embed_monomial(monomial: Monomial, positions: Sequence[int], nvars: int) -> Monomial:
    """Place the exponents of a monomial in few variables at the given ambient positions."""
    exponents = [0] * nvars
    for exponent, position in zip(monomial, positions):
        exponents[position] = exponent
    return tuple(exponents)


@lru_cache(maxsize=None)
def monomial_basis(nvars: int, degree: int) -> tuple[Monomial, ...]:
    """All monomials of the given degree, largest first in graded-lex order.

    (2, 2) gives u1^2, u1*u2, u2^2. The number of entries is
    C(degree + nvars - 1, nvars - 1).
    """
    if degree < 0:
        raise ValueError("degree must be non-negative")
    if nvars == 0:
        return ((),) if degree == 0 else ()
    if nvars == 1:
        return ((degree,),)
    result: list[Monomial] = []
    for first in range(degree, -1, -1):
        for rest in monomial_basis(nvars - 1, degree - first):
            result.append((first,) + rest)
    return tuple(result)


def monomial_count(nvars: int, degree: int) -> int:
    if nvars == 0:
        return 1 if degree == 0 else 0
    return comb(degree + nvars - 1, nvars - 1)


@lru_cache(maxsize=None)
def monomial_index(nvars: int, degree: int) -> dict[Monomial, int]:
    return {monomial: i for i, monomial in enumerate(monomial_basis(nvars, degree))}
