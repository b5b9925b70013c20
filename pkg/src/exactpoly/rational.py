"""Helpers for the exact coefficient field (rationals as ``fractions.Fraction``)."""

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

RationalLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_rational(value: RationalLike) -> Fraction:
    """Convert ints, Fractions and ``"num/den"`` strings; floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational literal")
        # Fraction accepts decimal literals too; keep the format strict
        if any(ch in text for ch in ".eE"):
            raise ValueError(f"rational must be written as num/den: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot read {type(value).__name__} as an exact rational")


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_vector(values: Iterable[RationalLike]) -> tuple[Fraction, ...]:
    return tuple(to_rational(v) for v in values)


def format_vector(values: Sequence[Fraction]) -> list[str]:
    return [format_rational(v) for v in values]


def primitive_integer_vector(values: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a nonzero rational vector to coprime integers, first nonzero entry positive."""
    denominators = lcm(*(v.denominator for v in values)) if values else 1
    ints = [int(v * denominators) for v in values]
    divisor = 0
    for entry in ints:
        divisor = gcd(divisor, entry)
    if divisor == 0:
        raise ValueError("zero vector has no primitive representative")
    ints = [entry // divisor for entry in ints]
    leading = next(entry for entry in ints if entry != 0)
    if leading < 0:
        ints = [-entry for entry in ints]
    return tuple(ints)
