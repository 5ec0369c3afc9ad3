"""Exact scalars: rationals, and elements of prime fields.

Scalars are written as strings on the wire: ``"3/7"`` or ``"-2"`` for
rationals and ``"2 mod 3"`` for an element of the prime field F_3.
Floating point is never accepted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

_MOD_RE = re.compile(r"^\s*(-?\d+)\s+mod\s+(\d+)\s*$")
_RAT_RE = re.compile(r"^\s*-?\d+(\s*/\s*\d+)?\s*$")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True, order=True)
class FieldElement:
    """An element of the prime field F_p."""

    value: int
    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        object.__setattr__(self, "value", self.value % self.p)

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return f"{self.value} mod {self.p}"


Scalar = Union[Fraction, FieldElement]


def parse_scalar(text) -> Scalar:
    """Parse a scalar literal; ints are accepted, floats are not."""
    if isinstance(text, (Fraction, FieldElement)):
        return text
    if isinstance(text, bool) or isinstance(text, float):
        raise ValueError(f"not an exact scalar: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"not a scalar literal: {text!r}")
    m = _MOD_RE.match(text)
    if m:
        return FieldElement(int(m.group(1)), int(m.group(2)))
    if _RAT_RE.match(text):
        return Fraction(text.replace(" ", ""))
    raise ValueError(f"not a scalar literal: {text!r}")


def format_scalar(x: Scalar) -> str:
    return str(x)


def is_zero(x: Scalar) -> bool:
    return not x


def is_one(x: Scalar) -> bool:
    if isinstance(x, FieldElement):
        return x.value == 1 % x.p
    return x == 1


def coerce(x: Scalar, p: int | None) -> Scalar:
    """Map a scalar into F_p (``p`` given) or leave it rational (``p=None``)."""
    if p is None:
        if isinstance(x, FieldElement):
            raise ValueError(f"cannot lift {x} to the rationals")
        return x
    if isinstance(x, FieldElement):
        if x.p != p:
            raise ValueError(f"{x} is not in F_{p}")
        return x
    if x.denominator % p == 0:
        raise ValueError(f"{x} has no image in F_{p}")
    return FieldElement(x.numerator * pow(x.denominator, -1, p), p)
