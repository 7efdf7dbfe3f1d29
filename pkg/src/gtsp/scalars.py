"""Exact scalars: rationals, the integer-shift order, and Q(sqrt 2)."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Optional, Sequence

Rational = Fraction

_RATIONAL_RE = re.compile(r"\A\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*\Z")

HALF = Fraction(1, 2)


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; decimals and floats are rejected."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"not a rational: {text!r}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_vector(text: str) -> tuple[Fraction, ...]:
    """Comma separated rationals, e.g. ``"-1/2,-3/2"``."""
    parts = [p for p in text.split(",")]
    if not parts or any(not p.strip() for p in parts):
        raise ValueError(f"malformed vector {text!r}")
    return tuple(parse_rational(p) for p in parts)


def is_integer(x: Fraction) -> bool:
    return Fraction(x).denominator == 1


def is_half_integer(x: Fraction) -> bool:
    """True iff x lies in 1/2 + Z."""
    return (Fraction(x) + HALF).denominator == 1


def integer_distance(a: Fraction, b: Fraction) -> Optional[int]:
    """Return a - b if it is an integer, otherwise None."""
    d = Fraction(a) - Fraction(b)
    if d.denominator != 1:
        return None
    return d.numerator


def shift_geq(a, b) -> bool:
    """Integer-shift order: a - b in Z_{>=0}."""
    d = integer_distance(a, b)
    return d is not None and d >= 0


def shift_gt(a, b) -> bool:
    """Strict integer-shift order: a - b in Z_{>0}."""
    d = integer_distance(a, b)
    return d is not None and d > 0


def real_geq(a, b) -> bool:
    return Fraction(a) >= Fraction(b)


def classify(v: Sequence[Fraction]) -> tuple[frozenset[int], frozenset[int]]:
    """Return (Int(v), Hf(v)) as 1-based index sets."""
    ints = frozenset(i + 1 for i, x in enumerate(v) if is_integer(x))
    halves = frozenset(i + 1 for i, x in enumerate(v) if is_half_integer(x))
    return ints, halves


def int_set(v: Iterable[Fraction]) -> frozenset[int]:
    return frozenset(i + 1 for i, x in enumerate(v) if is_integer(x))


class RootTwo:
    """Exact element a + b*sqrt(2) of Q(sqrt 2)."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @classmethod
    def sqrt2(cls) -> "RootTwo":
        return cls(0, 1)

    @staticmethod
    def _coerce(other) -> "RootTwo":
        if isinstance(other, RootTwo):
            return other
        if isinstance(other, (int, Fraction)):
            return RootTwo(other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RootTwo(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return RootTwo(-self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RootTwo(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RootTwo(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conjugate(self) -> "RootTwo":
        return RootTwo(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 2 * self.b * self.b

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        nrm = o.norm()
        if nrm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 2)")
        num = self * o.conjugate()
        return RootTwo(num.a / nrm, num.b / nrm)

    def __rtruediv__(self, other):
        return RootTwo._coerce(other) / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_rational(self) -> bool:
        return self.b == 0

    def __repr__(self):
        return f"RootTwo({format_rational(self.a)}, {format_rational(self.b)})"

    def __str__(self):
        if self.b == 0:
            return format_rational(self.a)
        return f"{format_rational(self.a)}+{format_rational(self.b)}*sqrt2"
