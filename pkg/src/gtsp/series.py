"""Truncated Laurent series in one infinitesimal with exact rational coefficients.

Used to evaluate products of Gelfand-Tsetlin coefficients whose factors are
singular at a special tableau but whose product is not: every entry is
replaced by ``value + eps * direction`` and the eps -> 0 limit is read off.
"""

from __future__ import annotations

from fractions import Fraction

PRECISION = 10


class Series:
    """sum(coeffs[i] * eps**(val + i)) + O(eps**(val + len(coeffs)))."""

    __slots__ = ("val", "coeffs")

    def __init__(self, val: int, coeffs):
        coeffs = [Fraction(c) for c in coeffs][:PRECISION]
        coeffs += [Fraction(0)] * (PRECISION - len(coeffs))
        shift = next((i for i, c in enumerate(coeffs) if c), None)
        if shift is None:
            self.val, self.coeffs = val + PRECISION, (Fraction(0),) * PRECISION
        else:
            self.val = val + shift
            self.coeffs = tuple(coeffs[shift:]) + (Fraction(0),) * shift

    @classmethod
    def linear(cls, value, slope) -> "Series":
        return cls(0, [value, slope])

    @staticmethod
    def _lift(x) -> "Series":
        return x if isinstance(x, Series) else Series(0, [x])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __neg__(self) -> "Series":
        return Series(self.val, [-c for c in self.coeffs])

    def _bound(self) -> int:
        return self.val if self.is_zero() else self.val + PRECISION

    def __add__(self, other) -> "Series":
        other = self._lift(other)
        hi = min(self._bound(), other._bound())
        live = [s for s in (self, other) if not s.is_zero()]
        if not live or min(s.val for s in live) >= hi:
            return Series(hi - PRECISION, [])
        lo = min(s.val for s in live)
        out = [Fraction(0)] * (hi - lo)
        for s in live:
            for i, c in enumerate(s.coeffs):
                pos = s.val + i - lo
                if pos < len(out):
                    out[pos] += c
        return Series(lo, out)

    __radd__ = __add__

    def __sub__(self, other) -> "Series":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Series":
        return self._lift(other) - self

    def __mul__(self, other) -> "Series":
        other = self._lift(other)
        if self.is_zero() or other.is_zero():
            bound = (self._bound() if self.is_zero() else self.val) + (other._bound() if other.is_zero() else other.val)
            return Series(bound - PRECISION, [])
        out = [Fraction(0)] * PRECISION
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(PRECISION - i):
                    out[i + j] += a * other.coeffs[j]
        return Series(self.val + other.val, out)

    __rmul__ = __mul__

    def inverse(self) -> "Series":
        if self.is_zero():
            raise ZeroDivisionError("series vanishes to working precision")
        a0 = self.coeffs[0]
        inv = [Fraction(0)] * PRECISION
        inv[0] = 1 / a0
        for m in range(1, PRECISION):
            inv[m] = -sum(self.coeffs[j] * inv[m - j] for j in range(1, m + 1)) / a0
        return Series(-self.val, inv)

    def __truediv__(self, other) -> "Series":
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other) -> "Series":
        return self._lift(other) * self.inverse()

    def __pow__(self, e: int) -> "Series":
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers are supported")
        out = Series(0, [1])
        for _ in range(e):
            out = out * self
        return out

    def limit(self) -> Fraction:
        """Value at eps = 0; raises if the series has a pole."""
        if self.is_zero():
            if self.val <= 0:
                raise ArithmeticError("precision exhausted before the constant term")
            return Fraction(0)
        if self.val < 0:
            raise ZeroDivisionError(f"pole of order {-self.val}")
        return self.coeffs[0] if self.val == 0 else Fraction(0)

    def __repr__(self) -> str:
        return f"Series(val={self.val}, coeffs={[str(c) for c in self.coeffs[:4]]}...)"
