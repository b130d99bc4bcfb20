"""The cyclotomic field Q(w), w a primitive cube root of unity."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"not a rational: {x!r}")


class Eisenstein:
    """An element ``re + om*w`` with ``w**2 + w + 1 == 0``.

    Instances are immutable. Integers and fractions mix freely in arithmetic
    (they are the elements with ``om == 0``); a value with ``om == 0`` compares
    and hashes equal to the matching :class:`~fractions.Fraction`.
    """

    __slots__ = ("re", "om")

    def __init__(self, re=0, om=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "om", _frac(om))

    def __setattr__(self, name, value):
        raise AttributeError("Eisenstein is immutable")

    @classmethod
    def omega(cls) -> Eisenstein:
        return cls(0, 1)

    @staticmethod
    def _coerce(other):
        if isinstance(other, Eisenstein):
            return other
        if isinstance(other, (int, Fraction)):
            return Eisenstein(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Eisenstein(self.re + o.re, self.om + o.om)

    __radd__ = __add__

    def __neg__(self):
        return Eisenstein(-self.re, -self.om)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Eisenstein(self.re - o.re, self.om - o.om)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Eisenstein(self.re * other, self.om * other)
        if not isinstance(other, Eisenstein):
            return NotImplemented
        a, b, c, d = self.re, self.om, other.re, other.om
        bd = b * d
        # w^2 = -1 - w
        return Eisenstein(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def conjugate(self) -> Eisenstein:
        """Complex conjugation, which swaps w and w^2."""
        return Eisenstein(self.re - self.om, -self.om)

    def norm(self) -> Fraction:
        a, b = self.re, self.om
        return a * a - a * b + b * b

    def inverse(self) -> Eisenstein:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("Eisenstein division by zero")
        c = self.conjugate()
        return Eisenstein(c.re / n, c.om / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("Eisenstein division by zero")
            return Eisenstein(self.re / other, self.om / other)
        if not isinstance(other, Eisenstein):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = Eisenstein(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return bool(self.re) or bool(self.om)

    def __eq__(self, other):
        if isinstance(other, Eisenstein):
            return self.re == other.re and self.om == other.om
        if isinstance(other, (int, Fraction)):
            return self.om == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.om == 0:
            return hash(self.re)
        return hash((self.re, self.om))

    def is_rational(self) -> bool:
        return self.om == 0

    def __repr__(self):
        return f"Eisenstein({self.re}, {self.om})"

    def __str__(self):
        if self.om == 0:
            return str(self.re)
        om = {1: "w", -1: "-w"}.get(self.om, f"{self.om}*w")
        if self.re == 0:
            return om
        if om.startswith("-"):
            return f"{self.re}{om}"
        return f"{self.re}+{om}"


OMEGA = Eisenstein(0, 1)
