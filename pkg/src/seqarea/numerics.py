"""Exact arithmetic in real quadratic fields Q(sqrt(d)).

Rational values are plain :class:`fractions.Fraction` (arbitrary-precision,
always reduced, positive denominator).  A :class:`QuadElem` is a number
``p + q*sqrt(d)`` with rational ``p``, ``q`` and a fixed squarefree radicand
``d >= 2``.  All operations are exact; no floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction


class RadicandMismatchError(ValueError):
    """Raised when combining elements of different quadratic fields."""


class IrrationalResidueError(ArithmeticError):
    """Raised when a value expected to be rational has a sqrt(d) component.

    Surfacing this instead of silently dropping the radical part turns an
    upstream algebra bug into a loud failure.
    """


def is_squarefree(d: int) -> bool:
    """True if no square > 1 divides d (d >= 1)."""
    if d < 1:
        return False
    i = 2
    while i * i <= d:
        if d % (i * i) == 0:
            return False
        i += 1
    return True


def rational_str(x: Fraction) -> str:
    """Render a rational as ``p/q``, or just ``p`` when the denominator is 1."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class QuadElem:
    """An element ``p + q*sqrt(d)`` of the field Q(sqrt(d)).

    ``d`` must be a squarefree integer >= 2, so the representation is unique
    and equality is componentwise.  Elements with different radicands never
    mix: combining them raises :class:`RadicandMismatchError`.

    >>> phi = QuadElem(Fraction(1, 2), Fraction(1, 2), 5)
    >>> phi * phi == phi + 1
    True
    """

    p: Fraction
    q: Fraction
    d: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", Fraction(self.p))
        object.__setattr__(self, "q", Fraction(self.q))
        if self.d < 2 or not is_squarefree(self.d):
            raise ValueError(f"radicand must be squarefree and >= 2, got {self.d}")

    @classmethod
    def from_rational(cls, value: int | Fraction, d: int) -> QuadElem:
        return cls(Fraction(value), Fraction(0), d)

    @classmethod
    def sqrt(cls, d: int) -> QuadElem:
        """The element sqrt(d) itself, i.e. ``0 + 1*sqrt(d)``."""
        return cls(Fraction(0), Fraction(1), d)

    def _coerce(self, other: object) -> QuadElem | None:
        if isinstance(other, QuadElem):
            if other.d != self.d:
                raise RadicandMismatchError(
                    f"cannot combine sqrt({self.d}) with sqrt({other.d})"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem.from_rational(other, self.d)
        return None

    def __add__(self, other: QuadElem | int | Fraction) -> QuadElem:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return QuadElem(self.p + rhs.p, self.q + rhs.q, self.d)

    __radd__ = __add__

    def __neg__(self) -> QuadElem:
        return QuadElem(-self.p, -self.q, self.d)

    def __sub__(self, other: QuadElem | int | Fraction) -> QuadElem:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return QuadElem(self.p - rhs.p, self.q - rhs.q, self.d)

    def __rsub__(self, other: QuadElem | int | Fraction) -> QuadElem:
        return (-self) + other

    def __mul__(self, other: QuadElem | int | Fraction) -> QuadElem:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return QuadElem(
            self.p * rhs.p + self.d * self.q * rhs.q,
            self.p * rhs.q + self.q * rhs.p,
            self.d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: QuadElem | int | Fraction) -> QuadElem:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.inv()

    def __rtruediv__(self, other: QuadElem | int | Fraction) -> QuadElem:
        return self.inv() * other

    def __pow__(self, exponent: int) -> QuadElem:
        """Integer power by repeated squaring; negative exponents via inv()."""
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inv() ** (-exponent)
        result = QuadElem.from_rational(1, self.d)
        base = self
        e = exponent
        while e > 0:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self.p) or bool(self.q)

    def conjugate(self) -> QuadElem:
        return QuadElem(self.p, -self.q, self.d)

    def norm(self) -> Fraction:
        """Field norm p^2 - d*q^2; zero only for the zero element."""
        return self.p * self.p - self.d * self.q * self.q

    def inv(self) -> QuadElem:
        """Multiplicative inverse, via the conjugate over the norm."""
        if not self:
            raise ZeroDivisionError(f"inverse of zero in Q(sqrt({self.d}))")
        n = self.norm()
        return QuadElem(self.p / n, -self.q / n, self.d)

    def to_rational(self) -> Fraction:
        """Extract the value as a Fraction; the sqrt(d) part must be zero."""
        if self.q != 0:
            raise IrrationalResidueError(
                f"nonzero sqrt({self.d}) component: {self}"
            )
        return self.p

    def __str__(self) -> str:
        return f"{self.p} + {self.q}*sqrt({self.d})"
