"""Univariate polynomials with exact rational coefficients.

A polynomial is stored as a dense tuple of ``fractions.Fraction`` values,
constant term first, with no trailing zeros; the zero polynomial is the
empty tuple.  ``Fraction`` keeps every coefficient fully reduced with a
positive denominator, so canonical form is automatic.  All arithmetic is
exact; nothing here ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Union

Rational = Union[int, Fraction]

__all__ = ["RationalPoly", "ZERO", "ONE", "X", "x_minus_one_pow"]


class RationalPoly:
    """Exact dense univariate polynomial.

    >>> p = RationalPoly([-1, 1]) ** 2       # (x - 1)^2
    >>> p.coeffs
    (Fraction(1, 1), Fraction(-2, 1), Fraction(1, 1))
    >>> p(Fraction(3, 2))
    Fraction(1, 4)
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "RationalPoly":
        return cls()

    @classmethod
    def constant(cls, c: Rational) -> "RationalPoly":
        return cls([c])

    @classmethod
    def x(cls) -> "RationalPoly":
        return cls([0, 1])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, i: int) -> Fraction:
        """Coefficient of x^i (zero beyond the stored degree)."""
        if i < 0:
            raise ValueError("exponents are non-negative")
        if i >= len(self._coeffs):
            return Fraction(0)
        return self._coeffs[i]

    def leading_coefficient(self) -> Fraction:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == RationalPoly([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __neg__(self) -> "RationalPoly":
        return RationalPoly([-c for c in self._coeffs])

    def __add__(self, other: object) -> "RationalPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPoly(out)

    __radd__ = __add__

    def __sub__(self, other: object) -> "RationalPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "RationalPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other: object) -> "RationalPoly":
        if isinstance(other, (int, Fraction)):
            return RationalPoly([c * other for c in self._coeffs])
        if not isinstance(other, RationalPoly):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return RationalPoly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RationalPoly":
        if k < 0:
            raise ValueError("negative powers of polynomials are undefined")
        result = RationalPoly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x: Rational) -> Fraction:
        """Evaluate by Horner's rule; exact."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"RationalPoly({list(self._coeffs)!r})"

    # Serialization: a polynomial travels as a common positive denominator D
    # (the lcm of all reduced coefficient denominators) plus the ascending
    # integer list D*coeffs.  Round-trips bit-exactly.

    def to_den_coeffs(self) -> tuple[int, list[int]]:
        den = lcm(*(c.denominator for c in self._coeffs)) if self._coeffs else 1
        ints = [int(c * den) for c in self._coeffs]
        return den, ints

    @classmethod
    def from_den_coeffs(cls, den: int, coeffs: Iterable[int]) -> "RationalPoly":
        if den < 1:
            raise ValueError(f"common denominator must be >= 1, got {den}")
        return cls([Fraction(c, den) for c in coeffs])


def _coerce(value: object) -> RationalPoly | None:
    if isinstance(value, RationalPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return RationalPoly([value])
    return None


ZERO = RationalPoly()
ONE = RationalPoly([1])
X = RationalPoly([0, 1])


def x_minus_one_pow(d: int) -> RationalPoly:
    """(x - 1)^d, expanded.  The recurring building block of every closed
    form in this package."""
    if d < 0:
        raise ValueError(f"exponent must be >= 0, got {d}")
    return RationalPoly([-1, 1]) ** d
