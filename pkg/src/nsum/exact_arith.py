"""Exact rationals extended by two signed infinities.

The extension follows the formal rules used by the subtree-sum recursion:

    1/0 = +inf,    r / (+-inf) = 0,    r +- inf = +-inf

``+inf + -inf`` has no value and raises :class:`IndeterminateSum`.
Finite values are backed by :class:`fractions.Fraction`, so they are always
reduced with a positive denominator and never overflow.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .errors import IndeterminateSum

__all__ = [
    "ExtRat",
    "POS_INF",
    "NEG_INF",
    "ZERO",
    "ONE",
    "add",
    "one_minus_inv",
    "parse_extrat",
]


class ExtRat:
    """An immutable element of Q u {+inf, -inf}."""

    __slots__ = ("_value", "_sign")

    def __init__(self, value=0, _sign=0):
        # _sign is +1/-1 for the infinities, 0 for finite values
        if _sign:
            self._value = None
        elif isinstance(value, Fraction):
            self._value = value
        elif isinstance(value, (int, Rational)):
            self._value = Fraction(value)
        elif isinstance(value, str):
            self._value = Fraction(value)
        else:
            raise TypeError(f"cannot build ExtRat from {type(value).__name__}")
        self._sign = _sign

    @classmethod
    def pos_inf(cls) -> ExtRat:
        return POS_INF

    @classmethod
    def neg_inf(cls) -> ExtRat:
        return NEG_INF

    @property
    def is_finite(self) -> bool:
        return self._sign == 0

    @property
    def is_pos_inf(self) -> bool:
        return self._sign > 0

    @property
    def is_neg_inf(self) -> bool:
        return self._sign < 0

    @property
    def fraction(self) -> Fraction:
        """The finite value; raises ValueError on an infinity."""
        if self._sign:
            raise ValueError(f"{self} has no finite value")
        return self._value

    def __add__(self, other):
        if not isinstance(other, ExtRat):
            if isinstance(other, (int, Rational)):
                other = ExtRat(other)
            else:
                return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        if self._sign:
            return NEG_INF if self._sign > 0 else POS_INF
        return ExtRat(-self._value)

    def __eq__(self, other):
        if isinstance(other, ExtRat):
            return self._sign == other._sign and self._value == other._value
        if isinstance(other, (int, Rational)):
            return self._sign == 0 and self._value == other
        return NotImplemented

    def __hash__(self):
        if self._sign:
            return hash(("ExtRat-inf", self._sign))
        return hash(self._value)

    def __str__(self):
        if self._sign > 0:
            return "+inf"
        if self._sign < 0:
            return "-inf"
        return str(self._value)

    def __repr__(self):
        return f"ExtRat({str(self)!r})"


POS_INF = ExtRat(_sign=1)
NEG_INF = ExtRat(_sign=-1)
ZERO = ExtRat(0)
ONE = ExtRat(1)


def add(a: ExtRat, b: ExtRat) -> ExtRat:
    if a._sign or b._sign:
        if a._sign and b._sign and a._sign != b._sign:
            raise IndeterminateSum(f"{a} + {b}")
        return a if a._sign else b
    return ExtRat(a._value + b._value)


def one_minus_inv(s: ExtRat) -> ExtRat:
    """Return ``(1 - s)^-1``; total on ExtRat (1 -> +inf, +-inf -> 0)."""
    if s._sign:
        return ZERO
    d = 1 - s._value
    if d == 0:
        return POS_INF
    return ExtRat(1 / d)


def parse_extrat(text: str) -> ExtRat:
    """Inverse of ``str``: accepts ``p/q``, ``p``, ``+inf``, ``-inf``."""
    t = text.strip()
    if t in ("+inf", "inf"):
        return POS_INF
    if t == "-inf":
        return NEG_INF
    return ExtRat(Fraction(t))
