"""Exact Gaussian rationals.

Every coefficient in the package is a :class:`Scalar`, an element of
Q(i) stored as two reduced fractions.  Text form::

    S := R | R "+" R "*i" | R "*i"
    R := ["-"] INT ["/" INT]

so ``"-1/2+3/4*i"`` and ``"1+-2*i"`` are canonical.  On input ``"1-2*i"``
is accepted as a convenience spelling of ``"1+-2*i"``.
"""

from __future__ import annotations

from fractions import Fraction
import re

from .errors import DomainError, ScalarParseError

__all__ = ["Scalar", "ZERO", "ONE", "MINUS_ONE", "I", "scalar", "scalar_parse", "scalar_arith"]

_F0 = Fraction(0)


class Scalar:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def _raw(cls, re, im):
        s = object.__new__(cls)
        s.re = re
        s.im = im
        return s

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return Scalar._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return Scalar._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return Scalar._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b:
            if not d:
                return Scalar._raw(a * c, _F0)
            return Scalar._raw(a * c, a * d)
        if not d:
            return Scalar._raw(a * c, b * c)
        return Scalar._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self):
        a, b = self.re, self.im
        if not b:
            if not a:
                raise DomainError("division by zero")
            return Scalar._raw(1 / a, _F0)
        n = a * a + b * b
        return Scalar._raw(a / n, -b / n)

    def __truediv__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self):
        return Scalar._raw(self.re, -self.im)

    # -- comparison -------------------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if type(other) is not Scalar:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    @property
    def is_real(self):
        return not self.im

    def __repr__(self):
        return f"Scalar({str(self)!r})"

    def __str__(self):
        if not self.im:
            return _fmt(self.re)
        if not self.re:
            return _fmt(self.im) + "*i"
        return _fmt(self.re) + "+" + _fmt(self.im) + "*i"


def _fmt(q):
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _coerce(x):
    if type(x) is Scalar:
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar._raw(Fraction(x), _F0)
    if isinstance(x, complex):
        raise TypeError("floating point complex values are not exact; use Scalar")
    return NotImplemented


ZERO = Scalar(0)
ONE = Scalar(1)
MINUS_ONE = Scalar(-1)
I = Scalar(0, 1)


def scalar(x):
    """Coerce ``x`` (Scalar, int, Fraction or scalar text) to a Scalar."""
    if type(x) is Scalar:
        return x
    if isinstance(x, str):
        return scalar_parse(x)
    y = _coerce(x)
    if y is NotImplemented:
        raise TypeError(f"cannot convert {type(x).__name__} to Scalar")
    return y


_RAT = re.compile(rb"(-?)([0-9]+)(?:/([0-9]+))?")


def _parse_rational(data, pos, text):
    m = _RAT.match(data, pos)
    if m is None:
        raise ScalarParseError(text, pos, "expected a rational number")
    sign, num, den = m.groups()
    if den is not None and int(den) == 0:
        raise DomainError(f"zero denominator in scalar {text!r} at byte {m.start(3)}")
    value = Fraction(int(num), int(den) if den is not None else 1)
    return (-value if sign else value), m.end()


def scalar_parse(text):
    """Parse scalar text into its canonical :class:`Scalar`."""
    data = text.encode("utf-8")
    re_part, pos = _parse_rational(data, 0, text)
    if pos == len(data):
        return Scalar(re_part)
    if data[pos:] == b"*i":
        return Scalar(0, re_part)
    if data[pos:pos + 1] not in (b"+", b"-"):
        raise ScalarParseError(text, pos, "expected '+', '*i' or end of input")
    negate = data[pos:pos + 1] == b"-"
    start = pos + 1
    if negate and data[start:start + 1] == b"-":
        raise ScalarParseError(text, start, "unexpected '-'")
    im_part, pos = _parse_rational(data, start, text)
    if data[pos:] != b"*i":
        raise ScalarParseError(text, pos, "expected '*i' after imaginary part")
    return Scalar(re_part, -im_part if negate else im_part)


def scalar_arith(a, b, op):
    """Exact ``a op b`` for ``op`` in ``{"add", "sub", "mul", "div"}``."""
    a, b = scalar(a), scalar(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")
