"""Exact scalars: rationals, Gaussian rationals, rising factorials, binomials.

Rationals are ``gmpy2.mpq`` values, which are kept in lowest terms with a
positive denominator after every operation.  :class:`GaussianRational` pairs
two of them into an element of Q(i).  Floats are rejected everywhere.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Integral

from gmpy2 import mpq, mpz

__all__ = [
    "Rational",
    "GaussianRational",
    "I",
    "ONE",
    "ZERO",
    "as_gaussian",
    "parse_rational",
    "format_rational",
    "pochhammer",
    "factorial",
    "binomial",
]

Rational = mpq

_MPQ = type(mpq(0))
_RATIONAL_TEXT = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Rational:
    """Parse ``"p/q"`` or ``"p"`` (optional leading ``-``) into a rational."""
    if not isinstance(text, str):
        raise TypeError(f"expected a rational string, got {type(text).__name__}")
    m = _RATIONAL_TEXT.match(text.strip())
    if m is None:
        raise ValueError(f"malformed rational {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return mpq(int(num), int(den) if den is not None else 1)


def format_rational(value) -> str:
    return str(_to_rational(value))


def _to_rational(value) -> Rational:
    if isinstance(value, _MPQ):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (Integral, Fraction)):
        return mpq(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, type(mpz(0))):
        return mpq(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


class GaussianRational:
    """An element ``re + im*i`` of Q(i) with exact rational parts.

    Instances are immutable and hashable; a value with zero imaginary part
    hashes and compares like the corresponding rational.
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            if im != 0:
                raise TypeError("imaginary part given twice")
            re, im = re._re, re._im
        object.__setattr__(self, "_re", _to_rational(re))
        object.__setattr__(self, "_im", _to_rational(im))

    @classmethod
    def _make(cls, re, im):
        obj = object.__new__(cls)
        object.__setattr__(obj, "_re", re)
        object.__setattr__(obj, "_im", im)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        return (GaussianRational, (str(self._re), str(self._im)))

    @property
    def re(self) -> Rational:
        return self._re

    @property
    def im(self) -> Rational:
        return self._im

    # -- predicates ---------------------------------------------------------

    def is_real(self) -> bool:
        return self._im == 0

    def is_zero(self) -> bool:
        return self._re == 0 and self._im == 0

    def is_integer(self) -> bool:
        return self._im == 0 and self._re.denominator == 1

    def is_nonpositive_integer(self) -> bool:
        return self.is_integer() and self._re <= 0

    def is_negative_integer(self) -> bool:
        return self.is_integer() and self._re < 0

    # -- conversions --------------------------------------------------------

    def conjugate(self) -> GaussianRational:
        return GaussianRational._make(self._re, -self._im)

    def to_json(self) -> list[str]:
        return [str(self._re), str(self._im)]

    @classmethod
    def from_json(cls, data) -> GaussianRational:
        """Accept ``[re, im]`` or a bare rational string."""
        if isinstance(data, str):
            return cls._make(parse_rational(data), mpq(0))
        if isinstance(data, (list, tuple)) and len(data) == 2:
            return cls._make(parse_rational(data[0]), parse_rational(data[1]))
        raise ValueError(f"expected [re, im] or a rational string, got {data!r}")

    def __int__(self):
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        return int(self._re)

    def __repr__(self):
        if self._im == 0:
            return f"GaussianRational('{self._re}')"
        return f"GaussianRational('{self._re}', '{self._im}')"

    def __str__(self):
        if self._im == 0:
            return str(self._re)
        if self._re == 0:
            return f"{self._im}i"
        sign = "-" if self._im < 0 else "+"
        return f"{self._re}{sign}{abs(self._im)}i"

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self._re == other._re and self._im == other._im
        try:
            other = _to_rational(other)
        except TypeError:
            return NotImplemented
        return self._im == 0 and self._re == other

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational._make(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational._make(self._re - other._re, self._im - other._im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self._re, self._im, other._re, other._im
        if b == 0:
            if d == 0:
                return GaussianRational._make(a * c, b)
            return GaussianRational._make(a * c, a * d)
        if d == 0:
            return GaussianRational._make(a * c, b * c)
        return GaussianRational._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        c, d = other._re, other._im
        if d == 0:
            if c == 0:
                raise ZeroDivisionError("division by zero in Q(i)")
            return GaussianRational._make(self._re / c, self._im / c)
        norm = c * c + d * d
        a, b = self._re, self._im
        return GaussianRational._make((a * c + b * d) / norm, (b * c - a * d) / norm)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self):
        return GaussianRational._make(-self._re, -self._im)

    def __pos__(self):
        return self

    def __pow__(self, exponent):
        if not isinstance(exponent, Integral):
            return NotImplemented
        exponent = int(exponent)
        if exponent < 0:
            return ONE / (self ** -exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result


def _coerce(value):
    if isinstance(value, GaussianRational):
        return value
    try:
        return GaussianRational._make(_to_rational(value), mpq(0))
    except TypeError:
        return NotImplemented


def as_gaussian(value) -> GaussianRational:
    """Convert ints, rationals, rational strings and ``[re, im]`` pairs."""
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (list, tuple)):
        return GaussianRational.from_json(list(value))
    return GaussianRational._make(_to_rational(value), mpq(0))


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


@lru_cache(maxsize=1 << 16)
def _pochhammer(gamma: GaussianRational, k: int) -> GaussianRational:
    if k == 0:
        return ONE
    return _pochhammer(gamma, k - 1) * (gamma + (k - 1))


def pochhammer(gamma, k: int) -> GaussianRational:
    """Rising factorial ``gamma (gamma+1) ... (gamma+k-1)``; 1 when k = 0."""
    if k < 0:
        raise ValueError("pochhammer index must be nonnegative")
    gamma = as_gaussian(gamma)
    # Recursion depth of the memoized path is k.
    if k > 256:
        result = ONE
        for j in range(k):
            result = result * (gamma + j)
        return result
    return _pochhammer(gamma, k)


def factorial(n: int) -> Rational:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    return mpq(math.factorial(n))


def binomial(n: int, k: int) -> Rational:
    """Exact ``n! / (k! (n-k)!)`` for ``0 <= k <= n``."""
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be nonnegative")
    if k > n:
        raise ValueError(f"binomial({n}, {k}) requires k <= n")
    return mpq(math.comb(n, k))
