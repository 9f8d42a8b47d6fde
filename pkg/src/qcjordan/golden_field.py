"""Exact arithmetic in the golden ring Z[tau] and the field Q(sqrt5).

``GoldenInt(a, b)`` is ``a + b*tau`` with ``tau = (1 + sqrt5)/2``; ``GoldenRat``
holds ``(a + b*sqrt5)/d`` with integers kept in lowest terms.  Everything is
arbitrary precision and immutable.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import total_ordering
from typing import Union

__all__ = [
    "GoldenInt",
    "GoldenRat",
    "KappaScaledRat",
    "TAU",
    "KAPPA_SQ",
    "golden_mul",
    "star",
    "golden_sign",
    "kappa_compare",
    "parse_golden",
    "format_golden",
]

SQRT5 = math.sqrt(5.0)
PHI = (1.0 + SQRT5) / 2.0

Number = Union[int, Fraction, "GoldenInt", "GoldenRat"]


@total_ordering
class GoldenInt:
    """Element ``a + b*tau`` of Z[tau]."""

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0):
        object.__setattr__(self, "a", int(a))
        object.__setattr__(self, "b", int(b))

    def __setattr__(self, name, value):
        raise AttributeError("GoldenInt is immutable")

    @classmethod
    def coerce(cls, x) -> GoldenInt:
        if isinstance(x, GoldenInt):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        if isinstance(x, GoldenRat):
            return x.to_golden_int()
        raise TypeError(f"cannot coerce {type(x).__name__} to GoldenInt")

    def __iter__(self):
        yield self.a
        yield self.b

    def __repr__(self):
        return f"GoldenInt({self.a}, {self.b})"

    def __str__(self):
        return f"{self.a}{self.b:+d}*tau"

    def __hash__(self):
        return hash((self.a, self.b))

    def __eq__(self, other):
        if isinstance(other, GoldenInt):
            return self.a == other.a and self.b == other.b
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        if isinstance(other, (GoldenRat, Fraction)):
            return self.to_rat() == other
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, (int, GoldenInt, GoldenRat, Fraction)):
            return golden_sign(self.to_rat() - other) < 0
        return NotImplemented

    def __bool__(self):
        return bool(self.a or self.b)

    def __neg__(self):
        return GoldenInt(-self.a, -self.b)

    def __add__(self, other):
        if isinstance(other, GoldenInt):
            return GoldenInt(self.a + other.a, self.b + other.b)
        if isinstance(other, int):
            return GoldenInt(self.a + other, self.b)
        if isinstance(other, (GoldenRat, Fraction)):
            return self.to_rat() + other
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (GoldenInt, int)):
            return self + (-other)
        if isinstance(other, (GoldenRat, Fraction)):
            return self.to_rat() - other
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, GoldenInt):
            return golden_mul(self, other)
        if isinstance(other, int):
            return GoldenInt(self.a * other, self.b * other)
        if isinstance(other, (GoldenRat, Fraction)):
            return self.to_rat() * other
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers leave Z[tau]; use GoldenRat")
        result, base = GoldenInt(1, 0), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __float__(self):
        return self.a + self.b * PHI

    def star(self) -> GoldenInt:
        return star(self)

    def norm(self) -> int:
        """Field norm x * x^star = a^2 + ab - b^2."""
        return self.a * self.a + self.a * self.b - self.b * self.b

    def to_rat(self) -> GoldenRat:
        return GoldenRat._raw(2 * self.a + self.b, self.b, 2)

    def sign(self) -> int:
        return golden_sign(self.to_rat())


def golden_mul(x: GoldenInt, y: GoldenInt) -> GoldenInt:
    """Ring product using tau^2 = 1 + tau."""
    bd = x.b * y.b
    return GoldenInt(x.a * y.a + bd, x.a * y.b + x.b * y.a + bd)


def star(x: GoldenInt) -> GoldenInt:
    """Galois conjugation tau -> 1 - tau: ``(a + tau b)* = (a + b) - tau b``."""
    return GoldenInt(x.a + x.b, -x.b)


def _sign_ab(a: int, b: int) -> int:
    # sign of a + b*sqrt5
    if a >= 0 and b >= 0:
        return 1 if (a or b) else 0
    if a <= 0 and b <= 0:
        return -1
    lhs, rhs = a * a, 5 * b * b
    if a > 0:
        return 1 if lhs > rhs else -1
    return 1 if rhs > lhs else -1


@total_ordering
class GoldenRat:
    """Element ``p + q*sqrt5`` of Q(sqrt5), stored as ``(a + b*sqrt5)/d``."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, p=0, q=0):
        p, q = Fraction(p), Fraction(q)
        d = p.denominator * q.denominator // math.gcd(p.denominator, q.denominator)
        self._set(p.numerator * (d // p.denominator), q.numerator * (d // q.denominator), d)

    def _set(self, a, b, d):
        if d < 0:
            a, b, d = -a, -b, -d
        g = math.gcd(math.gcd(a, b), d)
        if g > 1:
            a, b, d = a // g, b // g, d // g
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "_b", b)
        object.__setattr__(self, "_d", d)

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> GoldenRat:
        obj = object.__new__(cls)
        obj._set(a, b, d)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("GoldenRat is immutable")

    @classmethod
    def coerce(cls, x) -> GoldenRat:
        if isinstance(x, GoldenRat):
            return x
        if isinstance(x, GoldenInt):
            return x.to_rat()
        if isinstance(x, (int, Fraction)):
            x = Fraction(x)
            return cls._raw(x.numerator, 0, x.denominator)
        raise TypeError(f"cannot coerce {type(x).__name__} to GoldenRat")

    @property
    def p(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def q(self) -> Fraction:
        return Fraction(self._b, self._d)

    @property
    def parts(self) -> tuple[int, int, int]:
        return self._a, self._b, self._d

    def __repr__(self):
        return f"GoldenRat({self.p!s}, {self.q!s})"

    def __str__(self):
        q = self.q
        return f"{self.p}{'-' if q < 0 else '+'}{abs(q)}*sqrt5"

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __eq__(self, other):
        if isinstance(other, GoldenRat):
            return self._a == other._a and self._b == other._b and self._d == other._d
        if isinstance(other, (int, Fraction, GoldenInt)):
            return self == GoldenRat.coerce(other)
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, (GoldenRat, GoldenInt, int, Fraction)):
            return golden_sign(self - other) < 0
        return NotImplemented

    def __bool__(self):
        return self._a != 0 or self._b != 0

    def __neg__(self):
        return GoldenRat._raw(-self._a, -self._b, self._d)

    def __abs__(self):
        return -self if golden_sign(self) < 0 else self

    def __add__(self, other):
        if not isinstance(other, GoldenRat):
            try:
                other = GoldenRat.coerce(other)
            except TypeError:
                return NotImplemented
        d1, d2 = self._d, other._d
        if d1 == d2:
            return GoldenRat._raw(self._a + other._a, self._b + other._b, d1)
        return GoldenRat._raw(self._a * d2 + other._a * d1, self._b * d2 + other._b * d1, d1 * d2)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GoldenRat):
            try:
                other = GoldenRat.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return GoldenRat._raw(self._a * other, self._b * other, self._d)
        if not isinstance(other, GoldenRat):
            try:
                other = GoldenRat.coerce(other)
            except TypeError:
                return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        return GoldenRat._raw(a1 * a2 + 5 * b1 * b2, a1 * b2 + a2 * b1, self._d * other._d)

    __rmul__ = __mul__

    def inverse(self) -> GoldenRat:
        n = self._a * self._a - 5 * self._b * self._b
        if n == 0:
            raise ZeroDivisionError("GoldenRat division by zero")
        # 1/(a + b s)/d = d (a - b s) / (a^2 - 5 b^2)
        return GoldenRat._raw(self._d * self._a, -self._d * self._b, n)

    def __truediv__(self, other):
        if not isinstance(other, GoldenRat):
            try:
                other = GoldenRat.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GoldenRat.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = GoldenRat._raw(1, 0, 1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __float__(self):
        if abs(self._a) < 2**52 and abs(self._b) < 2**52 and self._d < 2**52:
            return (self._a + self._b * SQRT5) / self._d
        return float(Fraction(self._a, self._d)) + float(Fraction(self._b, self._d)) * SQRT5

    def star(self) -> GoldenRat:
        return GoldenRat._raw(self._a, -self._b, self._d)

    def sign(self) -> int:
        return _sign_ab(self._a, self._b)

    def is_rational(self) -> bool:
        return self._b == 0

    def is_golden_int(self) -> bool:
        a, b, d = self._a, self._b, self._d
        return (2 * b) % d == 0 and (a - b) % d == 0

    def to_golden_int(self) -> GoldenInt:
        """Return the Z[tau] element equal to self, or raise ValueError."""
        if not self.is_golden_int():
            raise ValueError(f"{self} is not in Z[tau]")
        # (A + B s)/D = (A - B)/D + (2B/D) tau
        return GoldenInt((self._a - self._b) // self._d, (2 * self._b) // self._d)

    def floor(self) -> int:
        seed = math.floor(float(self))
        while GoldenRat._raw(seed * self._d, 0, self._d) > self:
            seed -= 1
        while GoldenRat._raw((seed + 1) * self._d, 0, self._d) <= self:
            seed += 1
        return seed

    def ceil(self) -> int:
        return -((-self).floor())


TAU = GoldenInt(0, 1)
ONE = GoldenRat._raw(1, 0, 1)
ZERO = GoldenRat._raw(0, 0, 1)
HALF = GoldenRat._raw(1, 0, 2)


def golden_sign(x) -> int:
    """Exact sign of a real number in Q(sqrt5)."""
    return GoldenRat.coerce(x).sign()


# kappa = tau / sqrt(4 + 2 tau); only kappa^2 lies in Q(sqrt5)
KAPPA_SQ = (TAU * TAU).to_rat() / GoldenRat.coerce(4 + 2 * TAU)
KAPPA_FLOAT = PHI / math.sqrt(4 + 2 * PHI)


class KappaScaledRat:
    """``base * kappa**kappa_power`` with ``kappa_power`` in {0, 1}."""

    __slots__ = ("base", "kappa_power")

    def __init__(self, base, kappa_power: int = 1):
        if kappa_power not in (0, 1):
            raise ValueError("kappa_power must be 0 or 1")
        self.base = GoldenRat.coerce(base)
        self.kappa_power = kappa_power

    def __repr__(self):
        return f"KappaScaledRat({self.base}, {self.kappa_power})"

    def __eq__(self, other):
        if isinstance(other, KappaScaledRat):
            return self.base == other.base and (
                self.kappa_power == other.kappa_power or not self.base
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.base, self.kappa_power if self.base else 0))

    def __mul__(self, other):
        if isinstance(other, KappaScaledRat):
            power = self.kappa_power + other.kappa_power
            base = self.base * other.base
            if power == 2:
                return KappaScaledRat(base * KAPPA_SQ, 0)
            return KappaScaledRat(base, power)
        try:
            return KappaScaledRat(self.base * GoldenRat.coerce(other), self.kappa_power)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __float__(self):
        return float(self.base) * (KAPPA_FLOAT if self.kappa_power else 1.0)

    def square(self) -> GoldenRat:
        return self.base * self.base * (KAPPA_SQ if self.kappa_power else ONE)


def kappa_compare(left, right: KappaScaledRat) -> int:
    """Exact ordering (-1, 0, +1) of ``left`` against ``right.base * kappa``."""
    left = GoldenRat.coerce(left)
    if right.kappa_power == 0:
        return golden_sign(left - right.base)
    sl, sr = golden_sign(left), golden_sign(right.base)
    if sl != sr:
        return 1 if sl > sr else -1
    if sl == 0:
        return 0
    c = golden_sign(left * left - right.base * right.base * KAPPA_SQ)
    return c if sl > 0 else -c


_LITERAL = re.compile(
    r"^(?P<p>[+-]?\d+(?:/\d+)?)?"
    r"(?:(?P<sign>[+-]?)(?P<q>\d+(?:/\d+)?)?\*?(?P<unit>tau|sqrt5))?$"
)


def parse_golden(text: str):
    """Parse ``a+b*tau`` into a GoldenInt and ``p+q*sqrt5`` into a GoldenRat.

    A bare rational literal parses as a GoldenRat; ``tau`` alone is allowed.
    """
    s = text.replace(" ", "")
    m = _LITERAL.match(s)
    if not s or not m or (m.group("p") is None and m.group("unit") is None):
        raise ValueError(f"bad golden literal: {text!r}")
    p_text, q_text = m.group("p"), m.group("q")
    if m.group("unit") and p_text is not None and not m.group("sign"):
        if q_text is not None:
            raise ValueError(f"missing sign before irrational part: {text!r}")
        p_text, q_text = None, p_text.lstrip("+")
        if q_text.startswith("-"):
            q_text = q_text[1:]
            m_sign = "-"
        else:
            m_sign = "+"
    else:
        m_sign = m.group("sign")
    p = Fraction(p_text or 0)
    q = Fraction(q_text or 1) if m.group("unit") else Fraction(0)
    if m_sign == "-":
        q = -q
    if m.group("unit") == "tau":
        if p.denominator != 1 or q.denominator != 1:
            raise ValueError(f"Z[tau] literal needs integers: {text!r}")
        return GoldenInt(int(p), int(q))
    return GoldenRat(p, q)


def format_golden(x) -> str:
    """Canonical text: ``a+b*tau`` for GoldenInt, ``p+q*sqrt5`` otherwise."""
    if isinstance(x, GoldenInt):
        return str(x)
    return str(GoldenRat.coerce(x))
