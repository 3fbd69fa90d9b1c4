"""Exact rational and quadratic-field arithmetic.

Rationals are plain :class:`fractions.Fraction` values, which are kept in
lowest terms with a positive denominator after every operation.  This
module adds a strict text grammar for them and a small :class:`Quad` type
for elements ``p + q*sqrt(D)`` of a quadratic extension of the rationals.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

from .errors import ExtractionError, ParseError, RadicandMismatchError

Rat = Fraction
RatLike = Union[int, Fraction, str]

_RAT_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*")
_QUAD_RE = re.compile(
    r"\s*(?P<p>[+-]?\d+(?:/\d+)?)\s*(?P<sign>[+-])\s*(?P<q>\d+(?:/\d+)?)\s*\*\s*"
    r"sqrt\(\s*(?P<D>[+-]?\d+(?:/\d+)?)\s*\)\s*"
)


def parse_rat(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer. Anything else (decimals, ``inf``) is rejected."""
    m = _RAT_RE.fullmatch(text)
    if m is None:
        raise ParseError(f"not a rational number: {text!r} (expected 'p/q' or an integer)")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def as_rat(x: RatLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational number")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        return parse_rat(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def format_rat(x: Fraction) -> str:
    return str(x)


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of ``x`` if it is the square of a rational, else None."""
    if x < 0:
        return None
    rn, rd = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def is_rational_square(x: Fraction) -> bool:
    return rational_sqrt(x) is not None


def _sqrt_fraction(x: Fraction, digits: int = 40) -> Fraction:
    # floor(sqrt(x) * 10**digits) / 10**digits; x >= 0
    scale = 10 ** digits
    return Fraction(math.isqrt(x.numerator * scale * scale // x.denominator), scale)


@dataclass(frozen=True)
class Quad:
    """The number ``rational + radical*sqrt(radicand)``.

    Values are only combinable when their radicands are equal.  Nothing
    requires the radicand to be a non-square or positive, so the same type
    covers complex-conjugate pairs and the split case where ``sqrt(D)`` is
    itself rational.
    """

    rational: Fraction
    radical: Fraction
    radicand: Fraction

    def __post_init__(self):
        for name in ("rational", "radical", "radicand"):
            object.__setattr__(self, name, as_rat(getattr(self, name)))

    @classmethod
    def from_rat(cls, x: RatLike, radicand: RatLike) -> Quad:
        return cls(as_rat(x), Fraction(0), as_rat(radicand))

    @classmethod
    def sqrt(cls, radicand: RatLike) -> Quad:
        return cls(Fraction(0), Fraction(1), as_rat(radicand))

    @classmethod
    def parse(cls, text: str) -> Quad:
        """Parse ``"p + q*sqrt(D)"`` (either sign), or a bare rational over radicand 0."""
        m = _QUAD_RE.fullmatch(text)
        if m is None:
            try:
                return cls(parse_rat(text), 0, 0)
            except ParseError:
                raise ParseError(f"not a quadratic number: {text!r}") from None
        q = parse_rat(m.group("q"))
        if m.group("sign") == "-":
            q = -q
        return cls(parse_rat(m.group("p")), q, parse_rat(m.group("D")))

    def __str__(self) -> str:
        sign = "-" if self.radical < 0 else "+"
        return f"{self.rational} {sign} {abs(self.radical)}*sqrt({self.radicand})"

    def _coerce(self, other) -> Quad:
        if isinstance(other, Quad):
            if other.radicand != self.radicand:
                raise RadicandMismatchError(
                    f"cannot combine elements over sqrt({self.radicand}) and sqrt({other.radicand})"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Quad(Fraction(other), Fraction(0), self.radicand)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Quad(self.rational + o.rational, self.radical + o.radical, self.radicand)

    __radd__ = __add__

    def __neg__(self) -> Quad:
        return Quad(-self.rational, -self.radical, self.radicand)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Quad(self.rational - o.rational, self.radical - o.radical, self.radicand)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p1, q1, p2, q2 = self.rational, self.radical, o.rational, o.radical
        return Quad(p1 * p2 + q1 * q2 * self.radicand, p1 * q2 + p2 * q1, self.radicand)

    __rmul__ = __mul__

    def conjugate(self) -> Quad:
        return Quad(self.rational, -self.radical, self.radicand)

    def norm(self) -> Fraction:
        return self.rational ** 2 - self.radical ** 2 * self.radicand

    def inverse(self) -> Quad:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError(f"{self} has zero norm and no inverse")
        c = self.conjugate()
        return Quad(c.rational / n, c.radical / n, self.radicand)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int) -> Quad:
        if not isinstance(n, int) or isinstance(n, bool):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = Quad(Fraction(1), Fraction(0), self.radicand)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_rational(self) -> bool:
        return self.radical == 0 or is_rational_square(self.radicand)

    def is_zero(self) -> bool:
        """Zero as a value; differs from both parts being zero when sqrt(D) is rational."""
        if self.is_rational():
            return self.to_rat() == 0
        return self.rational == 0 and self.radical == 0

    def to_rat(self) -> Fraction:
        """Exact rational value; raises :class:`ExtractionError` on an irrational residue."""
        if self.radical == 0:
            return self.rational
        root = rational_sqrt(self.radicand)
        if root is None:
            raise ExtractionError(f"{self} is irrational (residue {self.radical}*sqrt({self.radicand}))")
        return self.rational + self.radical * root

    def __float__(self) -> float:
        if self.radical == 0:
            return float(self.rational)
        if self.radicand < 0:
            raise ValueError(f"{self} is not real")
        root = _sqrt_fraction(self.radicand)
        return float(self.rational + self.radical * root)

    def simplified(self) -> Quad:
        """Equal value over a radicand with small square factors pulled out.

        ``1/2*sqrt(32)`` becomes ``2*sqrt(2)``.  Rational radicands are first
        made integral; factors are only searched up to 997, which is enough
        for readable output but not a squarefree guarantee.
        """
        if self.radicand == 0 or self.radical == 0:
            return self
        u, v = self.radicand.numerator, self.radicand.denominator
        # sqrt(u/v) = sqrt(u*v)/v
        m = u * v
        coeff = Fraction(1, v)
        sign = -1 if m < 0 else 1
        m = abs(m)
        root = math.isqrt(m)
        if root * root == m:
            coeff *= root
            m = 1
        else:
            for p in _SMALL_PRIMES:
                pp = p * p
                if pp > m:
                    break
                while m % pp == 0:
                    m //= pp
                    coeff *= p
            root = math.isqrt(m)
            if root * root == m:
                coeff *= root
                m = 1
        return Quad(self.rational, self.radical * coeff, sign * m)


def quad_mul(x: Quad, y: Quad) -> Quad:
    return x * y


def quad_pow(x: Quad, n: int) -> Quad:
    if n < 0:
        raise ValueError("quad_pow takes a nonnegative exponent")
    return x ** n


def quad_extract_rat(x: Quad) -> Fraction:
    return x.to_rat()


def _primes(limit: int) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, flag in enumerate(sieve) if flag]


_SMALL_PRIMES = _primes(997)
