"""Terms, partial sums and limits of the elementary progressions.

Index conventions differ between families and are fixed per function:

* arithmetic and geometric: terms are 1-indexed, sums cover the first n terms;
* arithmetic-geometric (AGP, term ``(a + k d) r**k``): 0-indexed, ``agp_sum``
  covers ``k = 0..n`` inclusive;
* geometric-arithmetic (GAP, term ``a r**k + k d``): 0-indexed, ``gap_sum``
  covers the first n terms ``k = 0..n-1``;
* the first-order recurrences ``rec1`` (``a_n = a_{n-1} r + d``) and
  ``rec2`` (``a_n = (a_{n-1} + d) r``) start at ``a_0 = a``.

Every ratio formula has an explicit ``r == 1`` branch.  ``0**0`` is 1.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivergenceError
from .numerics import RatLike, as_rat


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def arith_term(a: RatLike, d: RatLike, n: int) -> Fraction:
    _require(n >= 1, "arithmetic terms are 1-indexed")
    return as_rat(a) + (n - 1) * as_rat(d)


def arith_sum(a: RatLike, d: RatLike, n: int) -> Fraction:
    _require(n >= 1, "n must be positive")
    a, d = as_rat(a), as_rat(d)
    return Fraction(n, 2) * (2 * a + (n - 1) * d)


def geo_term(a: RatLike, r: RatLike, n: int) -> Fraction:
    _require(n >= 1, "geometric terms are 1-indexed")
    return as_rat(a) * as_rat(r) ** (n - 1)


def geo_sum(a: RatLike, r: RatLike, n: int) -> Fraction:
    _require(n >= 1, "n must be positive")
    a, r = as_rat(a), as_rat(r)
    if r == 1:
        return n * a
    return a * (1 - r ** n) / (1 - r)


def geo_limit(a: RatLike, r: RatLike) -> Fraction:
    a, r = as_rat(a), as_rat(r)
    if abs(r) >= 1:
        raise DivergenceError(f"geometric series with ratio {r} diverges (need |r| < 1)")
    return a / (1 - r)


def agp_term(a: RatLike, d: RatLike, r: RatLike, k: int) -> Fraction:
    _require(k >= 0, "k must be nonnegative")
    a, d, r = as_rat(a), as_rat(d), as_rat(r)
    return (a + k * d) * r ** k


def agp_sum(a: RatLike, d: RatLike, r: RatLike, n: int) -> Fraction:
    """Sum of ``(a + k d) r**k`` over ``k = 0..n`` (n + 1 terms)."""
    _require(n >= 0, "n must be nonnegative")
    a, d, r = as_rat(a), as_rat(d), as_rat(r)
    if r == 1:
        return (n + 1) * a + d * Fraction(n * (n + 1), 2)
    return (a - (a + n * d) * r ** (n + 1)) / (1 - r) + d * r * (1 - r ** n) / (1 - r) ** 2


def agp_sum_limit(a: RatLike, d: RatLike, r: RatLike) -> Fraction:
    a, d, r = as_rat(a), as_rat(d), as_rat(r)
    if abs(r) >= 1:
        raise DivergenceError(f"AGP partial sums diverge for r = {r} (need |r| < 1)")
    return a / (1 - r) + d * r / (1 - r) ** 2


def gap_term(a: RatLike, r: RatLike, d: RatLike, k: int) -> Fraction:
    _require(k >= 0, "k must be nonnegative")
    a, r, d = as_rat(a), as_rat(r), as_rat(d)
    return a * r ** k + k * d


def gap_sum(a: RatLike, r: RatLike, d: RatLike, n: int) -> Fraction:
    """Sum of the first n GAP terms, ``k = 0..n-1``."""
    _require(n >= 1, "n must be positive")
    a, r, d = as_rat(a), as_rat(r), as_rat(d)
    arithmetic_part = Fraction(n * (n - 1), 2) * d
    if r == 1:
        return n * a + arithmetic_part
    return a * (1 - r ** n) / (1 - r) + arithmetic_part


def rec1_term(a: RatLike, r: RatLike, d: RatLike, n: int) -> Fraction:
    """Closed form of ``a_0 = a, a_n = a_{n-1} r + d``."""
    _require(n >= 0, "n must be nonnegative")
    a, r, d = as_rat(a), as_rat(r), as_rat(d)
    if r == 1:
        return a + n * d
    return a * r ** n + d * (1 - r ** n) / (1 - r)


def rec2_term(a: RatLike, r: RatLike, d: RatLike, n: int) -> Fraction:
    """Closed form of ``a_0 = a, a_n = (a_{n-1} + d) r``."""
    _require(n >= 0, "n must be nonnegative")
    a, r, d = as_rat(a), as_rat(r), as_rat(d)
    if r == 1:
        return a + n * d
    return a * r ** n + d * r * (1 - r ** n) / (1 - r)


class Kind(enum.Enum):
    ARITHMETIC = "arithmetic"
    GEOMETRIC = "geometric"
    AGP = "agp"
    GAP = "gap"
    REC1 = "rec1"
    REC2 = "rec2"


@dataclass(frozen=True)
class Summary:
    """Terms of a progression alongside a directly computed and a closed-form value.

    For the summable kinds ``direct`` is the term-by-term sum; for the
    recurrences it is the last iterated term.
    """

    kind: Kind
    terms: list[Fraction]
    direct: Fraction
    closed: Fraction

    @property
    def consistent(self) -> bool:
        return self.direct == self.closed


@dataclass(frozen=True)
class ProgressionSpec:
    kind: Kind
    a: Fraction
    d: Fraction = Fraction(0)
    r: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        for name in ("a", "d", "r"):
            object.__setattr__(self, name, as_rat(getattr(self, name)))

    def terms(self, n: int) -> list[Fraction]:
        """The terms that ``summary(n)`` works with, in each kind's own indexing."""
        a, d, r = self.a, self.d, self.r
        if self.kind is Kind.ARITHMETIC:
            return [arith_term(a, d, i) for i in range(1, n + 1)]
        if self.kind is Kind.GEOMETRIC:
            return [geo_term(a, r, i) for i in range(1, n + 1)]
        if self.kind is Kind.AGP:
            return [agp_term(a, d, r, k) for k in range(n + 1)]
        if self.kind is Kind.GAP:
            return [gap_term(a, r, d, k) for k in range(n)]
        out = [a]
        for _ in range(n):
            prev = out[-1]
            out.append(prev * r + d if self.kind is Kind.REC1 else (prev + d) * r)
        return out

    def closed(self, n: int) -> Fraction:
        a, d, r = self.a, self.d, self.r
        return {
            Kind.ARITHMETIC: lambda: arith_sum(a, d, n),
            Kind.GEOMETRIC: lambda: geo_sum(a, r, n),
            Kind.AGP: lambda: agp_sum(a, d, r, n),
            Kind.GAP: lambda: gap_sum(a, r, d, n),
            Kind.REC1: lambda: rec1_term(a, r, d, n),
            Kind.REC2: lambda: rec2_term(a, r, d, n),
        }[self.kind]()

    def summary(self, n: int) -> Summary:
        terms = self.terms(n)
        if self.kind in (Kind.REC1, Kind.REC2):
            direct = terms[-1]
        else:
            direct = sum(terms, Fraction(0))
        return Summary(self.kind, terms, direct, self.closed(n))
