"""Reduction of the AGP full-history recurrence to second order, and back.

The recurrence ``x_{n+1} = sum_{k=0..n} (a + k d) r**k x_{n-k}`` collapses to
``x_{n+1} = P x_n + Q x_{n-1}`` for n >= 2 with

    P = a + 2r,   Q = -(r**2 + (a - d) r),   x_1 = a x_0,   x_2 = B x_0,
    B = a**2 + (a + d) r.

Note that the second-order relation does not link x_2 to x_1 and x_0.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import InconsistentInitialDataError, InvalidRatioError, UnderdeterminedError
from .numerics import Quad, RatLike, as_rat, is_rational_square


@dataclass(frozen=True)
class AgpParams:
    a: Fraction
    d: Fraction
    r: Fraction
    x0: Fraction

    def __post_init__(self):
        for name in ("a", "d", "r", "x0"):
            object.__setattr__(self, name, as_rat(getattr(self, name)))

    def coefficient(self, k: int) -> Fraction:
        """Weight ``(a + k d) r**k`` of ``x_{n-k}`` in the full-history sum."""
        return (self.a + k * self.d) * self.r ** k

    def __str__(self) -> str:
        return f"a={self.a} d={self.d} r={self.r} x0={self.x0}"


@dataclass(frozen=True)
class SecondOrder:
    P: Fraction
    Q: Fraction
    B: Fraction
    x1: Fraction
    x2: Fraction

    def __post_init__(self):
        for name in ("P", "Q", "B", "x1", "x2"):
            object.__setattr__(self, name, as_rat(getattr(self, name)))


class RootClass(enum.Enum):
    DISTINCT_REAL = "distinct_real"
    REPEATED = "repeated"
    COMPLEX_PAIR = "complex_pair"
    RATIONAL_ROOTS = "rational_roots"


@dataclass(frozen=True)
class EigenStructure:
    delta: Fraction
    lambda1: Quad
    lambda2: Quad
    kind: RootClass


def reduce(p: AgpParams) -> SecondOrder:
    a, d, r, x0 = p.a, p.d, p.r, p.x0
    B = a * a + (a + d) * r
    return SecondOrder(P=a + 2 * r, Q=-(r * r + (a - d) * r), B=B, x1=a * x0, x2=B * x0)


def discriminant(s: SecondOrder) -> Fraction:
    return s.P * s.P + 4 * s.Q


def classify(delta: Fraction) -> RootClass:
    if delta == 0:
        return RootClass.REPEATED
    if delta < 0:
        return RootClass.COMPLEX_PAIR
    if is_rational_square(delta):
        return RootClass.RATIONAL_ROOTS
    return RootClass.DISTINCT_REAL


def eigenvalues(s: SecondOrder) -> EigenStructure:
    """Roots of ``t**2 - P t - Q`` as elements over ``sqrt(P**2 + 4Q)``; lambda1 takes +."""
    delta = discriminant(s)
    half = Fraction(1, 2)
    lam1 = Quad(s.P * half, half, delta)
    lam2 = Quad(s.P * half, -half, delta)
    return EigenStructure(delta, lam1, lam2, classify(delta))


@dataclass(frozen=True)
class AgpFamily:
    """All (a, d) that reduce to a given (P, Q), parametrised by r != 0."""

    P: Fraction
    Q: Fraction

    def a(self, r: RatLike) -> Fraction:
        return self.P - 2 * as_rat(r)

    def d(self, r: RatLike) -> Fraction:
        r = as_rat(r)
        if r == 0:
            raise InvalidRatioError("the family is undefined at r = 0")
        return self.a(r) + (self.Q + r * r) / r

    def __call__(self, r: RatLike) -> tuple[Fraction, Fraction]:
        return self.a(r), self.d(r)

    def __str__(self) -> str:
        return f"r -> (a, d) = ({self.P} - 2r, {self.P} - 2r + ({self.Q} + r^2)/r)"


def identify_family(P: RatLike, Q: RatLike) -> AgpFamily:
    return AgpFamily(as_rat(P), as_rat(Q))


def identify(P: RatLike, Q: RatLike, x1: RatLike, x2: RatLike, r: RatLike) -> AgpParams:
    """Recover ``(a, d, r, x0)`` whose reduction is ``(P, Q)`` with the given x1, x2.

    The AGP solutions for fixed (a, d, r) form a line through the origin
    (scaled by x0), so (x1, x2) must be proportional to (a, B).
    """
    P, Q, x1, x2, r = (as_rat(v) for v in (P, Q, x1, x2, r))
    if r == 0:
        raise InvalidRatioError("cannot identify AGP parameters with r = 0")
    a, d = identify_family(P, Q)(r)
    B = a * a + (a + d) * r
    if a != 0:
        x0 = x1 / a
        if x2 != B * x0:
            raise InconsistentInitialDataError(
                f"(x1, x2) = ({x1}, {x2}) is not proportional to (a, B) = ({a}, {B})"
            )
    elif B != 0:
        if x1 != 0:
            raise InconsistentInitialDataError(f"a = 0 forces x1 = 0, got x1 = {x1}")
        x0 = x2 / B
    else:
        if x1 != 0 or x2 != 0:
            raise InconsistentInitialDataError(
                f"a = B = 0 forces x1 = x2 = 0, got ({x1}, {x2})"
            )
        raise UnderdeterminedError("a = B = 0: every x0 gives the same sequence")
    return AgpParams(a, d, r, x0)
