"""Five independent ways to evaluate the AGP full-history sequence.

Each engine returns the exact terms ``[x_0, x_1, ..., x_n]``.

``eval_convolution`` transcribes the defining sum term by term and is the
reference every other engine is compared against.  The others go through
the second-order reduction: plain iteration (``eval_linear``), the
closed form over the quadratic field (``eval_binet``), powers of the 2x2
companion matrix (``eval_matrix``) and power-series division of the
generating function (``eval_genfunc``).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .errors import InternalConsistencyError
from .numerics import Quad
from .reducer import AgpParams, SecondOrder, eigenvalues, reduce

Engine = Callable[[AgpParams, int], list]

_ZERO = Fraction(0)


def eval_convolution(p: AgpParams, n: int) -> list[Fraction]:
    """O(n**2) direct evaluation of ``x_{m+1} = sum_k (a + k d) r**k x_{m-k}``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    coeffs = [p.coefficient(k) for k in range(n)]
    xs = [p.x0]
    for m in range(n):
        xs.append(sum((coeffs[k] * xs[m - k] for k in range(m + 1)), _ZERO))
    return xs


def linear_terms(s: SecondOrder, x0: Fraction, n: int) -> list[Fraction]:
    """Iterate ``x_{m+1} = P x_m + Q x_{m-1}`` from the seeds x1, x2 (x0 is echoed)."""
    xs = [x0, s.x1, s.x2][: n + 1]
    while len(xs) <= n:
        xs.append(s.P * xs[-1] + s.Q * xs[-2])
    return xs


def eval_linear(p: AgpParams, n: int) -> list[Fraction]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return linear_terms(reduce(p), p.x0, n)


def binet_term(s: SecondOrder, m: int) -> Fraction:
    """Closed-form x_m (m >= 1) of the reduced system.

    Distinct roots use ``[(x2 - l2 x1) l1**(m-1) - (x2 - l1 x1) l2**(m-1)] / (l1 - l2)``
    evaluated in exact quadratic-field arithmetic; with ``x1 = a x0`` and
    ``x2 = B x0`` this is the AGP Binet formula.  A double root ``l = P/2``
    uses ``x_m = (m-1) l**(m-2) x2 - (m-2) l**(m-1) x1``.
    """
    if m < 1:
        raise ValueError("the closed form covers m >= 1 only")
    eig = eigenvalues(s)
    if eig.delta == 0:
        lam = s.P / 2
        second = (m - 1) * lam ** (m - 2) * s.x2 if m >= 2 else _ZERO
        return second - (m - 2) * lam ** (m - 1) * s.x1
    l1, l2 = eig.lambda1, eig.lambda2
    value = ((s.x2 - l2 * s.x1) * l1 ** (m - 1) - (s.x2 - l1 * s.x1) * l2 ** (m - 1)) / (l1 - l2)
    if value.radical != 0:
        raise InternalConsistencyError(
            f"Binet value for m={m} kept a radical residue: {value}"
        )
    return value.rational


def binet_value(p: AgpParams, m: int) -> Quad:
    """Unextracted AGP Binet value ``x0/(l1-l2) [(B - a l2) l1**(m-1) - (B - a l1) l2**(m-1)]``.

    Only defined for distinct roots; exposed so callers can inspect the
    radical part before extraction.
    """
    s = reduce(p)
    eig = eigenvalues(s)
    if eig.delta == 0:
        raise ValueError("repeated root: the distinct-root closed form does not apply")
    l1, l2 = eig.lambda1, eig.lambda2
    bracket = (s.B - p.a * l2) * l1 ** (m - 1) - (s.B - p.a * l1) * l2 ** (m - 1)
    return p.x0 * bracket / (l1 - l2)


def binet_terms(s: SecondOrder, n: int) -> list[Fraction]:
    """``[binet_term(s, m) for m in 1..n]`` with the root powers carried between terms."""
    eig = eigenvalues(s)
    if eig.delta == 0:
        return [binet_term(s, m) for m in range(1, n + 1)]
    l1, l2 = eig.lambda1, eig.lambda2
    c1, c2 = (s.x2 - l2 * s.x1) / (l1 - l2), (s.x2 - l1 * s.x1) / (l1 - l2)
    p1 = p2 = Quad(Fraction(1), _ZERO, eig.delta)
    out = []
    for m in range(1, n + 1):
        value = c1 * p1 - c2 * p2
        if value.radical != 0:
            raise InternalConsistencyError(f"Binet value for m={m} kept a radical residue: {value}")
        out.append(value.rational)
        p1, p2 = p1 * l1, p2 * l2
    return out


def eval_binet(p: AgpParams, n: int) -> list[Fraction]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [p.x0] + binet_terms(reduce(p), n)


Matrix = tuple[Fraction, Fraction, Fraction, Fraction]  # row-major 2x2


def _matmul(x: Matrix, y: Matrix) -> Matrix:
    a, b, c, d = x
    e, f, g, h = y
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def matrix_power(m: Matrix, k: int) -> Matrix:
    result: Matrix = (Fraction(1), _ZERO, _ZERO, Fraction(1))
    while k:
        if k & 1:
            result = _matmul(result, m)
        m = _matmul(m, m)
        k >>= 1
    return result


def matrix_term(s: SecondOrder, m: int) -> Fraction:
    """x_m for m >= 1 via ``(x_{m+1}, x_m) = [[P, Q], [1, 0]]**(m-1) (x2, x1)``."""
    if m < 1:
        raise ValueError("the matrix form covers m >= 1 only")
    _, _, c, d = matrix_power((s.P, s.Q, Fraction(1), _ZERO), m - 1)
    return c * s.x2 + d * s.x1


def eval_matrix_at(p: AgpParams, m: int) -> Fraction:
    if m == 0:
        return p.x0
    return matrix_term(reduce(p), m)


def eval_matrix(p: AgpParams, n: int) -> list[Fraction]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    s = reduce(p)
    return [p.x0] + [matrix_term(s, m) for m in range(1, n + 1)]


def series_divide(num: Sequence[Fraction], den: Sequence[Fraction], count: int) -> list[Fraction]:
    """First ``count`` power-series coefficients of ``num(t) / den(t)``; ``den[0]`` must be nonzero."""
    if not den or den[0] == 0:
        raise ZeroDivisionError("denominator series must have a nonzero constant term")
    lead = den[0]
    out: list[Fraction] = []
    for k in range(count):
        acc = num[k] if k < len(num) else _ZERO
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc / lead)
    return out


def genfunc_series(s: SecondOrder, count: int) -> list[Fraction]:
    """Coefficients of ``((P x1 - x2) t - x1) / (Q t**2 + P t - 1)``; coefficient k is x_{k+1}."""
    num = [-s.x1, s.P * s.x1 - s.x2]
    den = [Fraction(-1), s.P, s.Q]
    return series_divide(num, den, count)


def eval_genfunc(p: AgpParams, n: int) -> list[Fraction]:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [p.x0] + genfunc_series(reduce(p), n)


ENGINES: dict[str, Engine] = {
    "conv": eval_convolution,
    "linear": eval_linear,
    "binet": eval_binet,
    "matrix": eval_matrix,
    "genfunc": eval_genfunc,
}
REFERENCE = "conv"


@dataclass
class EngineReport:
    terms: dict[str, list[Fraction]]
    agreement: bool
    first_divergence: int | None = None
    disagreeing: list[str] = field(default_factory=list)


def cross_check(p: AgpParams, n: int, engines: Mapping[str, Engine] | None = None) -> EngineReport:
    """Run every engine and compare against the convolution reference.

    ``engines`` replaces the default table; it must contain ``"conv"``.
    """
    engines = ENGINES if engines is None else engines
    terms = {name: engine(p, n) for name, engine in engines.items()}
    ref = terms[REFERENCE]
    first: int | None = None
    bad: list[str] = []
    for name, xs in terms.items():
        if xs == ref:
            continue
        bad.append(name)
        pos = next((i for i, (u, v) in enumerate(zip(xs, ref)) if u != v), min(len(xs), len(ref)))
        first = pos if first is None else min(first, pos)
    return EngineReport(terms, not bad, first, sorted(bad))
