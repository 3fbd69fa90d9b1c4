"""Experimental full-history recurrences with a rotating bank of AGP weights.

Step n (producing x_{n+1}) uses bank ``n mod m``, so bank 0 (the first one)
serves every n divisible by m.  As in the single-bank case only x_0 is
given; everything after it is generated.  No closed form is attempted.

The nonvanishing condition ``a_1...a_m r_1...r_m != 0`` is reported by
:meth:`PeriodicParams.nondegenerate` but not enforced.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ProbeError
from .numerics import RatLike, as_rat


@dataclass(frozen=True)
class PeriodicParams:
    banks: tuple[tuple[Fraction, Fraction, Fraction], ...]
    x0: Fraction

    def __post_init__(self):
        banks = tuple(tuple(as_rat(v) for v in bank) for bank in self.banks)
        if not banks:
            raise ValueError("at least one bank is required")
        if any(len(b) != 3 for b in banks):
            raise ValueError("each bank is an (a, d, r) triple")
        object.__setattr__(self, "banks", banks)
        object.__setattr__(self, "x0", as_rat(self.x0))

    @property
    def period(self) -> int:
        return len(self.banks)

    def nondegenerate(self) -> bool:
        prod = Fraction(1)
        for a, _, r in self.banks:
            prod *= a * r
        return prod != 0

    def rotated(self, shift: int = 1) -> PeriodicParams:
        k = shift % self.period
        return PeriodicParams(self.banks[k:] + self.banks[:k], self.x0)


def parse_banks(text: str) -> list[tuple[Fraction, Fraction, Fraction]]:
    """Parse ``"a,d,r;a,d,r;..."``; blank entries are skipped."""
    banks = []
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        parts = [s.strip() for s in chunk.split(",")]
        if len(parts) != 3:
            raise ValueError(f"bank {chunk.strip()!r} is not an a,d,r triple")
        banks.append(tuple(as_rat(s) for s in parts))
    return banks


def read_banks_file(path) -> list[tuple[Fraction, Fraction, Fraction]]:
    """One ``a,d,r`` triple per line (whitespace also separates); ``#`` starts a comment."""
    lines = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                lines.append(",".join(line.replace(",", " ").split()))
    return parse_banks(";".join(lines))


def eval_periodic(p: PeriodicParams, n: int, offset: int = 0) -> list[Fraction]:
    """Terms x_0..x_n; step ``k`` uses bank ``(k + offset) mod m``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    m = p.period
    tables = [[(a + k * d) * r ** k for k in range(n)] for a, d, r in p.banks]
    xs = [p.x0]
    for step in range(n):
        coeffs = tables[(step + offset) % m]
        xs.append(sum((coeffs[k] * xs[step - k] for k in range(step + 1)), Fraction(0)))
    return xs


@dataclass(frozen=True)
class GrowthDiagnostic:
    step_ratios: list[float]   # x_{k+1}/x_k for the last m steps
    period_ratio: float        # x_n / x_{n-m}
    period_ratio_exact: Fraction
    previous_period_ratio: float  # x_{n-m} / x_{n-2m}, same phase
    stabilized: bool
    tolerance: float


def empirical_growth(p: PeriodicParams, n: int, tol: float = 1e-9) -> GrowthDiagnostic:
    """Ratios near the end of x_0..x_n and whether the m-step ratio has settled.

    Stabilized means the last two same-phase m-step ratios differ by at most
    ``tol`` relative to the latest one (absolute below magnitude 1).
    """
    m = p.period
    if n < 2 * m:
        raise ValueError(f"need n >= 2m = {2 * m} to compare two periods")
    xs = eval_periodic(p, n)
    for k in range(n - 2 * m, n + 1):
        if xs[k] == 0 and k < n:
            raise ProbeError(f"x_{k} = 0 at the probe window; try a larger n")
    step_ratios = [float(xs[k + 1] / xs[k]) for k in range(n - m, n)]
    latest = xs[n] / xs[n - m]
    previous = xs[n - m] / xs[n - 2 * m]
    scale = max(1.0, abs(float(latest)))
    stabilized = abs(float(latest - previous)) <= tol * scale
    return GrowthDiagnostic(step_ratios, float(latest), latest, float(previous), stabilized, tol)
