"""Limit of successive-term ratios, and mechanical checks of published formulas.

Every check in :func:`erratum_report` evaluates a printed claim, the
corresponding derived formula, and the direct convolution on a concrete
witness input.  The convolution is the ground truth; a finding is a
discrepancy only when the printed side disagrees with it.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .catalog import catalog_get, classical_values
from .engines import binet_term, eval_convolution, eval_linear
from .errors import DegenerateModeError, NoLimitError, ProbeError
from .numerics import Quad
from .reducer import AgpParams, discriminant, eigenvalues, reduce


def ratio_limit(p: AgpParams, rho: int) -> Quad:
    """Exact ``lim x_{n+rho-1} / x_{n-1} = lambda1**rho`` for a dominant lambda1.

    Requires a positive discriminant, ``|lambda1| > |lambda2|`` (equivalent to
    P > 0 once the discriminant is positive) and a nonzero lambda1 mode.
    """
    if rho < 1:
        raise ValueError("rho must be a positive integer")
    s = reduce(p)
    eig = eigenvalues(s)
    if eig.delta <= 0:
        raise NoLimitError(f"discriminant {eig.delta} <= 0: roots have equal modulus")
    if s.P <= 0:
        raise NoLimitError(f"P = {s.P} <= 0: lambda1 does not strictly dominate lambda2")
    mode = p.x0 * (s.B - p.a * eig.lambda2)
    if mode.is_zero():
        raise DegenerateModeError("the lambda1 component of the solution vanishes")
    return eig.lambda1 ** rho


def empirical_ratio(p: AgpParams, rho: int, n: int) -> float:
    """``x_{n+rho} / x_n`` computed exactly, converted to float at the end.

    Terms rho apart, so the limit is ``lambda1**rho`` (see :func:`ratio_limit`).
    """
    if rho < 1 or n < 1:
        raise ValueError("rho and n must be positive")
    xs = eval_linear(p, n + rho)
    if xs[n] == 0:
        raise ProbeError(f"x_{n} = 0; probe at a larger n")
    return float(xs[n + rho] / xs[n])


class Verdict(enum.Enum):
    CONFIRMED_MATCH = "confirmed_match"
    DISCREPANCY = "discrepancy"


@dataclass(frozen=True)
class ErratumFinding:
    claim_location: str
    printed_form: str
    derived_form: str
    witness: dict[str, str]
    printed_value: str
    derived_value: str
    oracle_value: str
    verdict: Verdict
    note: str = field(default="", compare=False)

    def as_record(self) -> dict:
        return {
            "claim_location": self.claim_location,
            "printed_form": self.printed_form,
            "derived_form": self.derived_form,
            "witness": dict(self.witness),
            "printed_value": self.printed_value,
            "derived_value": self.derived_value,
            "oracle_value": self.oracle_value,
            "verdict": self.verdict.value,
            "note": self.note,
        }


def fit_second_order(xs: list[Fraction], start: int = 1) -> tuple[Fraction, Fraction]:
    """Recover (P, Q) with ``x_{k+1} = P x_k + Q x_{k-1}`` from consecutive terms.

    Uses the first window ``x_k..x_{k+2}, x_{k+1}..x_{k+3}`` (k >= start) whose
    2x2 system is nonsingular, then checks the fit on every later term.
    """
    for k in range(start, len(xs) - 3):
        det = xs[k + 1] * xs[k + 1] - xs[k] * xs[k + 2]
        if det == 0:
            continue
        P = (xs[k + 2] * xs[k + 1] - xs[k] * xs[k + 3]) / det
        Q = (xs[k + 1] * xs[k + 3] - xs[k + 2] * xs[k + 2]) / det
        if all(xs[j + 1] == P * xs[j] + Q * xs[j - 1] for j in range(start + 1, len(xs) - 1)):
            return P, Q
    raise ValueError("terms do not determine a second-order recurrence")


def _finding(location, printed_form, derived_form, witness, printed, derived, oracle, note=""):
    verdict = Verdict.CONFIRMED_MATCH if printed == oracle else Verdict.DISCREPANCY
    return ErratumFinding(
        location, printed_form, derived_form,
        {k: str(v) for k, v in witness.items()},
        str(printed), str(derived), str(oracle), verdict, note,
    )


def _check_radicand(a, d, r) -> ErratumFinding:
    p = AgpParams(a, d, r, 1)
    printed = p.a ** 2 - 4 * p.r * (p.r - p.d - 1)
    derived = discriminant(reduce(p))
    P, Q = fit_second_order(eval_convolution(p, 12))
    return _finding(
        "main theorem: eigenvalue radicand",
        "a^2 - 4r(r - d - 1)",
        "P^2 + 4Q = a^2 + 4dr",
        {"a": p.a, "d": p.d, "r": p.r},
        printed, derived, P * P + 4 * Q,
        note="oracle: P, Q fitted to convolution terms",
    )


def _check_pell_closed_form() -> ErratumFinding:
    p = catalog_get("pell").params
    s = reduce(p)
    oracle = eval_convolution(p, 30)
    sigma = Quad(Fraction(1, 2), Fraction(1, 2), 2)
    root2 = Quad.sqrt(2)
    for n in range(1, 31):
        printed = ((sigma ** (n - 1) - (1 - sigma) ** (n - 1)) / root2).to_rat()
        if printed != oracle[n]:
            break
    return _finding(
        "Pell example: closed form",
        "(sigma^(n-1) - (1-sigma)^(n-1))/sqrt(2), sigma = (1+sqrt(2))/2",
        "AGP Binet formula with lambda = 1 +- sqrt(2)",
        {"params": p, "n": n},
        printed, binet_term(s, n), oracle[n],
    )


def _check_balancing_characteristic() -> ErratumFinding:
    p = catalog_get("balancing").params
    root = Quad(3, 2, 2)  # stated root 3 + 2*sqrt(2)
    printed = (root * root - 6 * root - 1).to_rat()
    s = reduce(p)
    derived = (root * root - s.P * root - s.Q).to_rat()
    P, Q = fit_second_order(eval_convolution(p, 12))
    oracle = (root * root - P * root - Q).to_rat()
    return _finding(
        "balancing example: characteristic polynomial",
        "x^2 - 6x - 1",
        "x^2 - Px - Q = x^2 - 6x + 1",
        {"params": p, "x": root},
        printed, derived, oracle,
        note="values are the polynomials evaluated at the stated root 3+2*sqrt(2)",
    )


def _check_odd_fibonacci_claim() -> ErratumFinding:
    p = AgpParams(1, 1, 1, 2)
    oracle = eval_convolution(p, 20)
    fib = classical_values("fibonacci", 2 * 20 + 2)
    for n in range(2, 21):
        if fib[2 * n + 1] != oracle[n]:
            break
    return _finding(
        "even-index Fibonacci remark: x0 = 2 variant",
        "x_n = F_{2n+1} for n >= 2",
        "AGP Binet formula with a=d=r=1, x0=2 (= 2 F_{2n})",
        {"params": p, "n": n},
        fib[2 * n + 1], binet_term(reduce(p), n), oracle[n],
    )


def _check_fibonacci_last_coefficient() -> ErratumFinding:
    p = catalog_get("fibonacci").params
    oracle = eval_convolution(p, 12)
    for n in range(1, 12):
        # displayed sum: weights (a + k d) r^k for k < n, then 5n/2 on x_0
        printed = sum((p.coefficient(k) * oracle[n - k] for k in range(n)), Fraction(0))
        printed += Fraction(5 * n, 2) * p.x0
        if printed != oracle[n + 1]:
            break
    derived = eval_linear(p, n + 1)[n + 1]
    return _finding(
        "Fibonacci remark: last weight of the displayed recurrence",
        "(5n/2) x_0",
        "(a + n d) r^n x_0 = (5n/2)(1/2)^n x_0",
        {"params": p, "n": n},
        printed, derived, oracle[n + 1],
        note="values are x_{n+1} computed with each set of weights",
    )


def erratum_report() -> list[ErratumFinding]:
    findings = [
        _check_radicand(0, Fraction(5, 2), Fraction(1, 2)),
        _check_radicand(1, 1, 1),
        _check_pell_closed_form(),
        _check_balancing_characteristic(),
        _check_odd_fibonacci_claim(),
        _check_fibonacci_last_coefficient(),
    ]
    return sorted(findings, key=lambda f: (f.claim_location, sorted(f.witness.items())))
