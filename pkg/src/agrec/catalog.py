"""Named integer sequences that arise as AGP full-history solutions.

Every entry carries parameters ``(a, d, r, x0)`` and the textbook second-order
recurrence used as an independent oracle.  For all entries the AGP term
``x_n`` (n >= 1) equals ``classical_values(name, N)[n - 1]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import UnknownSequenceError
from .reducer import AgpParams


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: AgpParams
    index_map: str
    # (P, Q, first, second) of the textbook recurrence
    classical_seed: tuple[Fraction, Fraction, Fraction, Fraction]
    note: str = ""


def _entry(name, a, d, r, x0, index_map, seed, note=""):
    return CatalogEntry(
        name,
        AgpParams(Fraction(a), Fraction(d), Fraction(r), Fraction(x0)),
        index_map,
        tuple(Fraction(v) for v in seed),
        note,
    )


_CATALOG = {
    e.name: e
    for e in (
        _entry("fibonacci", 0, "5/2", "1/2", "4/5", "x_n = F_{n-1} (F_0=0, F_1=1)", (1, 1, 0, 1)),
        _entry("jacobsthal", 0, "9/2", "1/2", "4/9", "x_n = J_{n-1} (J_0=0, J_1=1)", (1, 2, 0, 1)),
        _entry("pell", 0, 2, 1, "1/2", "x_n = P_{n-1} (P_0=0, P_1=1)", (2, 1, 0, 1)),
        _entry(
            "balancing", 4, 4, 1, "1/4", "x_n = B_n (B_1=1, B_2=6)", (6, -1, 1, 6),
            note="list position n-1 holds B_n",
        ),
        _entry(
            "even-fibonacci", 1, 1, 1, 1, "x_n = F_{2n}", (3, -1, 1, 3),
            note="only x0 = 1; the x0 = 2 variant is not a Fibonacci subsequence",
        ),
    )
}


def catalog_names() -> list[str]:
    return list(_CATALOG)


def catalog_get(name: str) -> CatalogEntry:
    try:
        return _CATALOG[name]
    except KeyError:
        raise UnknownSequenceError(
            f"unknown sequence {name!r}; available: {', '.join(_CATALOG)}"
        ) from None


def _second_order(p: int, q: int, first: int, second: int, count: int) -> list[int]:
    out = [first, second][:count]
    while len(out) < count:
        out.append(p * out[-1] + q * out[-2])
    return out


def _fibonacci(count: int) -> list[int]:
    out, a, b = [], 0, 1
    for _ in range(count):
        out.append(a)
        a, b = b, a + b
    return out


def classical_values(name: str, count: int) -> list[Fraction]:
    """First ``count`` values from the textbook definition, without any AGP machinery."""
    if count < 1:
        raise ValueError("count must be positive")
    catalog_get(name)
    if name == "fibonacci":
        values = _fibonacci(count)
    elif name == "jacobsthal":
        values = _second_order(1, 2, 0, 1, count)
    elif name == "pell":
        values = _second_order(2, 1, 0, 1, count)
    elif name == "balancing":
        values = _second_order(6, -1, 1, 6, count)
    else:  # even-fibonacci: F_2, F_4, ...
        values = _fibonacci(2 * count + 1)[2::2]
    return [Fraction(v) for v in values]
