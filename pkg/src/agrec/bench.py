"""Wall-clock timing of the evaluation engines over a grid of sizes."""
from __future__ import annotations

import csv
import io
import time
from typing import Iterable

from .engines import ENGINES
from .reducer import AgpParams

DEFAULT_SIZES = (100, 200, 400, 800)


def time_engine(name: str, p: AgpParams, n: int, repeat: int = 1) -> float:
    """Best-of-``repeat`` seconds for one full evaluation of x_0..x_n."""
    engine = ENGINES[name]
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        engine(p, n)
        best = min(best, time.perf_counter() - t0)
    return best


def run_bench(
    p: AgpParams,
    sizes: Iterable[int] = DEFAULT_SIZES,
    engines: Iterable[str] = tuple(ENGINES),
    repeat: int = 1,
) -> list[tuple[str, int, float]]:
    """Rows ``(engine, n, wall_seconds)`` grouped by engine, n ascending within a group."""
    sizes = sorted(set(sizes))
    return [(name, n, time_engine(name, p, n, repeat)) for name in engines for n in sizes]


def to_csv(rows: list[tuple[str, int, float]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["engine", "n", "wall_seconds"])
    for name, n, secs in rows:
        writer.writerow([name, n, f"{secs:.6f}"])
    return buf.getvalue()
