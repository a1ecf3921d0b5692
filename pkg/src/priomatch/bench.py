"""Timing of full solves on seeded random graphs with m = density * n."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .driver import max_priority_matching
from .io import PrioritySpec, generate_random


@dataclass(frozen=True)
class BenchRecord:
    n: int
    m: int
    elapsed: float
    searches: int
    size: int

    def line(self) -> str:
        return f"{self.n}\t{self.m}\t{self.elapsed:.6f}\t{self.searches}\t{self.size}"


HEADER = "# n\tm\telapsed_s\tsearches\tsize"


def run_bench(sizes: Iterable[int], seed: int = 1, density: int = 5,
              priorities: PrioritySpec = None, repeats: int = 1) -> list[BenchRecord]:
    """Solve one random instance per size. With ``repeats > 1`` the fastest
    of the repeated solves is reported."""
    out = []
    for n in sizes:
        m = min(density * n, n * (n - 1) // 2)
        graph = generate_random(n, m, priorities, seed)
        best: Optional[BenchRecord] = None
        for _ in range(repeats):
            rep = max_priority_matching(graph)
            rec = BenchRecord(n, m, rep.elapsed, rep.searches, rep.size)
            if best is None or rec.elapsed < best.elapsed:
                best = rec
        out.append(best)
    return out


def doubling_ratios(records: list[BenchRecord]) -> list[float]:
    """Time ratio between consecutive records."""
    return [b.elapsed / a.elapsed for a, b in zip(records, records[1:])]


def fitted_exponent(records: list[BenchRecord]) -> float:
    """Least-squares slope of log(time) against log(n)."""
    import numpy as np

    x = np.log([r.n for r in records])
    y = np.log([r.elapsed for r in records])
    return float(np.polyfit(x, y, 1)[0])


def quadratic_constants(records: list[BenchRecord]) -> list[float]:
    """t / n**2 per record; a quadratic bound holds within factor f when the
    spread max/min of these stays below f."""
    return [r.elapsed / (r.n * r.n) for r in records]


def mn_constants(records: list[BenchRecord]) -> list[float]:
    return [r.elapsed / (r.m * max(r.n, 1)) for r in records]


def within_factor(values: list[float], factor: float) -> bool:
    return max(values) <= factor * min(values) if values else True
