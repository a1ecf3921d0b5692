"""Priority scores of matchings.

A score is a digit sequence of length n; digit ``i - 1`` counts the matched
vertices of priority ``i``. Scores compare lexicographically, priority 1
being the most significant digit. Digits are kept as a tuple rather than
packed into an integer, which would overflow fixed-width types for large n.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .graph import Graph, Matching


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True, order=False)
class ScoreVector:
    digits: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.digits)

    def __getitem__(self, i):
        return self.digits[i]

    def __iter__(self):
        return iter(self.digits)

    def _check(self, other: "ScoreVector") -> None:
        if len(self.digits) != len(other.digits):
            raise ValueError(
                f"cannot compare scores of lengths {len(self.digits)} "
                f"and {len(other.digits)}")

    def __lt__(self, other: "ScoreVector") -> bool:
        self._check(other)
        return self.digits < other.digits

    def __le__(self, other: "ScoreVector") -> bool:
        self._check(other)
        return self.digits <= other.digits

    def __gt__(self, other: "ScoreVector") -> bool:
        self._check(other)
        return self.digits > other.digits

    def __ge__(self, other: "ScoreVector") -> bool:
        self._check(other)
        return self.digits >= other.digits

    def matched(self) -> int:
        """Total number of matched vertices counted by this score."""
        return sum(self.digits)

    def prefix(self, i: int) -> "ScoreVector":
        return i_score(self, i)

    def render(self) -> str:
        return " ".join(map(str, self.digits))

    def compact(self) -> str:
        """Digits without separators, as in ``2111000100``. Only defined when
        every digit is at most 9."""
        if any(d > 9 for d in self.digits):
            raise ValueError("compact rendering needs every digit <= 9")
        return "".join(map(str, self.digits))

    def __str__(self) -> str:
        return self.render()


def priority_score(graph: "Graph", matching: "Matching") -> ScoreVector:
    digits = [0] * graph.n
    prio = graph.priority
    for u, w in enumerate(matching.mate_of):
        if w:
            digits[prio[u] - 1] += 1
    return ScoreVector(tuple(digits))


def compare(a: ScoreVector, b: ScoreVector) -> Ordering:
    if len(a) != len(b):
        raise ValueError(
            f"cannot compare scores of lengths {len(a)} and {len(b)}")
    if a.digits < b.digits:
        return Ordering.LESS
    if a.digits > b.digits:
        return Ordering.GREATER
    return Ordering.EQUAL


def i_score(score: ScoreVector, i: int) -> ScoreVector:
    """The first ``i`` digits of ``score``."""
    if not 1 <= i <= len(score):
        raise ValueError(f"i must lie in [1, {len(score)}], got {i}")
    return ScoreVector(score.digits[:i])


def parse_score(text: str) -> ScoreVector:
    return ScoreVector(tuple(int(tok) for tok in text.split()))
