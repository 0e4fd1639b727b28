from __future__ import annotations
from fractions import Fraction
from typing import Iterable, Sequence, Tuple


class Bound:
    """
    Encapsulates an axis-aligned box in R^n with rational sides.

    Fields:
        mins (Tuple[Fraction, ...]): lower bound of each coordinate.
        maxs (Tuple[Fraction, ...]): upper bound of each coordinate.
    """
    mins: Tuple[Fraction, ...]
    maxs: Tuple[Fraction, ...]

    def __init__(self, mins: Sequence[Fraction], maxs: Sequence[Fraction]):
        if len(mins) != len(maxs):
            raise ValueError(f"box sides disagree in dimension: {len(mins)} and {len(maxs)}")
        self.mins = tuple(Fraction(x) for x in mins)
        self.maxs = tuple(Fraction(x) for x in maxs)

    def __str__(self) -> str:
        return ", ".join(f"x{i + 1}({lo}, {hi})" for i, (lo, hi) in enumerate(zip(self.mins, self.maxs)))

    def widen(self, margin: Fraction) -> Bound:
        return Bound([x - margin for x in self.mins], [x + margin for x in self.maxs])

    def lerp(self, fractions: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        """The point whose i-th coordinate sits at fractions[i] of the way from mins[i] to maxs[i]."""
        return tuple(lo + t * (hi - lo) for t, lo, hi in zip(fractions, self.mins, self.maxs))

    @staticmethod
    def from_points(points: Iterable[Sequence[Fraction]]) -> Bound:
        points = [tuple(Fraction(x) for x in p) for p in points]
        if not points:
            raise ValueError("a bound needs at least one point")
        return Bound([min(c) for c in zip(*points)], [max(c) for c in zip(*points)])
