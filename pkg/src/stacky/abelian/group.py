from __future__ import annotations
from collections import defaultdict
from dataclasses import dataclass
from math import prod
from typing import Dict, Iterable, List, Optional, Tuple

from sympy import factorint


@dataclass(frozen=True)
class FgAbelianGroup:
    """
    A finitely generated abelian group Z^free_rank x Z/d1 x ... x Z/dk in invariant-factor form.

    Fields:
        free_rank (int): rank of the free part.
        torsion (Tuple[int, ...]): invariant factors d1 | d2 | ... | dk, each at least 2.
    """
    free_rank: int
    torsion: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        torsion = tuple(int(d) for d in self.torsion)
        if self.free_rank < 0:
            raise ValueError(f"free rank must be nonnegative, got {self.free_rank}")
        if any(d < 2 for d in torsion):
            raise ValueError(f"invariant factors must be at least 2, got {list(torsion)}")
        if any(b % a != 0 for a, b in zip(torsion, torsion[1:])):
            raise ValueError(f"invariant factors {list(torsion)} do not form a divisibility chain")
        object.__setattr__(self, "torsion", torsion)

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " x ".join(parts) if parts else "trivial"

    @staticmethod
    def trivial() -> FgAbelianGroup:
        return FgAbelianGroup(0, ())

    @staticmethod
    def from_cyclic_orders(orders: Iterable[int]) -> FgAbelianGroup:
        """
        Normalizes a direct sum of cyclic groups into invariant-factor form.
        An order of 0 stands for Z; orders of 1 (and their negatives) are dropped.

        Args:
            orders (Iterable[int]): orders of the cyclic summands.

        Returns:
            FgAbelianGroup: the isomorphic group in invariant-factor form.
        """
        free_rank = 0
        powers: Dict[int, List[int]] = defaultdict(list)
        for order in orders:
            order = abs(int(order))
            if order == 0:
                free_rank += 1
                continue
            for p, e in factorint(order).items():
                powers[p].append(p ** e)
        length = max((len(v) for v in powers.values()), default=0)
        factors = [1] * length
        for p, values in powers.items():
            values.sort()
            # the largest prime powers go to the last invariant factors
            for k, value in enumerate(reversed(values)):
                factors[length - 1 - k] *= value
        return FgAbelianGroup(free_rank, tuple(d for d in factors if d > 1))

    def direct_sum(self, other: FgAbelianGroup) -> FgAbelianGroup:
        return FgAbelianGroup.from_cyclic_orders([0] * (self.free_rank + other.free_rank)
                                                 + list(self.torsion) + list(other.torsion))

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def order(self) -> Optional[int]:
        """Number of elements, or None for infinite groups."""
        if self.free_rank:
            return None
        return prod(self.torsion)
