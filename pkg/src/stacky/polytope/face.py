from __future__ import annotations
from dataclasses import dataclass
from typing import Iterable, Tuple


@dataclass(frozen=True)
class Face:
    """
    A closed face of a simple polytope, indexed by the facets containing it.

    Fields:
        active_set (Tuple[int, ...]): sorted indices of every facet containing the face.
        dim (int): n - |active_set|.
    """
    active_set: Tuple[int, ...]
    dim: int

    @staticmethod
    def of(active_set: Iterable[int], n: int) -> Face:
        active = tuple(sorted(set(active_set)))
        return Face(active, n - len(active))

    @property
    def codim(self) -> int:
        return len(self.active_set)

    def is_interior(self) -> bool:
        return not self.active_set

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.dim, self.active_set)

    @property
    def name(self) -> str:
        if not self.active_set:
            return "interior"
        return "∩".join(f"f{i + 1}" for i in self.active_set)

    def __str__(self) -> str:
        return self.name
