from __future__ import annotations
from dataclasses import dataclass
from typing import Optional

from ..abelian.group import FgAbelianGroup


@dataclass(frozen=True)
class Classification:
    """
    The kind of toric object a decorated polytope classifies.

    Fields:
        kind (str): one of SMOOTH, EFFECTIVE, INEFFECTIVE, QUASIFOLD.
        global_isotropy (Optional[FgAbelianGroup]): ker ∂, carried for ineffective orbifolds.
    """
    kind: str
    global_isotropy: Optional[FgAbelianGroup] = None

    SMOOTH = "SmoothManifold"
    EFFECTIVE = "EffectiveOrbifold"
    INEFFECTIVE = "IneffectiveOrbifold"
    QUASIFOLD = "Quasifold"

    def __str__(self) -> str:
        if self.kind == Classification.INEFFECTIVE:
            return f"{self.kind}({self.global_isotropy})"
        return self.kind

    def is_orbifold_type(self) -> bool:
        return self.kind != Classification.QUASIFOLD
