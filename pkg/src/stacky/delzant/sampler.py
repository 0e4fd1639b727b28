from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from math import pi
from typing import Any, Dict, List, Optional
import logging

import numpy as np
import pandas as pd
from tqdm import tqdm

from .delzant_data import DelzantData
from ..error.value_error.empty_interior_error import EmptyInteriorError
from ..scalar.matrix import Vector
from ..utils.rational import decimal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Sample:
    """
    One accepted point of the level set.

    Fields:
        index (int): position in the sample stream.
        t (Vector): t_j = L_j - <ξ, λ_j>, exact.
        xi (Vector): the rational moment point ξ.
        exact (bool): t >= 0, every quadric holds exactly and ξ is recovered from t.
    """
    index: int
    t: Vector
    xi: Vector
    exact: bool

    def to_row(self, seed: int, moduli: bool = False) -> Dict[str, Any]:
        row: Dict[str, Any] = {"seed": seed, "index": self.index}
        row.update({f"t{j + 1}": decimal(x.approx(Fraction(1, 10**13))) for j, x in enumerate(self.t)})
        row.update({f"xi{i + 1}": decimal(x.approx(Fraction(1, 10**13))) for i, x in enumerate(self.xi)})
        if moduli:
            row.update({f"z{j + 1}_sq": f"{float(x) / pi:.12f}" for j, x in enumerate(self.t)})
        row["exact"] = self.exact
        return row


class LevelSetSampler:
    """
    Rejection sampler for the level set, drawing rational ξ on a grid over a box around Δ.
    Each sample index has its own generator seeded by (seed, index), so any index range
        can be drawn independently and the stream is reproducible.
    """
    GRID = 2 ** 20
    MAX_REJECTIONS = 2000

    def __init__(self, data: DelzantData, seed: int, grid: Optional[int] = None,
                 max_rejections: Optional[int] = None):
        self.data = data
        self.seed = seed
        self.grid = grid if grid is not None else LevelSetSampler.GRID
        self.max_rejections = max_rejections if max_rejections is not None else LevelSetSampler.MAX_REJECTIONS
        eps = Fraction(1, self.grid)
        self.box = data.polytope.bounding_box(eps)

    def draw(self, index: int) -> Optional[Sample]:
        """The sample at a given index, or None after max_rejections misses."""
        rng = np.random.default_rng([self.seed, index])
        field = self.data.field
        for _ in range(self.max_rejections):
            fractions = [Fraction(int(g), self.grid) for g in rng.integers(0, self.grid, size=self.data.n, endpoint=True)]
            xi = tuple(field.from_rational(x) for x in self.box.lerp(fractions))
            t = self.data.t_of(xi)
            if any(x.sign() < 0 for x in t):
                continue
            exact = self.data.in_level_set(t) and self.data.moment_point(t) == xi
            return Sample(index, t, xi, exact)
        return None

    def sample(self, count: int, progress_bar: bool = False) -> List[Sample]:
        """
        Raises:
            EmptyInteriorError: some index found no point of Δ within max_rejections draws.
        """
        samples: List[Sample] = []
        indices = range(count)
        for index in (tqdm(indices) if progress_bar else indices):
            s = self.draw(index)
            if s is None:
                raise EmptyInteriorError(len(samples), count, self.max_rejections)
            samples.append(s)
        logger.debug("drew %d level-set samples with seed %d", count, self.seed)
        return samples


def sample_level_set(data: DelzantData, count: int, seed: int, progress_bar: bool = False) -> List[Sample]:
    return LevelSetSampler(data, seed).sample(count, progress_bar)


def samples_frame(samples: List[Sample], seed: int, moduli: bool = False) -> pd.DataFrame:
    return pd.DataFrame([s.to_row(seed, moduli) for s in samples])
