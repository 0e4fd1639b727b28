from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import gcd, lcm
from typing import Dict, List, Optional, Sequence, Tuple
import logging

from tqdm import tqdm

from .face import Face
from ..error.value_error.empty_polytope_error import EmptyPolytopeError
from ..error.value_error.not_full_dimensional_error import NotFullDimensionalError
from ..error.value_error.not_simple_error import NotSimpleError
from ..error.value_error.redundant_facet_error import RedundantFacetError
from ..error.value_error.too_many_facets_error import TooManyFacetsError
from ..error.value_error.unbounded_error import UnboundedError
from ..error.value_error.zero_normal_error import ZeroNormalError
from ..scalar.field import FieldElement, RealAlgebraicField
from ..scalar.matrix import FieldMatrix, Vector, dot
from ..structures.bound import Bound

logger = logging.getLogger(__name__)

Vertex = Tuple[Vector, Tuple[int, ...]]


@dataclass(frozen=True)
class HPolytope:
    """
    A polytope {ξ : <ξ, normal_i> <= offset_i for all i} over a real algebraic field.
    Vertices are enumerated exhaustively over n-subsets of facets, so the input
        must be simple, bounded, full-dimensional and irredundant; anything else
        raises a DegeneratePolytopeError subclass naming the defect.

    Fields:
        field (RealAlgebraicField): the coordinate field.
        normals (Tuple[Vector, ...]): outward facet normals.
        offsets (Tuple[FieldElement, ...]): right-hand sides.
    """
    field: RealAlgebraicField
    normals: Tuple[Vector, ...]
    offsets: Tuple[FieldElement, ...]

    MAX_FACETS = 12

    def __post_init__(self) -> None:
        if len(self.normals) != len(self.offsets):
            raise ValueError(f"{len(self.normals)} normals but {len(self.offsets)} offsets")
        if len({len(a) for a in self.normals}) > 1:
            raise ValueError("facet normals have different lengths")

    def __str__(self) -> str:
        lines = [f"<{', '.join(str(a) for a in normal)}> <= {offset}"
                 for normal, offset in zip(self.normals, self.offsets)]
        return "HPolytope(" + "; ".join(lines) + ")"

    @staticmethod
    def from_rows(field: RealAlgebraicField, normals: Sequence[Sequence], offsets: Sequence) -> HPolytope:
        """Builds a polytope, coercing ints and Fractions into the field."""
        coerce = lambda a: a if isinstance(a, FieldElement) else field.from_rational(a)
        return HPolytope(field,
                         tuple(tuple(coerce(a) for a in normal) for normal in normals),
                         tuple(coerce(b) for b in offsets))

    @property
    def n(self) -> int:
        return len(self.normals[0]) if self.normals else 0

    @property
    def d(self) -> int:
        return len(self.normals)

    def slacks(self, point: Sequence[FieldElement]) -> Tuple[FieldElement, ...]:
        """offset_i - <point, normal_i> for every facet; all nonnegative exactly when point is in P."""
        return tuple(b - dot(point, a) for a, b in zip(self.normals, self.offsets))

    def contains(self, point: Sequence[FieldElement]) -> bool:
        return all(s.sign() >= 0 for s in self.slacks(point))

    def _check_bounded(self) -> None:
        matrix = FieldMatrix.from_rows(self.field, self.normals, self.n)
        if matrix.rank() < self.n:
            raise UnboundedError(matrix.kernel()[0])
        # a nonzero recession cone of a pointed polyhedron has an extreme ray,
        # and an extreme ray is cut out by n-1 independent tight normals
        for subset in combinations(range(self.d), self.n - 1):
            sub = FieldMatrix.from_rows(self.field, [self.normals[i] for i in subset], self.n)
            kernel = sub.kernel()
            if len(kernel) != 1:
                continue
            for direction in (kernel[0], tuple(-a for a in kernel[0])):
                if all(dot(direction, a).sign() <= 0 for a in self.normals):
                    raise UnboundedError(direction)

    def vertices(self, max_facets: Optional[int] = None, progress_bar: bool = False) -> List[Vertex]:
        """
        Exact vertex enumeration.

        Args:
            max_facets (Optional[int]): overrides MAX_FACETS.
            progress_bar (bool): show a progress bar over the n-subsets.

        Returns:
            List[Vertex]: (point, active_set) pairs sorted by active_set.

        Raises:
            TooManyFacetsError, ZeroNormalError, UnboundedError, NotSimpleError,
                EmptyPolytopeError, NotFullDimensionalError, RedundantFacetError.
        """
        if max_facets is None and progress_bar is False:
            return self._vertices
        return self._enumerate(max_facets, progress_bar)

    @cached_property
    def _vertices(self) -> List[Vertex]:
        return self._enumerate(None, False)

    def _enumerate(self, max_facets: Optional[int], progress_bar: bool) -> List[Vertex]:
        limit = max_facets if max_facets is not None else HPolytope.MAX_FACETS
        if self.d > limit:
            raise TooManyFacetsError(self.d, limit, "vertex enumeration")
        for i, normal in enumerate(self.normals):
            if all(a.is_zero() for a in normal):
                raise ZeroNormalError(i)
        self._check_bounded()

        found: Dict[Vector, Tuple[int, ...]] = {}
        subsets = list(combinations(range(self.d), self.n))
        for subset in (tqdm(subsets) if progress_bar else subsets):
            system = FieldMatrix.from_rows(self.field, [self.normals[i] for i in subset], self.n)
            if system.det().is_zero():
                continue
            point = system.solve([self.offsets[i] for i in subset])
            if point in found:
                continue
            slacks = self.slacks(point)
            signs = [s.sign() for s in slacks]
            if any(s < 0 for s in signs):
                continue
            active = tuple(i for i, s in enumerate(signs) if s == 0)
            if len(active) > self.n:
                raise NotSimpleError(tuple(str(x) for x in point), active)
            found[point] = active
        if not found:
            raise EmptyPolytopeError(self.d)

        vertices = sorted(found.items(), key=lambda item: item[1])
        center = self._barycenter([p for p, _ in vertices])
        for i, s in enumerate(self.slacks(center)):
            if s.is_zero():
                raise NotFullDimensionalError(i)
        touched = {i for _, active in vertices for i in active}
        for i in range(self.d):
            if i not in touched:
                raise RedundantFacetError(i)
        logger.debug("enumerated %d vertices from %d facets in dimension %d", len(vertices), self.d, self.n)
        return vertices

    def _barycenter(self, points: Sequence[Vector]) -> Vector:
        return tuple(sum(coords, self.field.zero()) / len(points) for coords in zip(*points))

    def barycenter(self) -> Vector:
        return self._barycenter([p for p, _ in self.vertices()])

    def face_lattice(self) -> List[Face]:
        """
        Every face, as the set of all subsets of vertex active sets (simple polytopes only),
            sorted by dimension and then active set. Includes the interior.
        """
        faces = set()
        for _, active in self.vertices():
            for size in range(len(active) + 1):
                faces.update(combinations(active, size))
        return sorted((Face.of(s, self.n) for s in faces), key=lambda f: f.sort_key)

    def vertex_faces(self) -> List[Face]:
        return [Face.of(active, self.n) for _, active in self.vertices()]

    def point_of(self, face: Face) -> Vector:
        """The coordinates of a vertex face."""
        for point, active in self.vertices():
            if active == face.active_set:
                return point
        raise ValueError(f"{face} is not a vertex")

    def ann(self, face: Face) -> List[Vector]:
        """Basis of ann(f): the active facet normals, empty for the interior."""
        return [self.normals[i] for i in face.active_set]

    def bounding_box(self, eps: Fraction = Fraction(1, 10**6)) -> Bound:
        """A rational box containing P, from vertex approximations widened by eps."""
        approx = [[a.approx(eps) for a in point] for point, _ in self.vertices()]
        return Bound.from_points(approx).widen(Fraction(eps))

    def _primitive_direction(self, normal: Vector) -> Optional[Tuple[int, ...]]:
        """The primitive integer vector positively proportional to normal, if the direction is rational."""
        k = next(i for i, a in enumerate(normal) if not a.is_zero())
        ratios = [a / normal[k] for a in normal]
        if not all(r.is_rational() for r in ratios):
            return None
        q = [r.as_rational() for r in ratios]
        scale = lcm(*(x.denominator for x in q))
        ints = [int(x * scale) for x in q]
        g = gcd(*ints)
        sign = 1 if normal[k].sign() > 0 else -1
        return tuple(sign * x // g for x in ints)

    def delzant_conditions(self) -> Dict[str, bool]:
        """
        Delzant's three conditions on the bare polytope: simple, rational, smooth.
        Smoothness asks that the primitive integral normals at each vertex form a Z-basis.
        """
        try:
            vertices = self.vertices()
        except NotSimpleError:
            return {"simple": False, "rational": False, "smooth": False}
        directions = [self._primitive_direction(a) for a in self.normals]
        rational = all(d is not None for d in directions)
        smooth = rational
        if rational:
            for _, active in vertices:
                basis = FieldMatrix.from_rows(self.field, [directions[i] for i in active], self.n)
                if abs(basis.det()) != 1:
                    smooth = False
                    break
        return {"simple": True, "rational": rational, "smooth": smooth}
