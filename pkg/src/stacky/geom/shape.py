from __future__ import annotations
from math import atan2
from typing import List, Sequence, Tuple

from shapely import affinity, geometry

from ..color.color import Color


class Shape:
    """
    This class encapsulates a convex planar polygon drawn from exact vertices,
        held as a shapely Polygon for SVG emission.

    Fields:
        polygon (geometry.Polygon): the polygon, vertices in counter-clockwise order.
    """
    polygon: geometry.Polygon

    def __init__(self, polygon: geometry.Polygon):
        self.polygon = polygon

    @staticmethod
    def from_vertices(points: Sequence[Tuple[float, float]]) -> Shape:
        """
        Builds the polygon of a convex vertex set, ordering the points by angle around their centroid.

        Args:
            points (Sequence[Tuple[float, float]]): vertices in any order.
        """
        cx = sum(p[0] for p in points) / len(points)
        cy = sum(p[1] for p in points) / len(points)
        ordered: List[Tuple[float, float]] = sorted(points, key=lambda p: atan2(p[1] - cy, p[0] - cx))
        return Shape(geometry.Polygon(ordered))

    def translated(self, dx: float, dy: float = 0.0) -> Shape:
        return Shape(affinity.translate(self.polygon, dx, dy))

    def get_bounds(self) -> Tuple[float, float, float, float]:
        """(min_x, min_y, max_x, max_y)."""
        return self.polygon.bounds

    def to_svg(self, color: Color, scale_factor: float = 1.0) -> str:
        return self.polygon.svg(scale_factor=scale_factor, fill_color=color.to_hex())
