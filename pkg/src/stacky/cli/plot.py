from __future__ import annotations
from fractions import Fraction
from typing import List

from ..color.color import Color
from ..decorated.decorated_polytope import DecoratedPolytope
from ..deformation.family import DeformationFamily
from ..error.value_error.plot_dimension_error import PlotDimensionError
from ..geom.shape import Shape

START_COLOR = Color.from_hex("1f77b4")
END_COLOR = Color.from_hex("d62728")
EPS = Fraction(1, 10**9)
GAP = 0.25


def polytope_shape(D: DecoratedPolytope) -> Shape:
    """
    Raises:
        PlotDimensionError: D is not planar.
    """
    if D.n != 2:
        raise PlotDimensionError(D.n)
    points = [(float(p[0].approx(EPS)), float(p[1].approx(EPS))) for p, _ in D.polytope.vertices()]
    return Shape.from_vertices(points)


def render(shapes: List[Shape], colors: List[Color]) -> str:
    """SVG 1.1 document with the shapes laid out left to right, y pointing up."""
    placed: List[Shape] = []
    cursor = 0.0
    for shape in shapes:
        min_x, _, max_x, _ = shape.get_bounds()
        placed.append(shape.translated(cursor - min_x))
        cursor += (max_x - min_x) + GAP
    min_y = min(s.get_bounds()[1] for s in placed)
    max_y = max(s.get_bounds()[3] for s in placed)
    width = max(cursor - GAP, 1e-9)
    height = max(max_y - min_y, 1e-9)
    margin = 0.05 * max(width, height)
    view = f"{-margin:.6f} {min_y - margin:.6f} {width + 2 * margin:.6f} {height + 2 * margin:.6f}"
    scale = max(width, height) / 200
    body = "\n".join(s.to_svg(c, scale) for s, c in zip(placed, colors))
    return ('<?xml version="1.0" encoding="UTF-8"?>\n'
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{400 * width / max(width, height):.1f}" height="{400 * height / max(width, height):.1f}" '
            f'viewBox="{view}">\n'
            f'<g transform="matrix(1 0 0 -1 0 {min_y + max_y:.6f})">\n{body}\n</g>\n</svg>\n')


def plot_polytope(D: DecoratedPolytope) -> str:
    return render([polytope_shape(D)], [START_COLOR])


def plot_family(family: DeformationFamily, frames: int) -> str:
    """A strip of frames at τ = k/(frames-1), colored from start to end."""
    if frames < 2:
        return plot_polytope(family.evaluate(Fraction(0)))
    taus = [Fraction(k, frames - 1) for k in range(frames)]
    shapes = [polytope_shape(family.evaluate(tau)) for tau in taus]
    colors = [START_COLOR.lerp(END_COLOR, float(tau)) for tau in taus]
    return render(shapes, colors)
