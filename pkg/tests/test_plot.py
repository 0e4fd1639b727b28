import pytest

from stacky.cli.plot import plot_family, plot_polytope, polytope_shape
from stacky.color.color import Color
from stacky.error.value_error.invalid_hex_error import InvalidHexError
from stacky.error.value_error.out_of_bounds_error import OutOfBoundsError
from stacky.geom.shape import Shape


def test_color_hex():
    color = Color.from_hex("#1f77b4")
    assert color == Color(31, 119, 180)
    assert color.to_hex() == "#1f77b4"
    for bad in ("12345", "zzzzzz"):
        with pytest.raises(InvalidHexError):
            Color.from_hex(bad)

def test_color_lerp():
    black, white = Color(0, 0, 0), Color(255, 255, 255)
    assert black.lerp(white, 0.5) == Color(127.5, 127.5, 127.5)
    assert black.lerp(white, 1).to_hex() == "#ffffff"
    with pytest.raises(OutOfBoundsError):
        black.lerp(white, 1.5)


def test_shape_orders_vertices():
    shape = Shape.from_vertices([(1, 1), (0, 0), (1, 0), (0, 1)])
    assert shape.polygon.is_valid
    assert shape.polygon.area == pytest.approx(1)
    assert shape.translated(2).get_bounds() == pytest.approx((2, 0, 3, 1))

def test_polytope_shape(triangle, irrational_triangle):
    assert polytope_shape(triangle).polygon.area == pytest.approx(0.5)
    # vertices (0, 0), (1, 0) and (0, 1/√2)
    assert polytope_shape(irrational_triangle).polygon.area == pytest.approx(0.5 / 2 ** 0.5)

def test_plots(triangle, shrinking_doc):
    assert plot_polytope(triangle).count("<path") == 1
    assert plot_family(shrinking_doc.family, 1).count("<path") == 1
