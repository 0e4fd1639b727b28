from fractions import Fraction

import pytest

from stacky.cli import document
from stacky.data import asset_path
from stacky.scalar.field import RealAlgebraicField


def load(name: str) -> document.Document:
    return document.load(str(asset_path(name)))


@pytest.fixture
def qq() -> RealAlgebraicField:
    return RealAlgebraicField.rationals()

@pytest.fixture
def sqrt2_field() -> RealAlgebraicField:
    return RealAlgebraicField((-2, 0, 1), (Fraction(1), Fraction(3, 2)))

@pytest.fixture
def cbrt2_field() -> RealAlgebraicField:
    return RealAlgebraicField((-2, 0, 0, 1), (Fraction(1), Fraction(2)))

@pytest.fixture
def triangle():
    return load("triangle").decorated

@pytest.fixture
def weighted_triangle():
    return load("weighted_triangle").decorated

@pytest.fixture
def irrational_doc():
    return load("irrational_triangle")

@pytest.fixture
def irrational_triangle(irrational_doc):
    return irrational_doc.decorated

@pytest.fixture
def square():
    return load("square").decorated

@pytest.fixture
def slab():
    return load("slab").decorated

@pytest.fixture
def shrinking_doc():
    return load("shrinking_triangle")
