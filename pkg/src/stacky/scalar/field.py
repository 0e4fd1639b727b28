from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Any, Iterable, List, Optional, Sequence, Tuple, Union
import threading

import sympy
from sympy import Poly, QQ

from ..error.arithmetic_error.division_by_zero_error import DivisionByZeroError
from ..error.value_error.invalid_field_error import InvalidFieldError
from ..utils.rational import format_rational, parse_rational

_X = sympy.Symbol("x")
_REFINE_LOCK = threading.Lock()

Rational = Union[int, Fraction]


def _to_sympy(q: Fraction) -> sympy.Rational:
    return sympy.Rational(q.numerator, q.denominator)

def _to_fraction(c: Any) -> Fraction:
    c = sympy.Rational(c)
    return Fraction(int(c.p), int(c.q))

def _horner(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    value = Fraction(0)
    for c in reversed(coeffs):
        value = value * x + c
    return value


@dataclass(frozen=True, eq=False)
class RealAlgebraicField:
    """
    Encapsulates the number field Q(α) generated by one real algebraic number α.

    Fields:
        min_poly (Tuple[int, ...]): coefficients of the minimal polynomial of α,
            constant term first. Normalized to be primitive with leading coefficient 1.
        root_interval (Tuple[Fraction, Fraction]): rationals (lo, hi) isolating α among
            the real roots of min_poly. Stored as (0, 0) when the degree is 1, since
            the field is then Q itself.
    """
    min_poly: Tuple[int, ...]
    root_interval: Tuple[Fraction, Fraction]

    def __post_init__(self) -> None:
        coeffs = [int(c) for c in self.min_poly]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) < 2:
            raise InvalidFieldError(self.min_poly, "degree must be at least 1")
        content = gcd(*coeffs) if len(coeffs) > 1 else abs(coeffs[0])
        if coeffs[-1] < 0:
            content = -content
        coeffs = [c // content for c in coeffs]
        if coeffs[-1] != 1:
            raise InvalidFieldError(self.min_poly, "not monic after clearing content")
        object.__setattr__(self, "min_poly", tuple(coeffs))
        if len(coeffs) == 2:
            object.__setattr__(self, "root_interval", (Fraction(0), Fraction(0)))
            return

        lo, hi = (parse_rational(x) for x in self.root_interval)
        if not lo < hi:
            raise InvalidFieldError(coeffs, f"root interval ({lo}, {hi}) is empty")
        if not self.poly.is_irreducible:
            raise InvalidFieldError(coeffs, "reducible over Q")
        if self._eval_min_poly(lo) * self._eval_min_poly(hi) >= 0:
            raise InvalidFieldError(coeffs, f"no sign change on ({lo}, {hi})")
        if self.poly.count_roots(_to_sympy(lo), _to_sympy(hi)) != 1:
            raise InvalidFieldError(coeffs, f"({lo}, {hi}) does not isolate exactly one root")
        object.__setattr__(self, "root_interval", (lo, hi))

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, RealAlgebraicField):
            return NotImplemented
        if self.min_poly != other.min_poly:
            return False
        if self.degree == 1 or self.root_interval == other.root_interval:
            return True
        lo = max(self.root_interval[0], other.root_interval[0])
        hi = min(self.root_interval[1], other.root_interval[1])
        return lo < hi and self.poly.count_roots(_to_sympy(lo), _to_sympy(hi)) == 1

    def __hash__(self) -> int:
        return hash(self.min_poly)

    def __str__(self) -> str:
        if self.degree == 1:
            return "Q"
        return f"Q(a), a = root of {self.poly.as_expr()} in ({self.root_interval[0]}, {self.root_interval[1]})"

    def __repr__(self) -> str:
        return f"<RealAlgebraicField: {self.min_poly}>"

    @staticmethod
    def rationals() -> RealAlgebraicField:
        return RealAlgebraicField((0, 1), (Fraction(0), Fraction(0)))

    @property
    def degree(self) -> int:
        return len(self.min_poly) - 1

    @cached_property
    def poly(self) -> Poly:
        return Poly([sympy.Integer(c) for c in reversed(self.min_poly)], _X, domain=QQ)

    def _eval_min_poly(self, x: Fraction) -> Fraction:
        return _horner([Fraction(c) for c in self.min_poly], x)

    def interval(self, steps: int) -> Tuple[Fraction, Fraction]:
        """
        The isolating interval after a number of bisection steps.
        Refinements are memoized on the field, so repeated sign and approximation
            queries share the work.

        Args:
            steps (int): number of halvings of the original root interval.

        Returns:
            Tuple[Fraction, Fraction]: an interval of width (hi-lo)/2**steps containing α.
        """
        with _REFINE_LOCK:
            refinements: List[Tuple[Fraction, Fraction]] = self.__dict__.setdefault(
                "_refinements", [self.root_interval])
            while len(refinements) <= steps:
                lo, hi = refinements[-1]
                mid = (lo + hi) / 2
                at_mid = self._eval_min_poly(mid)
                if at_mid == 0:
                    refinements.append((mid, mid))
                elif (at_mid > 0) == (self._eval_min_poly(lo) > 0):
                    refinements.append((mid, hi))
                else:
                    refinements.append((lo, mid))
            return refinements[steps]

    def element(self, coeffs: Iterable[Rational]) -> FieldElement:
        return FieldElement(self, tuple(Fraction(c) for c in coeffs))

    def from_rational(self, q: Rational) -> FieldElement:
        return FieldElement(self, (Fraction(q),) + (Fraction(0),) * (self.degree - 1))

    def zero(self) -> FieldElement:
        return self.from_rational(0)

    def one(self) -> FieldElement:
        return self.from_rational(1)

    def generator(self) -> FieldElement:
        if self.degree == 1:
            return self.from_rational(Fraction(-self.min_poly[0]))
        return self.element([0, 1])


@dataclass(frozen=True, eq=False)
class FieldElement:
    """
    An exact element c0 + c1·α + ... + c_{D-1}·α^{D-1} of a RealAlgebraicField.
    The coefficient vector is always reduced modulo the minimal polynomial,
        so two elements are equal exactly when their coefficients are.

    Fields:
        field (RealAlgebraicField): the field the element lives in.
        coeffs (Tuple[Fraction, ...]): D rational coefficients, constant first.
    """
    field: RealAlgebraicField
    coeffs: Tuple[Fraction, ...]

    FLOAT_EPS = Fraction(1, 10**17)

    def __post_init__(self) -> None:
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        size = self.field.degree
        if len(coeffs) > size:
            reduced = self._to_poly(coeffs).rem(self.field.poly)
            coeffs = tuple(_to_fraction(c) for c in reversed(reduced.all_coeffs()))
        coeffs = coeffs[:size] + (Fraction(0),) * (size - len(coeffs))
        object.__setattr__(self, "coeffs", coeffs)

    @staticmethod
    def _to_poly(coeffs: Sequence[Fraction]) -> Poly:
        return Poly([_to_sympy(c) for c in reversed(coeffs)] or [0], _X, domain=QQ)

    def _poly(self) -> Poly:
        return self._to_poly(self.coeffs)

    def _from_poly(self, poly: Poly) -> FieldElement:
        return FieldElement(self.field, tuple(_to_fraction(c) for c in reversed(poly.all_coeffs())))

    def _coerce(self, other: Any) -> Optional[FieldElement]:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise ValueError(f"cannot combine elements of {self.field!r} and {other.field!r}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field.from_rational(other)
        return None

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other) if isinstance(other, (FieldElement, int, Fraction)) else None
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            power = "" if k == 0 else ("*a" if k == 1 else f"*a^{k}")
            terms.append(f"{c}{power}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    def __repr__(self) -> str:
        return f"FieldElement({self.to_text()})"

    def to_text(self) -> str:
        """Bracketed coefficient encoding, e.g. [0/1, 1/1] for α in Q(√2)."""
        return "[" + ", ".join(format_rational(c) for c in self.coeffs) + "]"

    def is_zero(self) -> bool:
        """Exact zero test on the reduced coefficients."""
        # min_poly is irreducible and the representative has lower degree,
        # so a nonzero representative never vanishes at α
        return not any(self.coeffs)

    def shares_root(self) -> bool:
        """Whether the representative and min_poly have a common factor."""
        return self._poly().gcd(self.field.poly).degree() > 0

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, tuple(-c for c in self.coeffs))

    def __add__(self, other: Any) -> FieldElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other: Any) -> FieldElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other: Any) -> FieldElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: Any) -> FieldElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_rational():
            return FieldElement(self.field, tuple(c * o.coeffs[0] for c in self.coeffs))
        if self.is_rational():
            return FieldElement(self.field, tuple(self.coeffs[0] * c for c in o.coeffs))
        return self._from_poly((self._poly() * o._poly()).rem(self.field.poly))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        """
        Multiplicative inverse through the extended gcd with the minimal polynomial.

        Raises:
            DivisionByZeroError: the element is zero.
        """
        if self.is_zero():
            raise DivisionByZeroError(1)
        if self.is_rational():
            return self.field.from_rational(1 / self.coeffs[0])
        return self._from_poly(self._poly().invert(self.field.poly))

    def __truediv__(self, other: Any) -> FieldElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise DivisionByZeroError(self)
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> FieldElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __lt__(self, other: Any) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: Any) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: Any) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: Any) -> bool:
        return (self - other).sign() >= 0

    def __abs__(self) -> FieldElement:
        return -self if self.sign() < 0 else self

    def __float__(self) -> float:
        return float(self.approx(FieldElement.FLOAT_EPS))

    @cached_property
    def _lipschitz(self) -> Fraction:
        lo, hi = self.field.root_interval
        radius = max(abs(lo), abs(hi))
        return sum((k * abs(c) * radius ** (k - 1) for k, c in enumerate(self.coeffs) if k > 0), Fraction(0))

    def _enclosure(self, steps: int) -> Tuple[Fraction, Fraction]:
        """Midpoint value and error radius of the element over the refined root interval."""
        lo, hi = self.field.interval(steps)
        return _horner(self.coeffs, (lo + hi) / 2), self._lipschitz * (hi - lo) / 2

    def sign(self) -> int:
        """
        Exact sign. Zero is decided symbolically; otherwise the root interval is
            bisected until the enclosure of the element's value excludes 0,
            which must happen because the value is nonzero.
        """
        if self.is_zero():
            return 0
        if self.is_rational():
            return 1 if self.coeffs[0] > 0 else -1
        steps = 0
        while True:
            value, radius = self._enclosure(steps)
            if abs(value) > radius:
                return 1 if value > 0 else -1
            steps += 1

    def approx(self, eps: Rational) -> Fraction:
        """
        A rational within eps of the element.

        Args:
            eps (Fraction): positive tolerance.

        Returns:
            Fraction: r with |r - a| < eps.
        """
        eps = Fraction(eps)
        if eps <= 0:
            raise ValueError(f"tolerance must be positive, got {eps}")
        if self.is_rational():
            return self.coeffs[0]
        steps = 0
        value, radius = self._enclosure(steps)
        while radius >= eps:
            steps += 1
            value, radius = self._enclosure(steps)
        return value


def arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Exact field arithmetic; op is one of '+', '-', '*', '/' (or the unicode −, ×, ÷)."""
    if op == "+":
        return a + b
    if op in ("-", "−"):
        return a - b
    if op in ("*", "×"):
        return a * b
    if op in ("/", "÷"):
        return a / b
    raise ValueError(f"unknown operation {op!r}")

def sign(a: FieldElement) -> int:
    return a.sign()

def approx(a: FieldElement, eps: Rational) -> Fraction:
    return a.approx(eps)
