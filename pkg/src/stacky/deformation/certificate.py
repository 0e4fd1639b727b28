"""
Exact no-degeneration certificate for deformation families with rational entries.

At a vertex with active facets S, write A(τ) for the matrix of active normals.
The vertex is ξ(τ) = adj(A)·L_S / det(A), and the slack of any other facet g is
    P_g(τ) / det(A(τ)) with P_g = det(A)·L_g - λ_g·adj(A)·L_S.
If neither det(A) nor any P_g has a root on [0, 1], every vertex keeps its active
    set along the whole path, so the combinatorial type is constant.
Roots are counted with Sturm sequences.
"""
from __future__ import annotations
from fractions import Fraction
from typing import List, Optional, Sequence, TYPE_CHECKING
import logging

import sympy
from sympy import Poly, QQ, Rational

if TYPE_CHECKING:
    from .family import DeformationFamily

logger = logging.getLogger(__name__)

TAU = sympy.Symbol("tau")


def _sign_variations(sequence: Sequence[Poly], point: Rational) -> int:
    values = [p.eval(point) for p in sequence]
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

def sturm_root_count(poly: Poly, lo: Fraction = Fraction(0), hi: Fraction = Fraction(1)) -> int:
    """
    Number of distinct real roots of poly in the closed interval [lo, hi].
    Sturm's theorem counts roots in (lo, hi]; a root at lo is added separately.
    """
    if poly.is_zero:
        raise ValueError("the zero polynomial vanishes everywhere")
    lo, hi = Rational(lo.numerator, lo.denominator), Rational(hi.numerator, hi.denominator)
    if poly.degree() < 1:
        return 0
    sequence = [Poly(p, TAU, domain=QQ) for p in sympy.sturm(poly)]
    count = _sign_variations(sequence, lo) - _sign_variations(sequence, hi)
    return count + (1 if poly.eval(lo) == 0 else 0)

def _path(a: Fraction, b: Fraction) -> sympy.Expr:
    return (1 - TAU) * Rational(a.numerator, a.denominator) + TAU * Rational(b.numerator, b.denominator)

def _has_root(expr: sympy.Expr) -> bool:
    poly = Poly(sympy.expand(expr), TAU, domain=QQ)
    return poly.is_zero or sturm_root_count(poly) > 0


def certify(family: DeformationFamily) -> Optional[bool]:
    """
    Args:
        family (DeformationFamily): the family to certify.

    Returns:
        Optional[bool]: None when some entry is irrational (only sampling applies then),
            True when the combinatorial type is certified constant on [0, 1],
            False when some determinant or slack polynomial has a root there.
    """
    if not family.is_rational():
        return None
    start = family.evaluate(Fraction(0))
    end = family.evaluate(Fraction(1))
    normal_paths: List[List[sympy.Expr]] = [
        [_path(a.as_rational(), b.as_rational()) for a, b in zip(u, w)]
        for u, w in zip(start.normals, end.normals)]
    offset_paths = [_path(a.as_rational(), b.as_rational()) for a, b in family.offset_paths]
    for _, active in start.polytope.vertices():
        A = sympy.Matrix([normal_paths[i] for i in active])
        det = sympy.expand(A.det())
        if _has_root(det):
            logger.debug("determinant at %s vanishes on [0, 1]", active)
            return False
        numerator = A.adjugate() * sympy.Matrix([offset_paths[i] for i in active])
        for g in range(family.d):
            if g in active:
                continue
            slack = det * offset_paths[g] - (sympy.Matrix([normal_paths[g]]) * numerator)[0, 0]
            if _has_root(slack):
                logger.debug("slack of f%d at %s vanishes on [0, 1]", g + 1, active)
                return False
    return True
