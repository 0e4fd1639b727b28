"""Brute-force references that share no code with the normal-form routines."""
from itertools import combinations, permutations, product
from typing import List, Optional, Sequence, Tuple

import sympy


def _full_rank_minor(columns: Sequence[Sequence[int]], rows: int) -> Optional[int]:
    for subset in combinations(range(len(columns)), rows):
        det = int(sympy.Matrix([[columns[j][i] for j in subset] for i in range(rows)]).det())
        if det:
            return abs(det)
    return None


def cokernel_order(columns: Sequence[Sequence[int]], rows: int, limit: int = 20000) -> Optional[int]:
    """
    |Z^rows / span(columns)| by closing the generators under addition modulo N,
        where N·Z^rows lies inside the span. None when the quotient is infinite
        or the enumeration would exceed limit points.
    """
    if rows == 0:
        return 1
    N = _full_rank_minor(columns, rows)
    if N is None:
        return None
    if N ** rows > limit:
        return None
    gens = [tuple(x % N for x in col) for col in columns]
    seen = {tuple([0] * rows)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple((a + b) % N for a, b in zip(p, g))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return N ** rows // len(seen)


def coset_count(subgroup: Sequence[Sequence[int]], sublattice: Sequence[Sequence[int]], box: int) -> int:
    """
    Number of cosets of span(sublattice) met by the points of span(subgroup) with
        coefficients in [-box, box]. Equals the index once box is large enough.
    """
    points = set()
    for coeffs in product(range(-box, box + 1), repeat=len(subgroup)):
        points.add(tuple(sum(c * g[i] for c, g in zip(coeffs, subgroup)) for i in range(len(subgroup[0]))))
    sub = sympy.Matrix([list(v) for v in sublattice]).T
    representatives: List[Tuple[int, ...]] = []
    for p in sorted(points):
        if not any(_in_lattice(sub, [a - b for a, b in zip(p, r)]) for r in representatives):
            representatives.append(p)
    return len(representatives)


def _in_lattice(basis: sympy.Matrix, v: Sequence[int]) -> bool:
    solution = basis.pinv() * sympy.Matrix(v)
    return all(x.is_integer for x in solution) and basis * solution == sympy.Matrix(v)


def unimodular_matrices(bound: int) -> List[Tuple[Tuple[int, int], Tuple[int, int]]]:
    """Every 2 x 2 integer matrix with entries in [-bound, bound] and determinant ±1."""
    found = []
    for a, b, c, d in product(range(-bound, bound + 1), repeat=4):
        if abs(a * d - b * c) == 1:
            found.append(((a, b), (c, d)))
    return found


def small_isomorphism_exists(normals, offsets, normals2, offsets2, bound: int = 2) -> bool:
    """
    Whether some unimodular T with entries in [-bound, bound], a facet bijection σ and a
        translation c satisfy T·λ_f = λ'_σ(f) and L'_σ(f) = L_f + <c, λ_f>, for rational
        planar data with both quasilattices equal to Z^2.
    """
    d = len(normals)
    if d != len(normals2):
        return False
    for (a, b), (c, e) in unimodular_matrices(bound):
        image = [(a * x + b * y, c * x + e * y) for x, y in normals]
        for sigma in permutations(range(d)):
            if any(image[f] != tuple(normals2[sigma[f]]) for f in range(d)):
                continue
            system = sympy.Matrix([list(v) for v in normals])
            rhs = sympy.Matrix([offsets2[sigma[f]] - offsets[f] for f in range(d)])
            if system.rank() == system.row_join(rhs).rank():
                return True
    return False
