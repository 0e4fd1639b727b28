from __future__ import annotations
from typing import FrozenSet, Iterator, List, Optional, Sequence, Set
import logging

from .iso_witness import IsoWitness
from ..decorated.decorated_polytope import DecoratedPolytope
from ..error.value_error.too_many_facets_error import TooManyFacetsError
from ..scalar.field import FieldElement
from ..scalar.matrix import FieldMatrix, Vector, dot

logger = logging.getLogger(__name__)


class IsomorphismSearch:
    """
    Exhaustive search over facet bijections that preserve vertex incidences.
    Bijections are tried in lexicographic order, and for each one T is forced by the
        normals at the first vertex, so the first witness found is the minimal one.
    """
    MAX_FACETS = 10

    def __init__(self, max_facets: Optional[int] = None):
        self.max_facets = max_facets if max_facets is not None else IsomorphismSearch.MAX_FACETS

    @staticmethod
    def _bijections(d: int, source: List[FrozenSet[int]], target: Set[FrozenSet[int]]) -> Iterator[List[int]]:
        sigma: List[int] = []
        used = [False] * d

        def consistent() -> bool:
            k = len(sigma)
            for active in source:
                if max(active) == k - 1 and frozenset(sigma[i] for i in active) not in target:
                    return False
            return True

        def extend() -> Iterator[List[int]]:
            if len(sigma) == d:
                yield list(sigma)
                return
            for j in range(d):
                if used[j]:
                    continue
                sigma.append(j)
                used[j] = True
                if consistent():
                    yield from extend()
                sigma.pop()
                used[j] = False

        return extend()

    def _witness_for(self, D: DecoratedPolytope, D2: DecoratedPolytope, sigma: Sequence[int],
                     base: Sequence[int], note: str) -> Optional[IsoWitness]:
        M = FieldMatrix.from_columns(D.field, [D.normals[i] for i in base], D.n)
        M2 = FieldMatrix.from_columns(D.field, [D2.normals[sigma[i]] for i in base], D.n)
        T = M2 @ M.inverse()
        if any(T.apply(D.normals[f]) != D2.normals[sigma[f]] for f in range(D.d)):
            return None
        T_inv = T.inverse()
        if any(D2.quasilattice.contains(T.apply(g)) is None for g in D.quasilattice.gen_matrix.columns()):
            return None
        if any(D.quasilattice.contains(T_inv.apply(g)) is None for g in D2.quasilattice.gen_matrix.columns()):
            return None
        system = FieldMatrix.from_rows(D.field, D.normals, D.n)
        c = system.solve([D2.offsets[sigma[f]] - D.offsets[f] for f in range(D.d)])
        if c is None:
            return None
        return IsoWitness(T, c, tuple(sigma), note)

    def find(self, D: DecoratedPolytope, D2: DecoratedPolytope) -> Optional[IsoWitness]:
        """
        Args:
            D (DecoratedPolytope): a valid decorated polytope.
            D2 (DecoratedPolytope): another one of the same dimension.

        Returns:
            Optional[IsoWitness]: the lexicographically first witness, or None.

        Raises:
            TooManyFacetsError: more facets than max_facets.
        """
        if D.n != D2.n or D.d != D2.d or D.field != D2.field:
            return None
        if D.d > self.max_facets:
            raise TooManyFacetsError(D.d, self.max_facets, "isomorphism search")
        kernel = D.quasilattice.kernel()
        if kernel != D2.quasilattice.kernel():
            logger.debug("kernels differ: %s vs %s", kernel, D2.quasilattice.kernel())
            return None
        source = [frozenset(active) for _, active in D.polytope.vertices()]
        target = {frozenset(active) for _, active in D2.polytope.vertices()}
        if len(source) != len(target):
            return None
        note = f"ker ∂ ≅ ker ∂' ≅ {kernel}"
        base = D.polytope.vertices()[0][1]
        tried = 0
        for sigma in self._bijections(D.d, source, target):
            tried += 1
            witness = self._witness_for(D, D2, sigma, base, note)
            if witness is not None:
                logger.debug("witness found after %d candidate bijections", tried)
                return witness
        logger.debug("no witness among %d candidate bijections", tried)
        return None


def are_isomorphic(D: DecoratedPolytope, D2: DecoratedPolytope, max_facets: Optional[int] = None) -> Optional[IsoWitness]:
    return IsomorphismSearch(max_facets).find(D, D2)


def transport(D: DecoratedPolytope, T: FieldMatrix, c: Sequence) -> DecoratedPolytope:
    """
    The image of D under an invertible map T and a translation c: generators become T·∂,
        markers stay, and offsets become L_f + <c, λ_f>.
    """
    c = tuple(a if isinstance(a, FieldElement) else D.field.from_rational(a) for a in c)
    offsets = tuple(L + dot(c, normal) for L, normal in zip(D.offsets, D.normals))
    return DecoratedPolytope(D.quasilattice.transformed(T), D.markers, offsets)
