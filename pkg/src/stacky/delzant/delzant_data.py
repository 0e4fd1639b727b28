from __future__ import annotations
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple
import logging

from ..decorated.decorated_polytope import DecoratedPolytope
from ..polytope.h_polytope import HPolytope, Vertex
from ..scalar.field import FieldElement, RealAlgebraicField
from ..scalar.matrix import FieldMatrix, Vector, dot

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Quadric:
    """
    One level-set equation sum_j coeffs[j]·t_j = rhs, in the variables t_j = π|z_j|^2.

    Fields:
        coeffs (Vector): a kernel vector of λ.
        rhs (FieldElement): sum_j coeffs[j]·L_j.
    """
    coeffs: Vector
    rhs: FieldElement

    def holds(self, t: Sequence[FieldElement]) -> bool:
        return dot(self.coeffs, t) == self.rhs

    def __str__(self) -> str:
        terms = [f"({a})*t{j + 1}" for j, a in enumerate(self.coeffs) if not a.is_zero()]
        return " + ".join(terms) + f" = {self.rhs}"


@dataclass(frozen=True)
class DelzantData:
    """
    The data of the Delzant construction for a decorated polytope with d facets.
    λ: R^d -> R^n sends the j-th standard basis vector to λ_j; its kernel is the Lie
        algebra of the group cutting the level set X = {t >= 0 : all quadrics hold}.

    Fields:
        field (RealAlgebraicField): the coordinate field.
        lam (FieldMatrix): the n x d matrix with column j = λ_j.
        offsets (Tuple[FieldElement, ...]): L_1, ..., L_d.
        kernel_basis (Tuple[Vector, ...]): pivot-normalized basis of ker λ, d - n vectors.
        quadrics (Tuple[Quadric, ...]): one equation per kernel vector.
        polytope (HPolytope): Δ itself, whose vertices bound sampling.
    """
    field: RealAlgebraicField
    lam: FieldMatrix
    offsets: Tuple[FieldElement, ...]
    kernel_basis: Tuple[Vector, ...]
    quadrics: Tuple[Quadric, ...]
    polytope: HPolytope

    @property
    def n(self) -> int:
        return self.lam.nrows

    @property
    def d(self) -> int:
        return self.lam.ncols

    @property
    def vertices(self) -> Tuple[Vertex, ...]:
        return tuple(self.polytope.vertices())

    def t_of(self, xi: Sequence[FieldElement]) -> Vector:
        """t_j = L_j - <ξ, λ_j>."""
        return tuple(L - dot(xi, col) for L, col in zip(self.offsets, self.lam.columns()))

    def in_level_set(self, t: Sequence[FieldElement]) -> bool:
        return all(x.sign() >= 0 for x in t) and all(q.holds(t) for q in self.quadrics)

    def moment_point(self, t: Sequence[FieldElement]) -> Optional[Vector]:
        """
        Recovers ξ from t by solving <ξ, λ_j> = L_j - t_j.

        Returns:
            Optional[Vector]: the unique ξ, or None when the system is inconsistent.
        """
        system = self.lam.transpose()
        return system.solve([L - x for L, x in zip(self.offsets, t)])


def compile(D: DecoratedPolytope) -> DelzantData:
    """
    Compiles λ, ker λ, the quadrics and the vertices of a valid decorated polytope.

    Raises:
        InvalidDecoratedPolytopeError: D fails validation.
    """
    D.validate().raise_if_invalid()
    lam = FieldMatrix.from_columns(D.field, D.normals, D.n)
    kernel = tuple(lam.kernel())
    quadrics = tuple(Quadric(v, dot(v, D.offsets)) for v in kernel)
    logger.debug("compiled %d facets: kernel of rank %d", D.d, len(kernel))
    return DelzantData(D.field, lam, D.offsets, kernel, quadrics, D.polytope)
