from __future__ import annotations
from dataclasses import dataclass
from typing import Tuple

from ..decorated.decorated_polytope import DecoratedPolytope
from ..scalar.matrix import FieldMatrix, Vector, dot


@dataclass(frozen=True)
class IsoWitness:
    """
    An isomorphism between two decorated polytopes D and D'.
    T carries each normal λ_f onto λ'_σ(f), its transpose carries Δ' onto Δ + c,
        and L'_σ(f) = L_f + <c, λ_f> for every facet.

    Fields:
        T (FieldMatrix): the n x n Lie algebra map.
        c (Vector): translation in the dual space.
        sigma (Tuple[int, ...]): facet bijection, facet i of D goes to facet sigma[i] of D'.
        kernel_iso_note (str): the common isomorphism type of ker ∂ and ker ∂'.
    """
    T: FieldMatrix
    c: Vector
    sigma: Tuple[int, ...]
    kernel_iso_note: str

    def __str__(self) -> str:
        sigma = ", ".join(f"f{i + 1}->f{j + 1}" for i, j in enumerate(self.sigma))
        return f"T = {self.T}; c = ({', '.join(str(a) for a in self.c)}); sigma: {sigma}; {self.kernel_iso_note}"

    def verify(self, D: DecoratedPolytope, D2: DecoratedPolytope) -> bool:
        """Re-checks every clause of the isomorphism definition for the stored data."""
        if D.n != D2.n or D.d != D2.d or sorted(self.sigma) != list(range(D.d)):
            return False
        if self.T.det().is_zero():
            return False
        for f in range(D.d):
            if self.T.apply(D.normals[f]) != D2.normals[self.sigma[f]]:
                return False
            if D2.offsets[self.sigma[f]] != D.offsets[f] + dot(self.c, D.normals[f]):
                return False
        inverse = self.T.inverse()
        if any(D2.quasilattice.contains(self.T.apply(g)) is None for g in D.quasilattice.gen_matrix.columns()):
            return False
        if any(D.quasilattice.contains(inverse.apply(g)) is None for g in D2.quasilattice.gen_matrix.columns()):
            return False
        if D.quasilattice.kernel() != D2.quasilattice.kernel():
            return False
        mapped = {tuple(sorted(self.sigma[i] for i in active)) for _, active in D.polytope.vertices()}
        return mapped == {active for _, active in D2.polytope.vertices()}

    def inverse(self) -> IsoWitness:
        """The witness of D' ≅ D: T^-1, sigma^-1 and c' = -T^-T c."""
        T_inv = self.T.inverse()
        sigma = [0] * len(self.sigma)
        for i, j in enumerate(self.sigma):
            sigma[j] = i
        c = tuple(-a for a in T_inv.transpose().apply(self.c))
        return IsoWitness(T_inv, c, tuple(sigma), self.kernel_iso_note)

    def compose(self, other: IsoWitness) -> IsoWitness:
        """Given self: D -> D' and other: D' -> D'', the witness of D -> D''."""
        T = other.T @ self.T
        sigma = tuple(other.sigma[j] for j in self.sigma)
        shift = self.T.transpose().apply(other.c)
        c = tuple(a + b for a, b in zip(self.c, shift))
        return IsoWitness(T, c, sigma, self.kernel_iso_note)
