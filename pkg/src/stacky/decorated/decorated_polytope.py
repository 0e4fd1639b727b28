from __future__ import annotations
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import List, Sequence, Tuple
import logging

from .classification import Classification
from .validation_report import ValidationReport
from ..abelian.group import FgAbelianGroup
from ..abelian.int_matrix import IntMatrix
from ..abelian.normal_form import cokernel, solve_integer
from ..error.value_error.degenerate_polytope_error import DegeneratePolytopeError
from ..error.value_error.not_a_lattice_error import NotALatticeError
from ..error.value_error.too_many_facets_error import TooManyFacetsError
from ..polytope.face import Face
from ..polytope.h_polytope import HPolytope
from ..quasilattice.quasilattice import Quasilattice
from ..scalar.field import FieldElement, RealAlgebraicField
from ..scalar.matrix import FieldMatrix, Vector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DecoratedPolytope:
    """
    A decorated stacky moment polytope stored through its facet data.
    Facet i carries a marker q_i in the free part Z^m of Q; its outward normal is
        λ_i = ∂(q_i) and its label is the subgroup Z·λ_i. The label of a face is the
        sum of the labels of the facets containing it.

    Fields:
        quasilattice (Quasilattice): ∂: Q -> R^n.
        markers (Tuple[Tuple[int, ...], ...]): one q_f per facet.
        offsets (Tuple[FieldElement, ...]): one L_f per facet, for <ξ, λ_f> <= L_f.
    """
    quasilattice: Quasilattice
    markers: Tuple[Tuple[int, ...], ...]
    offsets: Tuple[FieldElement, ...]

    def __post_init__(self) -> None:
        markers = tuple(tuple(int(x) for x in q) for q in self.markers)
        if len(markers) != len(self.offsets):
            raise ValueError(f"{len(markers)} markers but {len(self.offsets)} offsets")
        for q in markers:
            if len(q) != self.quasilattice.m:
                raise ValueError(f"marker {q} does not lie in Z^{self.quasilattice.m}")
        object.__setattr__(self, "markers", markers)
        object.__setattr__(self, "offsets", tuple(
            b if isinstance(b, FieldElement) else self.field.from_rational(b) for b in self.offsets))

    @property
    def field(self) -> RealAlgebraicField:
        return self.quasilattice.field

    @property
    def n(self) -> int:
        return self.quasilattice.n

    @property
    def d(self) -> int:
        return len(self.markers)

    @cached_property
    def normals(self) -> Tuple[Vector, ...]:
        return tuple(self.quasilattice.apply(q) for q in self.markers)

    @cached_property
    def polytope(self) -> HPolytope:
        return HPolytope(self.field, self.normals, self.offsets)

    def validate(self) -> ValidationReport:
        """
        Runs every check and returns the full report; nothing is raised here.
        """
        report = ValidationReport()
        for i, normal in enumerate(self.normals):
            nonzero = any(not a.is_zero() for a in normal)
            report.add("quasirational", f"f{i + 1}", nonzero, "" if nonzero else "∂(marker) is zero")
        report.add("markers", "all", True, f"{self.d} markers in Z^{self.quasilattice.m}")
        try:
            faces = self.polytope.face_lattice()
        except DegeneratePolytopeError as e:
            face = "all" if e.active_set is None else Face.of(e.active_set, self.n).name
            report.add("polytope", face, False, f"{e.kind}: {e}")
            return report
        except TooManyFacetsError as e:
            report.add("polytope", "all", False, f"TooManyFacets: {e}")
            return report
        report.add("polytope", "all", True, f"simple, {len(self.polytope.vertices())} vertices")
        for face in faces:
            if face.is_interior():
                continue
            rank = FieldMatrix.from_rows(self.field, self.polytope.ann(face), self.n).rank()
            independent = rank == face.codim
            report.add("independence", face.name, independent,
                       "" if independent else f"labels span rank {rank} < {face.codim}")
        for face in self.polytope.vertex_faces():
            rank = FieldMatrix.from_rows(self.field, self.polytope.ann(face), self.n).rank()
            report.add("vertex_rank", face.name, rank == self.n,
                       "" if rank == self.n else f"vertex label has rank {rank} < {self.n}")
        return report

    def face_label(self, face: Face) -> IntMatrix:
        """Generators of Λ_f inside Z^m: the markers of the active facets, as columns."""
        return IntMatrix.from_columns([self.markers[i] for i in face.active_set], self.quasilattice.m)

    def face_label_image(self, face: Face) -> List[Vector]:
        return [self.normals[i] for i in face.active_set]

    def face_isotropy(self, face: Face) -> FgAbelianGroup:
        """
        ker ∂ ⊕ (∂(Q) ∩ ann(f)) / Λ_f.
        The quotient is computed upstairs in Z^m: with S the preimage of ann(f) and K
            the integer kernel of ∂, it is S / (Λ_f + K), presented in a basis of S.

        Args:
            face (Face): a face of the underlying polytope.

        Returns:
            FgAbelianGroup: the isotropy group of points in the relative interior of the face.
        """
        S = self.quasilattice.intersect_subspace(self.polytope.ann(face))
        K = self.quasilattice.kernel_basis()
        generators = self.face_label(face).columns() + K.columns()
        coordinates = []
        for g in generators:
            x, _ = solve_integer(S, g)
            if x is None:
                raise ValueError(f"{g} is not in the preimage of ann({face})")
            coordinates.append(x)
        quotient = cokernel(IntMatrix.from_columns(coordinates, S.cols))
        isotropy = quotient.direct_sum(self.quasilattice.kernel())
        logger.debug("isotropy of %s: %s", face, isotropy)
        return isotropy

    def isotropy_table(self) -> List[Tuple[Face, FgAbelianGroup]]:
        return [(face, self.face_isotropy(face)) for face in self.polytope.face_lattice()]

    def lt_labels(self) -> Tuple[int, ...]:
        """
        Lerman-Tolman labels: λ_f = k_f · (primitive outward integral normal).

        Raises:
            NotALatticeError: ker ∂ is nontrivial or ∂(Q) is not Z^n in these coordinates.
        """
        kernel = self.quasilattice.kernel()
        if not kernel.is_trivial():
            raise NotALatticeError(f"ker ∂ is {kernel}")
        if not self.quasilattice.is_discrete():
            raise NotALatticeError(f"the image has rank {self.quasilattice.image_rank()} > {self.n}")
        if not self.quasilattice.is_standard_lattice():
            raise NotALatticeError("the image is a lattice other than Z^n")
        return tuple(gcd(*(int(a.as_rational()) for a in normal)) for normal in self.normals)

    def classify(self) -> Classification:
        kernel = self.quasilattice.kernel()
        if not self.quasilattice.is_discrete():
            return Classification(Classification.QUASIFOLD)
        if not kernel.is_trivial():
            return Classification(Classification.INEFFECTIVE, kernel)
        if all(self.face_isotropy(v).is_trivial() for v in self.polytope.vertex_faces()):
            return Classification(Classification.SMOOTH)
        return Classification(Classification.EFFECTIVE)

    def effective_part(self) -> DecoratedPolytope:
        """
        The same polytope decorated by Q' = ∂(Q) ≅ Z^n, which drops the global isotropy.
        Markers are rewritten in a basis of ∂(Q): the standard basis when ∂(Q) = Z^n,
            the Hermite image basis otherwise.

        Raises:
            NotALatticeError: ∂ is not discrete.
        """
        q = self.quasilattice
        if q.is_standard_lattice():
            columns = FieldMatrix.identity(self.field, self.n).columns()
        else:
            columns = [q.apply(u) for u in q.image_basis()]
        basis = FieldMatrix.from_columns(self.field, columns, self.n)
        markers = []
        for normal in self.normals:
            c = basis.solve(normal)
            if c is None or not all(a.is_rational() and a.as_rational().denominator == 1 for a in c):
                raise ValueError(f"normal {normal} is not an integral combination of the image basis")
            markers.append(tuple(int(a.as_rational()) for a in c))
        return DecoratedPolytope(Quasilattice((), basis), tuple(markers), self.offsets)
