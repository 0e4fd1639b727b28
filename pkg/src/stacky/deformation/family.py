from __future__ import annotations
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple
import logging

from tqdm import tqdm

from .certificate import certify
from ..decorated.decorated_polytope import DecoratedPolytope
from ..error.value_error.combinatorial_change_error import CombinatorialChangeError
from ..error.value_error.degenerate_polytope_error import DegeneratePolytopeError
from ..error.value_error.invalid_at_error import InvalidAtError
from ..error.value_error.out_of_bounds_error import OutOfBoundsError
from ..quasilattice.quasilattice import Quasilattice
from ..scalar.field import FieldElement
from ..scalar.matrix import FieldMatrix

logger = logging.getLogger(__name__)

# defects that mean the face lattice itself changed, as opposed to the datum breaking
COMBINATORIAL_KINDS = ("NotSimple", "NotFullDimensional", "Redundant")


@dataclass
class FamilyReport:
    """
    Outcome of a passing validate_family run.

    Fields:
        samples (int): number of sampled parameter values.
        active_sets (List[Tuple[int, ...]]): the common vertex active sets.
        certificate (Optional[bool]): exact Sturm certificate, None if not requested or not rational.
    """
    samples: int
    active_sets: List[Tuple[int, ...]] = field(default_factory=list)
    certificate: Optional[bool] = None

    def __str__(self) -> str:
        cert = {None: "not available", True: "certified", False: "FAILED"}[self.certificate]
        return (f"pass: {self.samples} samples, {len(self.active_sets)} vertices with constant active sets; "
                f"exact certificate: {cert}")


@dataclass(frozen=True)
class DeformationFamily:
    """
    An affine path τ -> D^τ of decorated polytopes with fixed markers.
    Generators move as (1-τ)·start + τ·end and offsets as (1-τ)·a_f + τ·b_f.

    Fields:
        start (Quasilattice): ∂ at τ = 0.
        end (Quasilattice): ∂ at τ = 1, with the same torsion and m.
        markers (Tuple[Tuple[int, ...], ...]): the fixed q_f.
        offset_paths (Tuple[Tuple[FieldElement, FieldElement], ...]): (a_f, b_f) per facet.
    """
    start: Quasilattice
    end: Quasilattice
    markers: Tuple[Tuple[int, ...], ...]
    offset_paths: Tuple[Tuple[FieldElement, FieldElement], ...]

    DEFAULT_SAMPLES = 101

    def __post_init__(self) -> None:
        if self.start.torsion != self.end.torsion:
            raise ValueError(f"torsion changes along the family: {self.start.torsion} vs {self.end.torsion}")
        if self.start.gen_matrix.shape != self.end.gen_matrix.shape:
            raise ValueError(f"generator shapes differ: {self.start.gen_matrix.shape} vs {self.end.gen_matrix.shape}")
        if self.start.field != self.end.field:
            raise ValueError("endpoints live over different fields")
        if len(self.markers) != len(self.offset_paths):
            raise ValueError(f"{len(self.markers)} markers but {len(self.offset_paths)} offset paths")

    @staticmethod
    def between(D0: DecoratedPolytope, D1: DecoratedPolytope) -> DeformationFamily:
        if D0.markers != D1.markers:
            raise ValueError("the endpoints of a family must share their markers")
        return DeformationFamily(D0.quasilattice, D1.quasilattice, D0.markers,
                                 tuple(zip(D0.offsets, D1.offsets)))

    @staticmethod
    def constant(D: DecoratedPolytope) -> DeformationFamily:
        return DeformationFamily.between(D, D)

    @property
    def field(self):
        return self.start.field

    @property
    def d(self) -> int:
        return len(self.markers)

    def is_rational(self) -> bool:
        entries = [a for q in (self.start, self.end) for row in q.gen_matrix.rows for a in row]
        entries += [a for path in self.offset_paths for a in path]
        return all(a.is_rational() for a in entries)

    def evaluate(self, tau: Fraction) -> DecoratedPolytope:
        """
        The decorated polytope at parameter tau.

        Args:
            tau (Fraction): a rational in [0, 1].

        Raises:
            OutOfBoundsError: tau is outside [0, 1].
        """
        tau = Fraction(tau)
        if not 0 <= tau <= 1:
            raise OutOfBoundsError("tau", tau, 0, 1)
        if tau == 0:
            gen = self.start.gen_matrix
        elif tau == 1:
            gen = self.end.gen_matrix
        else:
            gen = FieldMatrix.from_rows(self.field, [
                [(1 - tau) * u + tau * w for u, w in zip(row_u, row_w)]
                for row_u, row_w in zip(self.start.gen_matrix.rows, self.end.gen_matrix.rows)],
                self.start.m)
        offsets = tuple((1 - tau) * a + tau * b for a, b in self.offset_paths)
        return DecoratedPolytope(Quasilattice(self.start.torsion, gen), self.markers, offsets)

    def validate_family(self, samples: Optional[int] = None, certify_exact: bool = False,
                        progress_bar: bool = False) -> FamilyReport:
        """
        Validates D^τ at τ = k/(samples-1) and checks that every sample has the same vertex active sets.

        Args:
            samples (Optional[int]): at least 2; defaults to DEFAULT_SAMPLES.
            certify_exact (bool): also run the exact Sturm certificate (rational families only).
            progress_bar (bool): show a progress bar over the samples.

        Returns:
            FamilyReport: the common combinatorics.

        Raises:
            CombinatorialChangeError: at the first τ where the face lattice changes.
            InvalidAtError: at the first τ where the datum is invalid for another reason.
        """
        samples = samples if samples is not None else DeformationFamily.DEFAULT_SAMPLES
        if samples < 2:
            raise OutOfBoundsError("samples", samples, 2, "infinity")
        reference: Optional[List[Tuple[int, ...]]] = None
        taus = [Fraction(k, samples - 1) for k in range(samples)]
        for tau in (tqdm(taus) if progress_bar else taus):
            try:
                D = self.evaluate(tau)
                active_sets = [active for _, active in D.polytope.vertices()]
            except DegeneratePolytopeError as e:
                if e.kind in COMBINATORIAL_KINDS:
                    raise CombinatorialChangeError(tau, f"{e.kind}: {e}")
                raise InvalidAtError(tau, f"{e.kind}: {e}")
            except ValueError as e:
                raise InvalidAtError(tau, str(e))
            report = D.validate()
            if not report.valid:
                raise InvalidAtError(tau, str(report.first_failure))
            if reference is None:
                reference = active_sets
            elif active_sets != reference:
                raise CombinatorialChangeError(tau, f"vertex active sets changed from {reference} to {active_sets}")
        logger.debug("family passed at %d samples", samples)
        certificate = certify(self) if certify_exact else None
        return FamilyReport(samples, reference or [], certificate)

    def certify(self) -> Optional[bool]:
        return certify(self)
