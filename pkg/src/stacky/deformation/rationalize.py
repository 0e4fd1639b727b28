from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple
import logging

from .family import DeformationFamily, FamilyReport
from ..abelian.group import FgAbelianGroup
from ..decorated.classification import Classification
from ..decorated.decorated_polytope import DecoratedPolytope
from ..error.value_error.denominator_ceiling_error import DenominatorCeilingError
from ..error.value_error.invalid_at_error import InvalidAtError
from ..error.value_error.not_a_lattice_error import NotALatticeError
from ..error.value_error.not_full_rank_error import NotFullRankError
from ..error.value_error.out_of_bounds_error import OutOfBoundsError
from ..error.value_error.rounding_breaks_combinatorics_error import RoundingBreaksCombinatoricsError
from ..quasilattice.quasilattice import Quasilattice
from ..scalar.field import FieldElement
from ..scalar.matrix import FieldMatrix
from ..utils.rational import nearest_rational

logger = logging.getLogger(__name__)


def _round(a: FieldElement, denom_bound: int) -> Fraction:
    eps = Fraction(1, 1000 * denom_bound ** 2)
    return nearest_rational(a.approx(eps), denom_bound)


def _rationalize(D: DecoratedPolytope, denom_bound: int,
                 samples: Optional[int] = None) -> Tuple[DeformationFamily, FamilyReport]:
    if denom_bound < 1:
        raise OutOfBoundsError("denom_bound", denom_bound, 1, "infinity")
    q = D.quasilattice
    rounded = FieldMatrix.from_rows(D.field, [[_round(a, denom_bound) for a in row] for row in q.gen_matrix.rows],
                                    q.m)
    rank = rounded.rank()
    if rank < q.n:
        raise NotFullRankError(rank, q.n, denom_bound)
    rounded_q = Quasilattice(q.torsion, rounded)
    # rounded entries are rational, so the image is a lattice; move its Hermite basis onto Z^n
    basis = FieldMatrix.from_columns(D.field, [rounded_q.apply(u) for u in rounded_q.image_basis()], q.n)
    end = rounded_q.transformed(basis.inverse())
    offsets = tuple((L, D.field.from_rational(_round(L, denom_bound))) for L in D.offsets)
    family = DeformationFamily(q, end, D.markers, offsets)
    try:
        report = family.validate_family(samples)
    except InvalidAtError as e:
        raise RoundingBreaksCombinatoricsError(denom_bound, e)
    return family, report


def rationalize(D: DecoratedPolytope, denom_bound: int, samples: Optional[int] = None) -> DeformationFamily:
    """
    Deforms D to a rational datum whose quasilattice image is exactly Z^n.
    Every generator entry and offset is rounded to the nearest rational with denominator
        at most denom_bound, and the rounded image lattice is carried onto Z^n by the
        inverse of its Hermite basis.

    Args:
        D (DecoratedPolytope): a valid decorated polytope.
        denom_bound (int): the largest allowed denominator.
        samples (Optional[int]): sample count for validating the family.

    Returns:
        DeformationFamily: the family from D to the rational endpoint.

    Raises:
        NotFullRankError: the rounded generators no longer span R^n.
        RoundingBreaksCombinatoricsError: the family fails validation; retry with a larger bound.
    """
    return _rationalize(D, denom_bound, samples)[0]


@dataclass
class OrbifoldReport:
    """
    Outcome of deforming a decorated polytope to an orbifold-type endpoint.

    Fields:
        family (DeformationFamily): the successful family.
        denom_bound (int): the denominator bound that worked.
        family_report (FamilyReport): its validation.
        classification (Classification): classification of the endpoint.
        global_isotropy (FgAbelianGroup): ker ∂' of the endpoint.
        effective_labels (Optional[Tuple[int, ...]]): Lerman-Tolman labels of the endpoint's effective part.
    """
    family: DeformationFamily
    denom_bound: int
    family_report: FamilyReport
    classification: Classification
    global_isotropy: FgAbelianGroup
    effective_labels: Optional[Tuple[int, ...]]

    def __str__(self) -> str:
        labels = ", ".join(str(k) for k in self.effective_labels) if self.effective_labels else "undefined"
        return (f"endpoint: {self.classification.kind}, global isotropy {self.global_isotropy}\n"
                f"denominator bound: {self.denom_bound}\n"
                f"family: {self.family_report}\n"
                f"effective part labels: ({labels})")


class OrbifoldPipeline:
    """
    Runs rationalize with denominator bounds 1, 2, 4, ... until the family validates.
    """
    DENOM_CEILING = 2 ** 16

    def __init__(self, ceiling: Optional[int] = None, samples: Optional[int] = None):
        self.ceiling = ceiling if ceiling is not None else OrbifoldPipeline.DENOM_CEILING
        self.samples = samples

    def run(self, D: DecoratedPolytope) -> OrbifoldReport:
        """
        Raises:
            DenominatorCeilingError: no bound up to the ceiling keeps the combinatorics.
        """
        bound = 1
        last_error: Optional[Exception] = None
        while bound <= self.ceiling:
            try:
                family, report = _rationalize(D, bound, self.samples)
                break
            except (NotFullRankError, RoundingBreaksCombinatoricsError) as e:
                logger.info("denominator bound %d failed: %s", bound, e)
                last_error = e
                bound *= 2
        else:
            raise DenominatorCeilingError(self.ceiling, last_error)
        endpoint = family.evaluate(Fraction(1))
        try:
            labels = endpoint.effective_part().lt_labels()
        except NotALatticeError:
            labels = None
        return OrbifoldReport(family, bound, report, endpoint.classify(), endpoint.quasilattice.kernel(), labels)


def to_orbifold_pipeline(D: DecoratedPolytope, ceiling: Optional[int] = None,
                         samples: Optional[int] = None) -> OrbifoldReport:
    return OrbifoldPipeline(ceiling, samples).run(D)
