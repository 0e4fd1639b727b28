from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import List, Optional, Sequence, Tuple
import logging

from ..abelian.group import FgAbelianGroup
from ..abelian.int_matrix import IntMatrix
from ..abelian.normal_form import hnf, integer_kernel, solve_integer
from ..error.value_error.dependent_basis_error import DependentBasisError
from ..error.value_error.not_a_lattice_error import NotALatticeError
from ..error.value_error.not_spanning_error import NotSpanningError
from ..scalar.field import FieldElement, RealAlgebraicField
from ..scalar.matrix import FieldMatrix, Vector

logger = logging.getLogger(__name__)


def expand(rows: Sequence[Sequence[FieldElement]],
           rhs: Optional[Sequence[FieldElement]] = None) -> Tuple[IntMatrix, Optional[List[int]]]:
    """
    Rewrites a linear system with field coefficients as an integer system in the unknowns.
    Every row splits into D rows, one per coordinate in the basis 1, α, ..., α^(D-1);
        each of those is scaled by the lcm of its denominators.

    Args:
        rows (Sequence[Sequence[FieldElement]]): coefficient rows, all of the same length.
        rhs (Optional[Sequence[FieldElement]]): right-hand side, one entry per row.

    Returns:
        Tuple[IntMatrix, Optional[List[int]]]: the integer matrix and, when rhs is given,
            the integer right-hand side. The right-hand side is None when some scaled
            entry is not an integer, since no integer unknowns can then satisfy the row.
    """
    ncols = len(rows[0]) if rows else 0
    out_rows: List[List[int]] = []
    out_rhs: Optional[List[int]] = [] if rhs is not None else None
    integral = True
    for i, row in enumerate(rows):
        degree = row[0].field.degree if row else (rhs[i].field.degree if rhs is not None else 1)
        for k in range(degree):
            coeffs = [a.coeffs[k] for a in row]
            target = rhs[i].coeffs[k] if rhs is not None else Fraction(0)
            scale = lcm(*(c.denominator for c in coeffs), 1)
            out_rows.append([int(c * scale) for c in coeffs])
            if out_rhs is not None:
                scaled = target * scale
                integral = integral and scaled.denominator == 1
                out_rhs.append(int(scaled) if scaled.denominator == 1 else 0)
    matrix = IntMatrix.from_rows(out_rows, ncols)
    if out_rhs is not None and not integral:
        return matrix, None
    return matrix, out_rhs


@dataclass(frozen=True)
class Quasilattice:
    """
    A homomorphism ∂ from Q = R x Z^m to R^n whose image spans R^n.
    The torsion part R is stored but never enters the linear algebra,
        since ∂ must kill it.

    Fields:
        torsion (Tuple[int, ...]): invariant factors of R.
        gen_matrix (FieldMatrix): n x m matrix whose column i is ∂(e_i).
    """
    torsion: Tuple[int, ...]
    gen_matrix: FieldMatrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "torsion", FgAbelianGroup.from_cyclic_orders(self.torsion).torsion)
        rank = self.gen_matrix.rank()
        if rank != self.n:
            raise NotSpanningError(rank, self.n)

    def __str__(self) -> str:
        tors = " x ".join(f"Z/{d}" for d in self.torsion)
        return f"Quasilattice(Z^{self.m}{' x ' + tors if tors else ''} -> R^{self.n}: {self.gen_matrix})"

    @staticmethod
    def standard(field: RealAlgebraicField, n: int) -> Quasilattice:
        """The identity quasilattice Z^n -> R^n."""
        return Quasilattice((), FieldMatrix.identity(field, n))

    @staticmethod
    def from_columns(field: RealAlgebraicField, columns: Sequence[Sequence], torsion: Sequence[int] = ()) -> Quasilattice:
        n = len(columns[0]) if columns else 0
        return Quasilattice(tuple(torsion), FieldMatrix.from_columns(field, columns, n))

    @property
    def field(self) -> RealAlgebraicField:
        return self.gen_matrix.field

    @property
    def n(self) -> int:
        return self.gen_matrix.nrows

    @property
    def m(self) -> int:
        return self.gen_matrix.ncols

    def apply(self, q: Sequence[int]) -> Vector:
        """∂(q) for q in the free part Z^m."""
        return self.gen_matrix.apply([self.field.from_rational(int(x)) for x in q])

    def transformed(self, B: FieldMatrix) -> Quasilattice:
        """The quasilattice B·∂, for an invertible n x n field matrix B."""
        return Quasilattice(self.torsion, B @ self.gen_matrix)

    @cached_property
    def _expanded(self) -> IntMatrix:
        return expand(self.gen_matrix.rows)[0]

    def contains(self, x: Sequence[FieldElement]) -> Optional[Tuple[int, ...]]:
        """
        Membership in ∂(Q).

        Args:
            x (Sequence[FieldElement]): a vector of length n.

        Returns:
            Optional[Tuple[int, ...]]: q with ∂(q) = x, or None when x is not in the image.
        """
        if len(x) != self.n:
            raise ValueError(f"expected a vector of length {self.n}, got {len(x)}")
        system, rhs = expand(self.gen_matrix.rows, x)
        if rhs is None:
            return None
        solution, _ = solve_integer(system, rhs)
        return solution

    def kernel_basis(self) -> IntMatrix:
        """Basis of the integer kernel of gen_matrix, as m x k columns."""
        return integer_kernel(self._expanded)

    def kernel(self) -> FgAbelianGroup:
        """ker ∂ = R ⊕ (integer kernel of gen_matrix)."""
        free = self.kernel_basis().cols
        return FgAbelianGroup.from_cyclic_orders([0] * free + list(self.torsion))

    def image_rank(self) -> int:
        return self.m - self.kernel_basis().cols

    def is_discrete(self) -> bool:
        return self.image_rank() == self.n

    def intersect_subspace(self, W: Sequence[Sequence[FieldElement]]) -> IntMatrix:
        """
        The subgroup {q in Z^m : ∂(q) in span(W)}; its image under ∂ is ∂(Q) ∩ span(W).

        Args:
            W (Sequence[Sequence[FieldElement]]): linearly independent vectors of length n.

        Returns:
            IntMatrix: m x k matrix whose columns generate the subgroup.

        Raises:
            DependentBasisError: W is linearly dependent.
        """
        if W:
            rank = FieldMatrix.from_rows(self.field, W).rank()
            if rank != len(W):
                raise DependentBasisError(len(W), rank)
        if len(W) == self.n:
            return IntMatrix.identity(self.m)
        if not W:
            return self.kernel_basis()
        # functionals vanishing on W cut out span(W)
        functionals = FieldMatrix.from_rows(self.field, W).kernel()
        conditions = FieldMatrix.from_rows(self.field, functionals) @ self.gen_matrix
        subgroup = integer_kernel(expand(conditions.rows)[0])
        logger.debug("span of %d vectors meets the image in a subgroup of rank %d", len(W), subgroup.cols)
        return subgroup

    def image_basis(self) -> List[Tuple[int, ...]]:
        """
        For discrete ∂, vectors u_1, ..., u_n in Z^m such that ∂(u_1), ..., ∂(u_n)
            is a Z-basis of ∂(Q), chosen through the Hermite normal form.

        Raises:
            NotALatticeError: ∂(Q) is not discrete.
        """
        rank = self.image_rank()
        if rank != self.n:
            raise NotALatticeError(f"the image has rank {rank} but the dimension is {self.n}")
        H, U = hnf(self._expanded.transpose())
        return [U.row(k) for k in range(H.rows) if any(H.row(k))]

    def is_standard_lattice(self) -> bool:
        """Whether ∂(Q) is exactly Z^n in the current coordinates."""
        entries = [a for row in self.gen_matrix.rows for a in row]
        if not all(a.is_rational() and a.as_rational().denominator == 1 for a in entries):
            return False
        one, zero = self.field.one(), self.field.zero()
        for i in range(self.n):
            if self.contains([one if j == i else zero for j in range(self.n)]) is None:
                return False
        generators = IntMatrix.from_rows([[int(a.as_rational()) for a in col] for col in self.gen_matrix.columns()],
                                         self.n)
        H, _ = hnf(generators)
        return [row for row in H.to_lists() if any(row)] == IntMatrix.identity(self.n).to_lists()
