from __future__ import annotations
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .field import FieldElement, RealAlgebraicField
from ..error.value_error.dependent_basis_error import DependentBasisError

Vector = Tuple[FieldElement, ...]


def dot(u: Sequence[FieldElement], v: Sequence[FieldElement]) -> FieldElement:
    total = u[0].field.zero() if u else None
    for a, b in zip(u, v):
        total = total + a * b
    return total


@dataclass(frozen=True)
class FieldMatrix:
    """
    An immutable dense matrix over a RealAlgebraicField, with exact Gaussian elimination.

    Fields:
        field (RealAlgebraicField): the coefficient field.
        rows (Tuple[Vector, ...]): the entries, row by row.
        ncols (int): number of columns, kept explicitly so that 0-row matrices keep their shape.
    """
    field: RealAlgebraicField
    rows: Tuple[Vector, ...]
    ncols: int

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(a) for a in row) for row in self.rows) + "]"

    @staticmethod
    def from_rows(field: RealAlgebraicField, rows: Iterable[Iterable], ncols: Optional[int] = None) -> FieldMatrix:
        """
        Builds a matrix, coercing ints and Fractions into the field.

        Args:
            field (RealAlgebraicField): the coefficient field.
            rows (Iterable[Iterable]): entries as FieldElement, int or Fraction.
            ncols (Optional[int]): needed only when there are no rows.
        """
        coerced = tuple(tuple(a if isinstance(a, FieldElement) else field.from_rational(a) for a in row)
                        for row in rows)
        width = len(coerced[0]) if coerced else (ncols or 0)
        if any(len(row) != width for row in coerced):
            raise ValueError("rows of a matrix must have equal length")
        return FieldMatrix(field, coerced, width)

    @staticmethod
    def from_columns(field: RealAlgebraicField, columns: Sequence[Sequence], nrows: int) -> FieldMatrix:
        if not columns:
            return FieldMatrix.from_rows(field, [[] for _ in range(nrows)], 0)
        return FieldMatrix.from_rows(field, zip(*columns))

    @staticmethod
    def identity(field: RealAlgebraicField, n: int) -> FieldMatrix:
        return FieldMatrix.from_rows(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> FieldMatrix:
        return FieldMatrix.from_rows(self.field, [self.column(j) for j in range(self.ncols)], self.nrows)

    def apply(self, v: Sequence[FieldElement]) -> Vector:
        """Matrix-vector product."""
        if len(v) != self.ncols:
            raise ValueError(f"cannot apply a {self.shape} matrix to a vector of length {len(v)}")
        zero = self.field.zero()
        return tuple(sum((a * b for a, b in zip(row, v)), zero) for row in self.rows)

    def __matmul__(self, other: FieldMatrix) -> FieldMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shapes {self.shape} and {other.shape} do not compose")
        zero = self.field.zero()
        cols = other.columns()
        return FieldMatrix.from_rows(
            self.field,
            [[sum((a * b for a, b in zip(row, col)), zero) for col in cols] for row in self.rows],
            other.ncols)

    def hstack(self, other: FieldMatrix) -> FieldMatrix:
        return FieldMatrix.from_rows(self.field, [a + b for a, b in zip(self.rows, other.rows)],
                                     self.ncols + other.ncols)

    def rref(self) -> Tuple[FieldMatrix, Tuple[int, ...]]:
        """
        Reduced row echelon form.

        Returns:
            Tuple[FieldMatrix, Tuple[int, ...]]: the reduced matrix and its pivot columns.
        """
        rows: List[List[FieldElement]] = [list(row) for row in self.rows]
        pivots: List[int] = []
        r = 0
        for c in range(self.ncols):
            if r == len(rows):
                break
            pivot = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero()), None)
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            inv = rows[r][c].inverse()
            rows[r] = [a * inv for a in rows[r]]
            for i in range(len(rows)):
                if i != r and not rows[i][c].is_zero():
                    factor = rows[i][c]
                    rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        return FieldMatrix.from_rows(self.field, rows, self.ncols), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> List[Vector]:
        """
        Basis of {x : A x = 0}, one vector per free column in increasing order,
            with a 1 in its free column and 0 in the other free columns.
        """
        reduced, pivots = self.rref()
        zero, one = self.field.zero(), self.field.one()
        basis = []
        for free in (j for j in range(self.ncols) if j not in pivots):
            v = [zero] * self.ncols
            v[free] = one
            for i, p in enumerate(pivots):
                v[p] = -reduced.rows[i][free]
            basis.append(tuple(v))
        return basis

    def solve(self, b: Sequence[FieldElement]) -> Optional[Vector]:
        """
        One solution of A x = b with the free variables set to zero, or None when inconsistent.
        """
        if len(b) != self.nrows:
            raise ValueError(f"right-hand side has length {len(b)}, expected {self.nrows}")
        augmented = FieldMatrix.from_rows(self.field, [row + (x,) for row, x in zip(self.rows, b)], self.ncols + 1)
        reduced, pivots = augmented.rref()
        if self.ncols in pivots:
            return None
        x = [self.field.zero()] * self.ncols
        for i, p in enumerate(pivots):
            x[p] = reduced.rows[i][self.ncols]
        return tuple(x)

    def det(self) -> FieldElement:
        if self.nrows != self.ncols:
            raise ValueError(f"determinant of a non-square {self.shape} matrix")
        rows = [list(row) for row in self.rows]
        result = self.field.one()
        for c in range(self.ncols):
            pivot = next((i for i in range(c, self.nrows) if not rows[i][c].is_zero()), None)
            if pivot is None:
                return self.field.zero()
            if pivot != c:
                rows[c], rows[pivot] = rows[pivot], rows[c]
                result = -result
            result = result * rows[c][c]
            inv = rows[c][c].inverse()
            for i in range(c + 1, self.nrows):
                if not rows[i][c].is_zero():
                    factor = rows[i][c] * inv
                    rows[i] = [a - factor * b for a, b in zip(rows[i], rows[c])]
        return result

    def inverse(self) -> FieldMatrix:
        """
        Raises:
            DependentBasisError: the matrix is singular.
        """
        n = self.nrows
        if n != self.ncols:
            raise ValueError(f"inverse of a non-square {self.shape} matrix")
        reduced, pivots = self.hstack(FieldMatrix.identity(self.field, n)).rref()
        if pivots[:n] != tuple(range(n)):
            raise DependentBasisError(n, len([p for p in pivots if p < n]))
        return FieldMatrix.from_rows(self.field, [row[n:] for row in reduced.rows], n)
