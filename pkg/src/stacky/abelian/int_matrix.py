from __future__ import annotations
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
import sympy


class IntMatrix:
    """
    A rectangular matrix of arbitrary-precision integers, stored as a numpy
        object array so that entries never overflow.

    Fields:
        entries (np.ndarray): object-dtype array of Python ints, shape (rows, cols).
    """
    entries: np.ndarray

    def __init__(self, entries: np.ndarray):
        if entries.ndim != 2:
            raise ValueError(f"an IntMatrix needs a 2D array, got {entries.ndim} dimensions")
        self.entries = entries.astype(object)
        self.entries.flags.writeable = False

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(str(a) for a in row) for row in self.to_lists()) + "]"

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_lists()})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.to_lists() == other.to_lists()

    def __hash__(self) -> int:
        return hash((self.shape, tuple(map(tuple, self.to_lists()))))

    def __getitem__(self, index: Tuple[int, int]) -> int:
        return self.entries[index]

    @staticmethod
    def from_rows(rows: Iterable[Iterable[int]], cols: Optional[int] = None) -> IntMatrix:
        """
        Args:
            rows (Iterable[Iterable[int]]): the entries, row by row.
            cols (Optional[int]): column count, needed only when there are no rows.
        """
        data = [[int(a) for a in row] for row in rows]
        width = len(data[0]) if data else (cols or 0)
        if any(len(row) != width for row in data):
            raise ValueError("rows of an IntMatrix must have equal length")
        array = np.empty((len(data), width), dtype=object)
        for i, row in enumerate(data):
            for j, a in enumerate(row):
                array[i, j] = a
        return IntMatrix(array)

    @staticmethod
    def from_columns(columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
        if not columns:
            return IntMatrix.zeros(rows, 0)
        return IntMatrix.from_rows(zip(*columns)) if rows else IntMatrix.zeros(0, len(columns))

    @staticmethod
    def zeros(rows: int, cols: int) -> IntMatrix:
        return IntMatrix.from_rows([[0] * cols for _ in range(rows)], cols)

    @staticmethod
    def identity(n: int) -> IntMatrix:
        return IntMatrix.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @staticmethod
    def diagonal(values: Sequence[int]) -> IntMatrix:
        n = len(values)
        return IntMatrix.from_rows([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def to_lists(self) -> List[List[int]]:
        return [[int(a) for a in row] for row in self.entries]

    def row(self, i: int) -> Tuple[int, ...]:
        return tuple(int(a) for a in self.entries[i, :])

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(int(a) for a in self.entries[:, j])

    def columns(self) -> List[Tuple[int, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_rows(self.columns(), self.rows)

    def hstack(self, other: IntMatrix) -> IntMatrix:
        if self.rows != other.rows:
            raise ValueError(f"cannot place {self.shape} next to {other.shape}")
        return IntMatrix.from_columns(self.columns() + other.columns(), self.rows)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shapes {self.shape} and {other.shape} do not compose")
        left, right = self.to_lists(), other.columns()
        return IntMatrix.from_rows([[sum(a * b for a, b in zip(row, col)) for col in right] for row in left],
                                   other.cols)

    def apply(self, x: Sequence[int]) -> Tuple[int, ...]:
        if len(x) != self.cols:
            raise ValueError(f"cannot apply a {self.shape} matrix to a vector of length {len(x)}")
        return tuple(sum(a * b for a, b in zip(row, x)) for row in self.to_lists())

    def det(self) -> int:
        if self.rows != self.cols:
            raise ValueError(f"determinant of a non-square {self.shape} matrix")
        if self.rows == 0:
            return 1
        return int(sympy.Matrix(self.to_lists()).det())

    def is_zero(self) -> bool:
        return all(a == 0 for row in self.to_lists() for a in row)
