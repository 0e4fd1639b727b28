"""
Hermite and Smith normal forms of integer matrices, and the group computations built on them.

Conventions:
    hnf is row style: U·A = H with H upper echelon, positive pivots, and every
        entry above a pivot reduced into [0, pivot).
    snf returns U·A·V = S with S diagonal, d1 | d2 | ..., all nonnegative.
    Subgroups of Z^r are presented by the columns of a matrix.
"""
from __future__ import annotations
from typing import List, Optional, Sequence, Tuple

from .group import FgAbelianGroup
from .int_matrix import IntMatrix


def _swap_rows(M: List[List[int]], i: int, j: int) -> None:
    M[i], M[j] = M[j], M[i]

def _add_row(M: List[List[int]], target: int, source: int, q: int) -> None:
    """row[target] += q * row[source]"""
    M[target] = [a + q * b for a, b in zip(M[target], M[source])]

def _swap_cols(M: List[List[int]], i: int, j: int) -> None:
    for row in M:
        row[i], row[j] = row[j], row[i]

def _add_col(M: List[List[int]], target: int, source: int, q: int) -> None:
    """col[target] += q * col[source]"""
    for row in M:
        row[target] += q * row[source]


def hnf(A: IntMatrix) -> Tuple[IntMatrix, IntMatrix]:
    """
    Row Hermite normal form.

    Args:
        A (IntMatrix): any integer matrix.

    Returns:
        Tuple[IntMatrix, IntMatrix]: (H, U) with U unimodular and U·A = H.
    """
    H = A.to_lists()
    U = IntMatrix.identity(A.rows).to_lists()
    m = A.rows
    r = 0
    for c in range(A.cols):
        if r == m:
            break
        while True:
            nonzero = [i for i in range(r, m) if H[i][c] != 0]
            if not nonzero:
                break
            p = min(nonzero, key=lambda i: (abs(H[i][c]), i))
            _swap_rows(H, r, p)
            _swap_rows(U, r, p)
            done = True
            for i in range(r + 1, m):
                if H[i][c] != 0:
                    q = H[i][c] // H[r][c]
                    _add_row(H, i, r, -q)
                    _add_row(U, i, r, -q)
                    done = done and H[i][c] == 0
            if done:
                break
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-a for a in H[r]]
            U[r] = [-a for a in U[r]]
        for i in range(r):
            q = H[i][c] // H[r][c]
            if q:
                _add_row(H, i, r, -q)
                _add_row(U, i, r, -q)
        r += 1
    return IntMatrix.from_rows(H, A.cols), IntMatrix.from_rows(U, m)


def snf(A: IntMatrix) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """
    Smith normal form, pivoting on the smallest nonzero absolute value.

    Args:
        A (IntMatrix): any integer matrix.

    Returns:
        Tuple[IntMatrix, IntMatrix, IntMatrix]: (S, U, V) with U, V unimodular and U·A·V = S.
    """
    m, n = A.shape
    S = A.to_lists()
    U = IntMatrix.identity(m).to_lists()
    V = IntMatrix.identity(n).to_lists()
    for t in range(min(m, n)):
        while True:
            candidates = [(abs(S[i][j]), i, j) for i in range(t, m) for j in range(t, n) if S[i][j] != 0]
            if not candidates:
                break
            _, i, j = min(candidates)
            _swap_rows(S, t, i)
            _swap_rows(U, t, i)
            _swap_cols(S, t, j)
            _swap_cols(V, t, j)
            clean = True
            for i in range(t + 1, m):
                q = S[i][t] // S[t][t]
                if q:
                    _add_row(S, i, t, -q)
                    _add_row(U, i, t, -q)
                clean = clean and S[i][t] == 0
            for j in range(t + 1, n):
                q = S[t][j] // S[t][t]
                if q:
                    _add_col(S, j, t, -q)
                    _add_col(V, j, t, -q)
                clean = clean and S[t][j] == 0
            if not clean:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if S[i][j] % S[t][t] != 0), None)
            if bad is None:
                break
            # pull the offending row up; the next pass reduces it below the pivot
            _add_row(S, t, bad[0], 1)
            _add_row(U, t, bad[0], 1)
        if S[t][t] < 0:
            S[t] = [-a for a in S[t]]
            U[t] = [-a for a in U[t]]
    return IntMatrix.from_rows(S, n), IntMatrix.from_rows(U, m), IntMatrix.from_rows(V, n)


def diagonal(S: IntMatrix) -> List[int]:
    return [S[i, i] for i in range(min(S.shape))]


def cokernel(A: IntMatrix) -> FgAbelianGroup:
    """
    The quotient of Z^rows by the subgroup generated by the columns of A.

    Args:
        A (IntMatrix): generator matrix, columns in Z^rows.

    Returns:
        FgAbelianGroup: the invariant-factor decomposition of the quotient.
    """
    S, _, _ = snf(A)
    d = [x for x in diagonal(S) if x != 0]
    return FgAbelianGroup(A.rows - len(d), tuple(x for x in d if x > 1))


def integer_kernel(A: IntMatrix) -> IntMatrix:
    """
    A basis of {x in Z^cols : A x = 0}, returned as the columns of a matrix.
    The basis is the nonzero rows of the Hermite normal form of any kernel basis,
        which makes it independent of the elimination path.
    """
    S, _, V = snf(A)
    rank = len([x for x in diagonal(S) if x != 0])
    raw = [V.column(j) for j in range(rank, A.cols)]
    if not raw:
        return IntMatrix.zeros(A.cols, 0)
    H, _ = hnf(IntMatrix.from_rows(raw, A.cols))
    basis = [row for row in H.to_lists() if any(row)]
    return IntMatrix.from_columns(basis, A.cols)


def solve_integer(A: IntMatrix, b: Sequence[int]) -> Tuple[Optional[Tuple[int, ...]], IntMatrix]:
    """
    Solves A x = b over the integers.

    Args:
        A (IntMatrix): coefficient matrix.
        b (Sequence[int]): right-hand side of length A.rows.

    Returns:
        Tuple[Optional[Tuple[int, ...]], IntMatrix]: a solution, or None when there is
            no integer solution, and a basis of the integer kernel of A (as columns).
    """
    if len(b) != A.rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {A.rows}")
    kernel = integer_kernel(A)
    S, U, V = snf(A)
    c = U.apply([int(x) for x in b])
    d = diagonal(S)
    y = [0] * A.cols
    for i, value in enumerate(c):
        pivot = d[i] if i < len(d) else 0
        if pivot == 0:
            if value != 0:
                return None, kernel
            continue
        if value % pivot != 0:
            return None, kernel
        y[i] = value // pivot
    return V.apply(y), kernel
