import random

import pytest

from stacky.abelian.group import FgAbelianGroup
from stacky.abelian.int_matrix import IntMatrix
from stacky.abelian.normal_form import cokernel, diagonal, hnf, integer_kernel, snf, solve_integer

from oracles import cokernel_order


def random_matrix(rng: random.Random, max_dim: int = 5, max_entry: int = 10) -> IntMatrix:
    rows, cols = rng.randint(1, max_dim), rng.randint(1, max_dim)
    return IntMatrix.from_rows([[rng.randint(-max_entry, max_entry) for _ in range(cols)] for _ in range(rows)])


def test_snf_of_diag_2_4():
    S, U, V = snf(IntMatrix.from_rows([[2, 0], [0, 4]]))
    assert diagonal(S) == [2, 4]
    assert str(cokernel(IntMatrix.from_rows([[2, 0], [0, 4]]))) == "Z/2 x Z/4"

def test_snf_fixes_divisibility():
    S, U, V = snf(IntMatrix.from_rows([[2, 0], [0, 3]]))
    assert diagonal(S) == [1, 6]
    assert U @ IntMatrix.from_rows([[2, 0], [0, 3]]) @ V == S

def test_hnf_example():
    A = IntMatrix.from_rows([[2, 4], [1, 3]])
    H, U = hnf(A)
    assert H == IntMatrix.from_rows([[1, 1], [0, 2]])
    assert U @ A == H
    assert abs(U.det()) == 1

def test_hnf_is_row_equivalent_to_other_echelon_forms():
    # [[1, 3], [0, 2]] is an echelon form of the same row lattice, but not the reduced one
    H, _ = hnf(IntMatrix.from_rows([[2, 4], [1, 3]]))
    other, _ = hnf(IntMatrix.from_rows([[1, 3], [0, 2]]))
    assert H == other

def test_zero_matrix():
    S, U, V = snf(IntMatrix.zeros(2, 3))
    assert S.is_zero()
    assert cokernel(IntMatrix.zeros(2, 3)) == FgAbelianGroup(2)

@pytest.mark.parametrize("seed", range(200))
def test_snf_properties(seed):
    rng = random.Random(seed)
    A = random_matrix(rng)
    S, U, V = snf(A)
    assert U @ A @ V == S
    assert abs(U.det()) == 1
    assert abs(V.det()) == 1
    d = diagonal(S)
    for i in range(S.rows):
        for j in range(S.cols):
            if i != j:
                assert S[i, j] == 0
    nonzero = [x for x in d if x != 0]
    assert all(x > 0 for x in d if x != 0)
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    assert d[:len(nonzero)] == nonzero

@pytest.mark.parametrize("seed", range(200))
def test_hnf_properties(seed):
    rng = random.Random(1000 + seed)
    A = random_matrix(rng)
    H, U = hnf(A)
    assert U @ A == H
    assert abs(U.det()) == 1
    assert hnf(H)[0] == H
    rows = H.to_lists()
    last = -1
    for row in rows:
        nonzero = [j for j, x in enumerate(row) if x != 0]
        if not nonzero:
            continue
        p = nonzero[0]
        assert p > last
        assert row[p] > 0
        for above in rows[:rows.index(row)]:
            assert 0 <= above[p] < row[p]
        last = p

@pytest.mark.parametrize("seed", range(200))
def test_cokernel_order_matches_coset_enumeration(seed):
    rng = random.Random(5000 + seed)
    rows, cols = rng.randint(1, 3), rng.randint(1, 4)
    A = IntMatrix.from_rows([[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)])
    group = cokernel(A)
    expected = cokernel_order(A.columns(), A.rows)
    if expected is None:
        return
    if group.order is not None and group.order <= 200:
        assert group.order == expected

def test_integer_kernel():
    A = IntMatrix.from_rows([[-1, 0, 1], [0, -1, 1]])
    K = integer_kernel(A)
    assert K.columns() == [(1, 1, 1)]
    assert (A @ K).is_zero()

def test_integer_kernel_of_full_rank_is_empty():
    assert integer_kernel(IntMatrix.identity(3)).shape == (3, 0)

def test_solve_integer():
    A = IntMatrix.from_rows([[2, 0], [0, 3]])
    x, kernel = solve_integer(A, [4, 9])
    assert x == (2, 3)
    assert kernel.cols == 0
    assert solve_integer(A, [1, 0])[0] is None

def test_solve_integer_with_kernel():
    A = IntMatrix.from_rows([[1, 1]])
    x, kernel = solve_integer(A, [5])
    assert sum(x) == 5
    assert kernel.columns() in ([(1, -1)], [(-1, 1)])


def test_group_text():
    assert str(FgAbelianGroup.trivial()) == "trivial"
    assert str(FgAbelianGroup(1)) == "Z"
    assert str(FgAbelianGroup(2, (2, 4))) == "Z^2 x Z/2 x Z/4"

def test_group_from_cyclic_orders():
    assert FgAbelianGroup.from_cyclic_orders([2, 3]) == FgAbelianGroup(0, (6,))
    assert FgAbelianGroup.from_cyclic_orders([4, 6, 0, 1]) == FgAbelianGroup(1, (2, 12))
    assert FgAbelianGroup.from_cyclic_orders([1, -1]).is_trivial()

def test_group_order():
    assert FgAbelianGroup(0, (2, 4)).order == 8
    assert FgAbelianGroup(1).order is None
    assert FgAbelianGroup.trivial().order == 1

def test_direct_sum():
    assert FgAbelianGroup(1).direct_sum(FgAbelianGroup(0, (2,))) == FgAbelianGroup(1, (2,))

@pytest.mark.parametrize("torsion", [(1,), (3, 2), (0,)])
def test_invalid_invariant_factors(torsion):
    with pytest.raises(ValueError):
        FgAbelianGroup(0, torsion)

def test_int_matrix_shapes():
    A = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert A.shape == (2, 3)
    assert A.transpose().shape == (3, 2)
    assert A.column(1) == (2, 5)
    assert A.hstack(IntMatrix.identity(2)).shape == (2, 5)
    assert A.apply([1, 0, -1]) == (-2, -2)
    assert IntMatrix.from_columns([], 2).shape == (2, 0)
    with pytest.raises(ValueError):
        IntMatrix.from_rows([[1], [1, 2]])

def test_int_matrix_has_no_overflow():
    big = 2 ** 80
    A = IntMatrix.diagonal([big, big])
    assert (A @ A)[0, 0] == big * big
