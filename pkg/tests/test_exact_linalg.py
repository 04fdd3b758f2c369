import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from covertrees.errors import DimensionError
from covertrees.exact_linalg import IntMatrix, determinant, first_cofactor
from covertrees.multigraph import Multigraph, laplacian

from conftest import random_connected_multigraph


def cofactor_det(rows):
    """Laplace expansion along the first row. Independent of Bareiss."""
    n = len(rows)
    if n == 0:
        return 1
    total = 0
    for j, x in enumerate(rows[0]):
        if x:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * x * cofactor_det(minor)
    return total


def square(n, lo=-9, hi=9):
    return st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n),
                    min_size=n, max_size=n)


@pytest.mark.parametrize("rows, expected", [
    ([[1, 0], [0, 1]], 1),
    ([[2, 3], [4, 5]], -2),
    ([[3, -1], [-1, 3]], 8),
    ([], 1),
    ([[7]], 7),
    ([[0, 1], [1, 0]], -1),
    ([[0, 0], [0, 5]], 0),
])
def test_determinant_small(rows, expected):
    M = IntMatrix.from_rows(rows) if rows else IntMatrix(0, 0, ())
    assert determinant(M) == expected


# expected values computed by cofactor_det
@pytest.mark.parametrize("rows, expected", [
    ([[9, -7, 6, -1, -8, -9], [-5, 9, 6, 2, 1, -9], [-1, 6, -3, 4, 8, 8],
      [-6, -3, 9, 8, -1, -7], [4, 1, -7, 2, 4, -1], [5, -6, -3, 0, -6, -8]], 317440),
    ([[1, -5, 3, -8, -7, 8], [-6, 2, 9, -8, 7, -3], [-8, -7, 4, 4, -7, -2],
      [-7, 8, 4, -8, 9, -6], [-2, 9, -8, 9, 9, 3], [-8, -2, -8, 8, -5, 0]], 527425),
    ([[-2, 2, 3, -5, -3, -8], [-7, -5, -2, 7, -3, 3], [-9, 5, 6, 5, 3, 6],
      [9, -3, 3, -7, 6, -2], [-9, -1, 7, 4, 6, 3], [-6, -1, -6, -7, 3, 3]], -310068),
])
def test_determinant_6x6_frozen(rows, expected):
    assert determinant(IntMatrix.from_rows(rows)) == expected


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 6).flatmap(square))
def test_determinant_matches_cofactor_oracle(rows):
    assert determinant(IntMatrix.from_rows(rows)) == cofactor_det(rows)


@settings(max_examples=100, deadline=None)
@given(square(4), square(4))
def test_determinant_multiplicative(a, b):
    A, B = IntMatrix.from_rows(a), IntMatrix.from_rows(b)
    assert determinant(A @ B) == determinant(A) * determinant(B)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 6).flatmap(square), st.data())
def test_repeated_row_gives_zero(rows, data):
    n = len(rows)
    i = data.draw(st.integers(0, n - 1))
    j = data.draw(st.integers(0, n - 1).filter(lambda x: x != i))
    rows[j] = list(rows[i])
    assert determinant(IntMatrix.from_rows(rows)) == 0


def test_determinant_does_not_modify_input():
    M = IntMatrix.from_rows([[0, 2, 1], [3, 1, 4], [1, 5, 9]])
    before = M.to_rows()
    determinant(M)
    assert M.to_rows() == before


def test_determinant_pivot_swap_sign():
    assert determinant(IntMatrix.from_rows([[0, 0, 1], [0, 1, 0], [1, 0, 0]])) == -1


def test_zero_column_short_circuits():
    assert determinant(IntMatrix.from_rows([[1, 0, 2], [3, 0, 4], [5, 0, 6]])) == 0


def test_large_entries_exact():
    big = 10 ** 40
    M = IntMatrix.from_rows([[big, 1], [1, big]])
    assert determinant(M) == big * big - 1


def test_determinant_non_square():
    with pytest.raises(DimensionError):
        determinant(IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]]))


def test_first_cofactor_examples():
    assert first_cofactor(IntMatrix.from_rows([[5]]), 0, 0) == 1
    assert first_cofactor(IntMatrix.from_rows([[2, -1], [-1, 2]]), 0, 0) == 2
    tri = laplacian(Multigraph(3, ((0, 1), (1, 2), (0, 2))))
    assert [first_cofactor(tri, i, i) for i in range(3)] == [3, 3, 3]


def test_first_cofactor_sign():
    M = IntMatrix.from_rows([[1, 2], [3, 4]])
    assert first_cofactor(M, 0, 1) == -3
    assert first_cofactor(M, 1, 0) == -2


def test_first_cofactor_errors():
    M = IntMatrix.from_rows([[1, 2], [3, 4]])
    with pytest.raises(IndexError):
        first_cofactor(M, 2, 0)
    with pytest.raises(IndexError):
        first_cofactor(M, 0, -1)
    with pytest.raises(DimensionError):
        first_cofactor(IntMatrix.from_rows([[1, 2]]), 0, 0)


def test_principal_cofactors_of_laplacian_agree(rng):
    for _ in range(40):
        L = laplacian(random_connected_multigraph(rng))
        values = {first_cofactor(L, i, i) for i in range(L.rows)}
        assert len(values) == 1


def test_intmatrix_validation():
    with pytest.raises(DimensionError):
        IntMatrix(2, 2, [1, 2, 3])
    with pytest.raises(TypeError):
        IntMatrix(1, 1, [1.0])
    with pytest.raises(DimensionError):
        IntMatrix.from_rows([[1, 2], [3]])
    M = IntMatrix.identity(2)
    with pytest.raises(AttributeError):
        M.rows = 3
    assert M == IntMatrix.from_rows([[1, 0], [0, 1]])
    assert M.delete(0, 1) == IntMatrix.from_rows([[0]])
