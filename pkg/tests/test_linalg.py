import math
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from s7omega.linalg import (
    GroupElement,
    IntMatrix,
    cokernel,
    det_cofactor,
    det_exact,
    smith_normal_form,
    solve_left,
    unimodular_inverse,
)

from conftest import int_matrices


def leibniz(rows):
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        total += (-1) ** inversions * math.prod(rows[i][perm[i]] for i in range(n))
    return total


def test_det_known_value():
    assert det_exact([[8, -1, -2], [-1, 5, -1], [-2, -1, 4]]) == 124


def test_det_empty_is_one():
    assert det_exact(IntMatrix([], 0)) == 1


def test_det_big_integers_stay_exact():
    big = 10**40
    assert det_exact([[big, 1], [1, big]]) == big * big - 1


@given(int_matrices(max_rows=5, square=True))
def test_bareiss_matches_leibniz(rows):
    assert det_exact(rows) == leibniz(rows)


@given(int_matrices(max_rows=4, square=True))
def test_cofactor_matches_leibniz(rows):
    assert det_cofactor(rows) == leibniz(rows)


def test_det_rejects_non_square():
    with pytest.raises(ValueError):
        det_exact([[1, 2, 3], [4, 5, 6]])


def test_snf_examples():
    assert smith_normal_form([[2, 0], [0, 3]]).diagonal == (1, 6)
    assert smith_normal_form([[2, 4], [6, 8]]).diagonal == (2, 4)


@given(int_matrices())
def test_snf_invariants(rows):
    A = IntMatrix(rows)
    d = smith_normal_form(A)
    assert d.U @ A @ d.V == d.S
    assert d.S.is_diagonal()
    assert abs(det_exact(d.U)) == 1 and abs(det_exact(d.V)) == 1
    diag = [x for x in d.diagonal if x]
    assert all(x > 0 for x in diag)
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))
    assert d.rank == len(diag)


@given(int_matrices(square=True))
def test_snf_product_is_abs_det(rows):
    d = smith_normal_form(rows)
    det = det_exact(rows)
    if det:
        assert math.prod(d.diagonal) == abs(det)
    else:
        assert d.rank < len(rows)


@given(int_matrices(square=True))
def test_unimodular_inverse(rows):
    V = smith_normal_form(rows).V
    assert V @ unimodular_inverse(V) == IntMatrix.identity(V.rows)


@given(int_matrices(), st.data())
def test_solve_left_recovers_combination(rows, data):
    A = IntMatrix(rows)
    x = data.draw(st.lists(st.integers(-5, 5), min_size=A.rows, max_size=A.rows))
    b = [sum(x[i] * A[i, j] for i in range(A.rows)) for j in range(A.cols)]
    y = solve_left(A, b)
    assert y is not None
    assert [sum(y[i] * A[i, j] for i in range(A.rows)) for j in range(A.cols)] == b


def test_solve_left_none_when_not_in_lattice():
    assert solve_left([[2, 0], [0, 2]], [1, 0]) is None


def test_cokernel_structure():
    G = cokernel([[2, 0], [0, 3]])
    assert G.invariant_factors == (6,) and G.free_rank == 0 and G.order == 6
    assert str(G) == "Z/6"
    free = cokernel(IntMatrix([], 2))
    assert free.free_rank == 2 and free.order is None and str(free) == "Z^2"
    assert str(cokernel([[1, 0], [0, 1]])) == "0"


@given(int_matrices(max_rows=4, max_cols=3), st.data())
def test_reduce_is_homomorphism_killing_relations(rows, data):
    A = IntMatrix(rows)
    G = cokernel(A)
    vec = st.lists(st.integers(-20, 20), min_size=A.cols, max_size=A.cols)
    a, b = data.draw(vec), data.draw(vec)
    assert G.reduce([x + y for x, y in zip(a, b)]) == G.add(G.reduce(a), G.reduce(b))
    for i in range(A.rows):
        assert G.reduce(A.row(i)).is_identity()
    assert G.reduce(G.lift(G.reduce(a))) == G.reduce(a)


def test_group_element_identity():
    assert GroupElement((0, 0)).is_identity()
    assert not GroupElement((0, 1)).is_identity()


def test_matrix_basics():
    A = IntMatrix([[1, 2], [3, 4]])
    assert A.T.tolist() == [[1, 3], [2, 4]]
    assert (A @ IntMatrix.identity(2)) == A
    assert (-A)[0, 1] == -2
    assert IntMatrix([], 3).T.shape == (3, 0)
    with pytest.raises(ValueError):
        IntMatrix([[1, 2], [3]])
