import random
from itertools import combinations, permutations

import pytest
from hypothesis import given

from s7omega import ArgumentError, NotValidatedError, OmegaMatrix, check_condition, sign_epsilon
from s7omega.linalg import det_exact
from s7omega.omega import adjacency_graph, kernel_vector, plucker_check

from conftest import WORKED, valid_omegas


def brute_minor(rows, p, q):
    return det_exact([r for i, r in enumerate(rows, start=1) if i not in (p, q)])


def test_worked_minors(worked):
    got = tuple(worked.minor(p, q) for p, q in combinations(range(1, 5), 2))
    assert got == (-5, -3, -1, 1, 2, 1)


def test_minor_symmetric_and_checked(worked):
    assert worked.minor(3, 1) == worked.minor(1, 3)
    with pytest.raises(ArgumentError):
        worked.minor(2, 2)
    with pytest.raises(ArgumentError):
        worked.minor(0, 1)


@given(valid_omegas(ks=(1, 2, 3, 4)))
def test_minors_match_direct_determinants(omega):
    rows = [list(r) for r in omega.entries]
    for (p, q), d in omega.minors.items():
        assert d == brute_minor(rows, p, q)


def test_shape_rejected():
    with pytest.raises(ArgumentError):
        OmegaMatrix([[1, 0], [0, 1], [1, 1]])
    with pytest.raises(ArgumentError):
        OmegaMatrix([[1.5], [1], [1]])


def test_condition_examples():
    assert check_condition(OmegaMatrix([[1], [1], [1]])).valid
    zero = check_condition(OmegaMatrix([[0], [1], [1]]))
    assert not zero.valid and zero.failing_pairs == ((2, 3),)
    gcd = check_condition(OmegaMatrix([[2], [2], [1]]))
    assert not gcd.valid and gcd.nonzero_ok and not gcd.gcd_ok
    assert "p=3" in gcd.describe()


def test_unvalidated_use_raises():
    from s7omega.classes import v_class

    with pytest.raises(NotValidatedError):
        v_class(OmegaMatrix(WORKED), 1)
    with pytest.raises(NotValidatedError):
        OmegaMatrix([[2], [2], [1]]).validate()


def test_worked_signs(worked):
    eps = sign_epsilon(worked)
    assert (eps(1, 2), eps(1, 3), eps(2, 3), eps(3, 4)) == (-1, 1, 1, 1)
    assert eps(3, 1) == -1


@given(valid_omegas(ks=(1, 2, 3)))
def test_signs_antisymmetric(omega):
    eps = sign_epsilon(omega)
    for p, q in permutations(range(1, omega.n + 1), 2):
        assert eps(p, q) == -eps(q, p)
        assert eps(p, q) in (-1, 1)


@given(valid_omegas(ks=(1, 2, 3, 4)))
def test_kernel_vectors_annihilate_columns(omega):
    for p in range(1, omega.n + 1):
        w = kernel_vector(omega, p)
        assert w[p - 1] == 0
        for j in range(omega.k):
            assert sum(w[i] * omega.entries[i][j] for i in range(omega.n)) == 0


def test_worked_kernel_vector(worked):
    assert kernel_vector(worked, 1) == (0, -5, 3, -1)


def test_worked_adjacency_cycle(worked):
    g = adjacency_graph(worked)
    assert g.is_single_cycle()
    order = g.cyclic_order()
    assert sorted(order) == [1, 2, 3, 4]
    edges = {frozenset(e) for e in zip(order, order[1:] + order[:1])}
    assert edges == {frozenset(e) for e in g.edges}


@given(valid_omegas(ks=(2, 3, 4)))
def test_adjacency_is_single_cycle(omega):
    g = adjacency_graph(omega)
    assert g.is_single_cycle()
    assert all(g.degree(v) == 2 for v in range(1, omega.n + 1))


def test_plucker_random_matrices():
    rng = random.Random(11)
    for _ in range(200):
        k = rng.choice((2, 3))
        omega = OmegaMatrix([[rng.randint(-6, 6) for _ in range(k)] for _ in range(k + 2)])
        for s in combinations(range(1, k + 3), 4):
            assert plucker_check(omega, *s)
