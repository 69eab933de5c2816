import math
import random
from itertools import combinations, permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from s7omega import BudgetExceededError, EdgeWeights, enumerate_trees, laplacian_minor, prufer_decode, prufer_encode
from s7omega.linalg import det_exact
from s7omega.trees import (
    LabeledTree,
    default_tree_budget,
    matrix_tree_check,
    ordering_invariant,
    symbolic_matrix_tree,
    symbolic_tree_polynomials,
    tree_order_sum,
    tree_product_gcd,
)


def spanning_trees_brute(n):
    """Every (n-1)-subset of edges that is acyclic, by union-find."""
    edges = list(combinations(range(1, n + 1), 2))
    for subset in combinations(edges, n - 1):
        parent = list(range(n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for a, b in subset:
            ra, rb = find(a), find(b)
            if ra == rb:
                ok = False
                break
            parent[ra] = rb
        if ok:
            yield frozenset(subset)


@pytest.mark.parametrize("n", range(2, 8))
def test_cayley_counts(n):
    assert sum(1 for _ in enumerate_trees(n)) == n ** (n - 2)


@pytest.mark.parametrize("n", range(2, 6))
def test_enumeration_matches_brute_force(n):
    got = {frozenset(t.edges) for t in enumerate_trees(n)}
    assert got == set(spanning_trees_brute(n))


@given(st.integers(3, 9).flatmap(lambda n: st.lists(st.integers(1, n), min_size=n - 2, max_size=n - 2)))
def test_prufer_round_trip(seq):
    n = len(seq) + 2
    tree = prufer_decode(seq, n)
    assert len(tree.edges) == n - 1
    assert prufer_encode(tree) == tuple(seq)
    for v in range(1, n + 1):
        assert len(tree.neighbours(v)) == seq.count(v) + 1


def test_labeled_tree_rejects_cycles():
    with pytest.raises(ValueError):
        LabeledTree(3, ((1, 2), (2, 1)))
    with pytest.raises(ValueError):
        LabeledTree(4, ((1, 2), (2, 3), (1, 3)))


def test_worked_laplacian_and_sum(worked):
    w = EdgeWeights.from_omega(worked)
    assert laplacian_minor(w).tolist() == [[8, -1, -2], [-1, 5, -1], [-2, -1, 4]]
    assert tree_order_sum(w) == 124
    assert tree_order_sum(w, workers=2) == 124


def brute_tree_sum(w):
    return sum(math.prod(w[e] for e in t) for t in spanning_trees_brute(w.n))


weights = st.integers(2, 6).flatmap(
    lambda n: st.lists(st.integers(1, 30), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2).map(
        lambda ws: EdgeWeights(n, dict(zip(combinations(range(1, n + 1), 2), ws)))
    )
)


@given(weights)
def test_tree_sum_matches_brute(w):
    assert tree_order_sum(w) == brute_tree_sum(w)


@given(weights)
def test_numeric_matrix_tree(w):
    assert matrix_tree_check(w)
    assert abs(det_exact(laplacian_minor(w))) == tree_order_sum(w)


@given(weights, st.randoms())
def test_ordering_does_not_change_det(w, rnd):
    order = list(range(1, w.n + 1))
    rnd.shuffle(order)
    assert det_exact(laplacian_minor(w, order)) == det_exact(laplacian_minor(w))


def test_uniform_weights_give_cayley():
    assert tree_order_sum(EdgeWeights.uniform(6)) == 6**4


def test_budget_enforced():
    with pytest.raises(BudgetExceededError):
        tree_order_sum(EdgeWeights.uniform(6), budget=5)


def test_env_budget(monkeypatch):
    monkeypatch.setenv("S7_TREE_BUDGET", "4")
    assert default_tree_budget() == 4
    monkeypatch.delenv("S7_TREE_BUDGET")
    assert default_tree_budget() == 9


def test_tree_product_gcd_simple():
    w = EdgeWeights(3, {(1, 2): 2, (1, 3): 3, (2, 3): 5})
    assert tree_product_gcd(w) == 1
    w = EdgeWeights(3, {(1, 2): 2, (1, 3): 4, (2, 3): 6})
    assert tree_product_gcd(w) == 4  # trees 2*4, 2*6, 4*6


@pytest.mark.parametrize("n", range(2, 6))
def test_symbolic_matrix_tree(n):
    assert symbolic_matrix_tree(n)
    det, trees = symbolic_tree_polynomials(n)
    for exps, coeff in trees.sorted_terms():
        assert coeff == 1 and max(exps) <= 1


@pytest.mark.parametrize("n", range(2, 5))
def test_symbolic_det_ordering_invariant(n):
    base, _ = symbolic_tree_polynomials(n)
    for order in permutations(range(1, n + 1)):
        det, _ = symbolic_tree_polynomials(n, order)
        assert det == base


def test_ordering_invariant_helper():
    rng = random.Random(3)
    w = EdgeWeights(4, {e: rng.randint(1, 9) for e in combinations(range(1, 5), 2)})
    assert ordering_invariant(w)
