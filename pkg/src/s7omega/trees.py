"""Labelled trees on ``{1, ..., n}``, Prufer codes and the weighted matrix-tree identity."""

from __future__ import annotations

import heapq
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Callable, Iterator, Mapping, Sequence

from .exceptions import ArgumentError, BudgetExceededError
from .linalg import IntMatrix, det_cofactor, det_exact
from .poly import IntPolynomial, PolynomialRing

DEFAULT_TREE_BUDGET = 9
SYMBOLIC_BUDGET = 5


def default_tree_budget() -> int:
    """Largest vertex count for which trees are enumerated (``S7_TREE_BUDGET`` overrides)."""
    value = os.environ.get("S7_TREE_BUDGET")
    return int(value) if value else DEFAULT_TREE_BUDGET


def _edge(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class LabeledTree:
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 2:
            raise ArgumentError(f"a tree needs at least 2 vertices, got n = {self.n}")
        edges = frozenset(_edge(a, b) for a, b in self.edges)
        object.__setattr__(self, "edges", edges)
        if len(edges) != self.n - 1:
            raise ArgumentError(f"a tree on {self.n} vertices has {self.n - 1} edges, got {len(edges)}")
        parent = list(range(self.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in edges:
            if not (1 <= a <= self.n and 1 <= b <= self.n) or a == b:
                raise ArgumentError(f"bad edge ({a}, {b}) for n = {self.n}")
            ra, rb = find(a), find(b)
            if ra == rb:
                raise ArgumentError(f"edges {sorted(edges)} contain a cycle")
            parent[ra] = rb

    def neighbours(self, v: int) -> list[int]:
        return sorted(b if a == v else a for a, b in self.edges if v in (a, b))


def _decode_edges(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    # linear-time decoding; degree 0 marks a removed leaf
    degree = [0] + [1] * n
    for x in seq:
        degree[x] += 1
    ptr = 1
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    edges = []
    for x in seq:
        edges.append((leaf, x))
        degree[leaf] = 0
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n))
    return edges


def prufer_decode(seq: Sequence[int], n: int | None = None) -> LabeledTree:
    """The tree on ``[n]`` with Prufer code ``seq``; ``n`` defaults to ``len(seq) + 2``."""
    if n is None:
        n = len(seq) + 2
    if n < 2 or len(seq) != n - 2:
        raise ArgumentError(f"a Prufer code for n = {n} has length {n - 2}, got {len(seq)}")
    for x in seq:
        if not (isinstance(x, int) and 1 <= x <= n):
            raise ArgumentError(f"Prufer label {x!r} outside 1..{n}")
    return LabeledTree(n, frozenset(_edge(a, b) for a, b in _decode_edges(seq, n)))


def prufer_encode(tree: LabeledTree) -> tuple[int, ...]:
    if not isinstance(tree, LabeledTree):
        raise ArgumentError(f"expected a LabeledTree, got {type(tree).__name__}")
    n = tree.n
    nbrs: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
    for a, b in tree.edges:
        nbrs[a].add(b)
        nbrs[b].add(a)
    leaves = [v for v in nbrs if len(nbrs[v]) == 1]
    heapq.heapify(leaves)
    seq = []
    for _ in range(n - 2):
        leaf = heapq.heappop(leaves)
        (parent,) = nbrs.pop(leaf)
        nbrs[parent].discard(leaf)
        seq.append(parent)
        if len(nbrs[parent]) == 1:
            heapq.heappush(leaves, parent)
    return tuple(seq)


def prufer_sequences(n: int) -> Iterator[tuple[int, ...]]:
    return product(range(1, n + 1), repeat=n - 2)


def enumerate_trees(n: int) -> Iterator[LabeledTree]:
    """All ``n^(n-2)`` trees on ``[n]``, in lexicographic Prufer order."""
    if n < 2:
        raise ArgumentError(f"trees need n >= 2, got {n}")
    for seq in prufer_sequences(n):
        yield LabeledTree(n, frozenset(_edge(a, b) for a, b in _decode_edges(seq, n)))


class EdgeWeights:
    """Symmetric integer weights on the edges of the complete graph ``K_n``."""

    def __init__(self, n: int, weights: Mapping[tuple[int, int], int]):
        if n < 2:
            raise ArgumentError(f"need n >= 2, got {n}")
        self.n = n
        w = {}
        for (a, b), value in weights.items():
            if a == b or not (1 <= a <= n and 1 <= b <= n):
                raise ArgumentError(f"bad edge ({a}, {b}) for n = {n}")
            w[_edge(a, b)] = int(value)
        missing = [e for e in combinations(range(1, n + 1), 2) if e not in w]
        if missing:
            raise ArgumentError(f"no weight for edges {missing}")
        self.w = w

    @classmethod
    def uniform(cls, n: int, value: int = 1) -> EdgeWeights:
        return cls(n, {e: value for e in combinations(range(1, n + 1), 2)})

    @classmethod
    def from_omega(cls, omega) -> EdgeWeights:
        """``|Delta_pq|`` weights of an Omega matrix."""
        return cls(omega.n, {pq: abs(d) for pq, d in omega.minors.items()})

    def __getitem__(self, pq: tuple[int, int]) -> int:
        return self.w[_edge(*pq)]

    def table(self) -> list[list[int]]:
        """``(n+1) x (n+1)`` lookup table, 1-based, zero diagonal."""
        t = [[0] * (self.n + 1) for _ in range(self.n + 1)]
        for (a, b), v in self.w.items():
            t[a][b] = t[b][a] = v
        return t

    def __repr__(self) -> str:
        return f"EdgeWeights({self.n}, {self.w!r})"


def _check_budget(n: int, budget: int | None) -> None:
    budget = default_tree_budget() if budget is None else budget
    if n > budget:
        raise BudgetExceededError(
            f"enumerating {n}^{n - 2} trees exceeds the budget of n <= {budget}; "
            "raise it with --tree-budget or S7_TREE_BUDGET, or use the determinant route"
        )


def _partial_sum(table, n: int, first: int | None) -> int:
    # first: restrict to Prufer codes starting with this label (None = all codes)
    prefix = () if first is None else (first,)
    total = 0
    for rest in product(range(1, n + 1), repeat=n - 2 - len(prefix)):
        term = 1
        for a, b in _decode_edges(prefix + rest, n):
            term *= table[a][b]
        total += term
    return total


def _fold_trees(w: EdgeWeights, combine: Callable[[int, int], int], start: int) -> int:
    table = w.table()
    acc = start
    n = w.n
    for seq in prufer_sequences(n):
        term = 1
        for a, b in _decode_edges(seq, n):
            term *= table[a][b]
        acc = combine(acc, term)
    return acc


def tree_order_sum(w: EdgeWeights, budget: int | None = None, workers: int = 1) -> int:
    """Sum over all trees on ``[n]`` of the product of edge weights.

    With ``workers > 1`` the Prufer space is split on the first label and
    the partial sums are added; the result does not depend on the split.
    """
    _check_budget(w.n, budget)
    table = w.table()
    if workers <= 1 or w.n <= 3:
        return _partial_sum(table, w.n, None)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_partial_sum, [table] * w.n, [w.n] * w.n, range(1, w.n + 1))
        return sum(parts)


def tree_product_gcd(w: EdgeWeights, budget: int | None = None) -> int:
    """gcd over all trees of the product of edge weights."""
    _check_budget(w.n, budget)
    return _fold_trees(w, math.gcd, 0)


def _check_ordering(ordering: Sequence[int] | None, n: int) -> tuple[int, ...]:
    if ordering is None:
        return tuple(range(1, n + 1))
    ordering = tuple(ordering)
    if sorted(ordering) != list(range(1, n + 1)):
        raise ArgumentError(f"{ordering} is not a permutation of 1..{n}")
    return ordering


def _laplacian_entries(weight: Callable[[int, int], object], ordering: Sequence[int], zero):
    n = len(ordering)
    a = ordering
    rows = []
    for l in range(1, n):
        row = []
        for m in range(1, n):
            if l == m:
                s = zero
                for j in range(n):
                    if j != m:
                        s = s + weight(a[j], a[m])
                row.append(s)
            else:
                row.append(-weight(a[l], a[m]))
        rows.append(row)
    return rows


def laplacian_minor(w: EdgeWeights, ordering: Sequence[int] | None = None) -> IntMatrix:
    """The weighted Laplacian with the row and column of ``ordering[0]`` removed.

    Rows and columns follow ``ordering[1:]``.
    """
    ordering = _check_ordering(ordering, w.n)
    return IntMatrix(_laplacian_entries(lambda a, b: w[a, b], ordering, 0), cols=w.n - 1)


def matrix_tree_check(w: EdgeWeights, budget: int | None = None, ordering: Sequence[int] | None = None) -> bool:
    return det_exact(laplacian_minor(w, ordering)) == tree_order_sum(w, budget)


def _x_name(a: int, b: int) -> str:
    a, b = _edge(a, b)
    return f"X{a}_{b}"


def edge_ring(n: int) -> PolynomialRing:
    """``Z[X_ab]`` with one indeterminate per unordered pair, lexicographic."""
    return PolynomialRing(_x_name(a, b) for a, b in combinations(range(1, n + 1), 2))


def symbolic_tree_polynomials(n: int, ordering: Sequence[int] | None = None) -> tuple[IntPolynomial, IntPolynomial]:
    """``(det M, sum over trees of edge monomials)`` in ``Z[X_ab]``."""
    if not 2 <= n <= SYMBOLIC_BUDGET:
        raise BudgetExceededError(f"symbolic matrix-tree check is limited to 2 <= n <= {SYMBOLIC_BUDGET}, got {n}")
    ordering = _check_ordering(ordering, n)
    R = edge_ring(n)
    X = {e: R.gen(_x_name(*e)) for e in combinations(range(1, n + 1), 2)}
    entries = _laplacian_entries(lambda a, b: X[_edge(a, b)], ordering, R.zero())
    det = det_cofactor(entries, R.zero())
    trees = R.zero()
    for t in enumerate_trees(n):
        mono = R.one()
        for e in sorted(t.edges):
            mono = mono * X[e]
        trees = trees + mono
    return det, trees


def symbolic_matrix_tree(n: int) -> bool:
    det, trees = symbolic_tree_polynomials(n)
    return det == trees


def ordering_invariant(w: EdgeWeights, orderings=None) -> bool:
    """det of the Laplacian minor is the same for every ordering tried (all, by default)."""
    orderings = permutations(range(1, w.n + 1)) if orderings is None else orderings
    values = {det_exact(laplacian_minor(w, o)) for o in orderings}
    return len(values) == 1
