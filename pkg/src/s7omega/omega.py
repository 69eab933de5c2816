"""Omega matrices, their maximal minors, and the sign system built on them.

Indices in this module's public API are 1-based: rows of a ``(k+2) x k``
matrix are numbered ``1..k+2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Sequence

from .exceptions import ArgumentError, CrossCheckError, NotValidatedError
from .linalg import IntMatrix, det_exact


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


class OmegaMatrix:
    """A ``(k+2) x k`` integer matrix with cached minors ``Delta_pq``.

    Construction only checks the shape.  Call :func:`check_condition` (or
    :meth:`validate`) before anything that assumes the reduction
    condition; those operations raise :class:`NotValidatedError` otherwise.
    """

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = [list(r) for r in rows]
        if not rows:
            raise ArgumentError("Omega must have at least one row")
        k = len(rows[0])
        if k < 1:
            raise ArgumentError("Omega must have at least one column")
        if len(rows) != k + 2:
            raise ArgumentError(f"Omega must be (k+2) x k; got {len(rows)} rows and {k} columns")
        for r in rows:
            if len(r) != k:
                raise ArgumentError("ragged Omega matrix")
            for x in r:
                if isinstance(x, bool) or int(x) != x:
                    raise ArgumentError(f"non-integer entry {x!r}")
        self.k = k
        self.matrix = IntMatrix(rows, cols=k)
        self._validated = False
        self._report: ConditionReport | None = None

    @property
    def n(self) -> int:
        """Number of rows, ``k + 2``."""
        return self.k + 2

    @property
    def entries(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.matrix.row(i) for i in range(self.n))

    def row(self, p: int) -> tuple[int, ...]:
        self._check_index(p)
        return self.matrix.row(p - 1)

    @property
    def validated(self) -> bool:
        return self._validated

    @cached_property
    def minors(self) -> dict[tuple[int, int], int]:
        """``{(p, q): Delta_pq}`` for ``p < q``, all computed once."""
        out = {}
        for p, q in combinations(range(1, self.n + 1), 2):
            keep = [i for i in range(self.n) if i not in (p - 1, q - 1)]
            out[p, q] = det_exact(self.matrix.submatrix(keep, range(self.k)))
        return out

    def _check_index(self, p: int) -> None:
        if not (isinstance(p, int) and 1 <= p <= self.n):
            raise ArgumentError(f"index {p!r} outside 1..{self.n}")

    def minor(self, p: int, q: int) -> int:
        self._check_index(p)
        self._check_index(q)
        if p == q:
            raise ArgumentError(f"minor needs distinct rows, got p = q = {p}")
        return self.minors[min(p, q), max(p, q)]

    def validate(self) -> OmegaMatrix:
        """Run the reduction-condition check; raise if it fails, else return ``self``."""
        report = check_condition(self)
        if not report.valid:
            raise NotValidatedError(f"Omega fails the reduction condition: {report.describe()}")
        return self

    def require_validated(self) -> None:
        if not self._validated:
            raise NotValidatedError(
                "Omega has not passed check_condition; call check_condition() or validate() first"
            )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OmegaMatrix) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"OmegaMatrix({self.matrix.tolist()!r})"


@dataclass(frozen=True)
class ConditionReport:
    nonzero_ok: bool
    gcd_ok: bool
    failing_pairs: tuple[tuple[int, int], ...] = ()
    failing_rows: tuple[tuple[int, int], ...] = ()  # (p, offending gcd)

    @property
    def valid(self) -> bool:
        return self.nonzero_ok and self.gcd_ok

    def describe(self) -> str:
        if self.valid:
            return "valid"
        bits = []
        if self.failing_pairs:
            bits.append("zero minors at " + ", ".join(f"{{{p},{q}}}" for p, q in self.failing_pairs))
        if self.failing_rows:
            bits.append("non-coprime rows " + ", ".join(f"p={p} (gcd {g})" for p, g in self.failing_rows))
        return "; ".join(bits)


def minor(omega: OmegaMatrix, p: int, q: int) -> int:
    return omega.minor(p, q)


def check_condition(omega: OmegaMatrix) -> ConditionReport:
    """Check that every ``Delta_pq`` is nonzero and each row of minors is coprime."""
    if omega._report is not None:
        return omega._report
    n = omega.n
    failing_pairs = tuple(pq for pq, d in omega.minors.items() if d == 0)
    failing_rows = []
    for p in range(1, n + 1):
        g = math.gcd(*(abs(omega.minor(p, q)) for q in range(1, n + 1) if q != p))
        if g != 1:
            failing_rows.append((p, g))
    report = ConditionReport(not failing_pairs, not failing_rows, failing_pairs, tuple(failing_rows))
    omega._report = report
    omega._validated = report.valid
    return report


@dataclass(frozen=True)
class SignSystem:
    """The antisymmetric signs ``eps(p, q) = (-1)^(p+q) sign(p-q) sign(Delta_pq)``."""

    n: int
    eps: dict[tuple[int, int], int] = field(repr=False)

    def __call__(self, p: int, q: int) -> int:
        try:
            return self.eps[p, q]
        except KeyError:
            raise ArgumentError(f"no sign for ({p}, {q}) with n = {self.n}") from None

    def __getitem__(self, pq: tuple[int, int]) -> int:
        return self(*pq)


def sign_epsilon(omega: OmegaMatrix) -> SignSystem:
    omega.require_validated()
    n = omega.n
    eps = {}
    for p in range(1, n + 1):
        for q in range(1, n + 1):
            if p != q:
                eps[p, q] = (-1) ** (p + q) * _sign(p - q) * _sign(omega.minor(p, q))
    return SignSystem(n, eps)


def kernel_vector(omega: OmegaMatrix, p: int) -> tuple[int, ...]:
    """``w^p``: zero at ``p``, ``eps(p, q) |Delta_pq|`` elsewhere; lies in ker(Omega^t)."""
    omega._check_index(p)
    eps = sign_epsilon(omega)
    return tuple(0 if q == p else eps(p, q) * abs(omega.minor(p, q)) for q in range(1, omega.n + 1))


def plucker_check(omega: OmegaMatrix, p1: int, p2: int, p3: int, p4: int) -> bool:
    """True iff some choice of signs makes the three-term Plucker relation vanish."""
    idx = (p1, p2, p3, p4)
    for p in idx:
        omega._check_index(p)
    if len(set(idx)) != 4:
        raise ArgumentError(f"Plucker relation needs four distinct indices, got {idx}")
    a = omega.minor(p1, p3) * omega.minor(p2, p4)
    b = omega.minor(p2, p3) * omega.minor(p1, p4)
    c = omega.minor(p1, p2) * omega.minor(p3, p4)
    return any(a + s1 * b + s2 * c == 0 for s1 in (1, -1) for s2 in (1, -1))


@dataclass(frozen=True)
class AdjacencyGraph:
    n: int
    edges: frozenset[tuple[int, int]]
    degenerate: bool = False  # k = 1: every pair is vacuously adjacent

    def degree(self, v: int) -> int:
        return sum(v in e for e in self.edges)

    def is_single_cycle(self) -> bool:
        """Connected, 2-regular and spanning."""
        if len(self.edges) != self.n or any(self.degree(v) != 2 for v in range(1, self.n + 1)):
            return False
        nbrs = {v: [] for v in range(1, self.n + 1)}
        for a, b in self.edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        seen, stack = {1}, [1]
        while stack:
            for w in nbrs[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def cyclic_order(self) -> tuple[int, ...]:
        """Vertices in cycle order starting from 1 towards its smaller neighbour."""
        if not self.is_single_cycle():
            raise ArgumentError("graph is not a single cycle")
        nbrs = {v: sorted(w for e in self.edges if v in e for w in e if w != v) for v in range(1, self.n + 1)}
        order = [1, nbrs[1][0]]
        while len(order) < self.n:
            prev, cur = order[-2], order[-1]
            order.append(next(w for w in nbrs[cur] if w != prev))
        return tuple(order)


def adjacency_graph(omega: OmegaMatrix) -> AdjacencyGraph:
    """Pairs ``{p, q}`` with ``eps(p, r) * eps(q, r)`` constant over ``r``.

    For ``k >= 2`` the result must be one cycle through all ``k + 2``
    vertices; anything else raises :class:`CrossCheckError`.
    """
    eps = sign_epsilon(omega)
    n = omega.n
    if omega.k == 1:
        return AdjacencyGraph(n, frozenset(combinations(range(1, n + 1), 2)), degenerate=True)
    edges = set()
    for p, q in combinations(range(1, n + 1), 2):
        products = {eps(p, r) * eps(q, r) for r in range(1, n + 1) if r not in (p, q)}
        if len(products) == 1:
            edges.add((p, q))
    graph = AdjacencyGraph(n, frozenset(edges))
    if not graph.is_single_cycle():
        raise CrossCheckError(f"adjacency graph {sorted(edges)} is not a {n}-cycle")
    return graph
