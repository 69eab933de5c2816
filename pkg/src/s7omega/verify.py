"""Property suites over generated corpora, used by ``s7omega verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, permutations

from .classes import cocycle_holds, ideal_identity_check, ideal_membership_suite, orientation_table
from .cohomology import gcd_over_trees, order_cross_check, vp_square_relation_check
from .exceptions import S7OmegaError
from .families import random_valid_omega
from .omega import OmegaMatrix, adjacency_graph, kernel_vector, plucker_check, sign_epsilon
from .trees import EdgeWeights, matrix_tree_check, symbolic_matrix_tree

SCOPES = ("plucker", "cycle", "ideal", "matrixtree", "gcd", "order")

DEFAULT_COUNTS = {"plucker": 1000, "cycle": 50, "ideal": 50, "matrixtree": 200, "gcd": 50, "order": 50}
DEFAULT_KS = {
    "plucker": (2, 3),
    "cycle": (2, 3),
    "ideal": (2, 3),
    "gcd": (1, 2, 3, 4),
    "order": (1, 2, 3, 4, 5),
}
DEFAULT_BOUND = 5


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    total: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def record(self, ok: bool, label: str) -> None:
        self.total += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append(label)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.passed}/{self.total}"


def _guarded(fn, *args) -> bool:
    try:
        return bool(fn(*args))
    except S7OmegaError:
        return False


def _corpus(rng: random.Random, count: int, ks, bound: int) -> list[OmegaMatrix]:
    return [random_valid_omega(ks[i % len(ks)], bound, rng) for i in range(count)]


def suite_plucker(rng, count, ks, bound) -> SuiteResult:
    """Random matrices, not necessarily valid: every 4-subset satisfies Plucker."""
    res = SuiteResult("plucker")
    for i in range(count):
        k = ks[i % len(ks)]
        omega = OmegaMatrix([[rng.randint(-9, 9) for _ in range(k)] for _ in range(k + 2)])
        ok = all(plucker_check(omega, *s) for s in combinations(range(1, k + 3), 4))
        res.record(ok, repr(omega))
    return res


def _cycle_ok(omega: OmegaMatrix) -> bool:
    cols = [omega.matrix.column(j) for j in range(omega.k)]
    for p in range(1, omega.n + 1):
        w = kernel_vector(omega, p)
        if any(sum(a * b for a, b in zip(col, w)) for col in cols):
            return False
    graph = adjacency_graph(omega)
    if omega.k >= 2 and not graph.is_single_cycle():
        return False
    orient = orientation_table(sign_epsilon(omega))
    return all(cocycle_holds(orient, *t) for t in permutations(range(1, omega.n + 1), 4))


def suite_cycle(rng, count, ks, bound) -> SuiteResult:
    """Kernel vectors, the adjacency cycle and the orientation cocycle."""
    res = SuiteResult("cycle")
    for omega in _corpus(rng, count, ks, bound):
        res.record(_guarded(_cycle_ok, omega), repr(omega))
    return res


def _ideal_ok(omega: OmegaMatrix) -> bool:
    return (
        all(ideal_identity_check(omega, *t) for t in permutations(range(1, omega.n + 1), 4))
        and ideal_membership_suite(omega)
        and vp_square_relation_check(omega)
    )


def suite_ideal(rng, count, ks, bound) -> SuiteResult:
    res = SuiteResult("ideal")
    for omega in _corpus(rng, count, [k for k in ks if k >= 2] or [2], bound):
        res.record(_guarded(_ideal_ok, omega), repr(omega))
    return res


def suite_matrixtree(rng, count, ks, bound) -> SuiteResult:
    """Symbolic identity for n = 2..5, then numeric weight systems."""
    res = SuiteResult("matrixtree")
    for n in range(2, 6):
        res.record(_guarded(symbolic_matrix_tree, n), f"symbolic n={n}")
    for _ in range(count):
        n = rng.randint(2, 6)
        w = EdgeWeights(n, {e: rng.randint(1, 50) for e in combinations(range(1, n + 1), 2)})
        res.record(_guarded(matrix_tree_check, w), repr(w))
    return res


def suite_gcd(rng, count, ks, bound) -> SuiteResult:
    res = SuiteResult("gcd")
    for omega in _corpus(rng, count, ks, bound):
        res.record(_guarded(gcd_over_trees, omega), repr(omega))
    return res


def suite_order(rng, count, ks, bound) -> SuiteResult:
    res = SuiteResult("order")
    for omega in _corpus(rng, count, ks, bound):
        def ok(o=omega):
            ledger = order_cross_check(o)
            return ledger.agree and ledger.tree_sum is not None and ledger.snf_product >= (o.k + 2) ** o.k
        res.record(_guarded(ok), repr(omega))
    return res


SUITES = {
    "plucker": suite_plucker,
    "cycle": suite_cycle,
    "ideal": suite_ideal,
    "matrixtree": suite_matrixtree,
    "gcd": suite_gcd,
    "order": suite_order,
}


def run_suites(scope: str = "all", seed: int = 0, count: int | None = None,
               k: int | None = None, bound: int | None = None) -> list[SuiteResult]:
    """Run the named suite (or all of them) deterministically from ``seed``."""
    names = SCOPES if scope == "all" else (scope,)
    results = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown scope {name!r}; choose from all, {', '.join(SCOPES)}")
        rng = random.Random(f"{seed}:{name}")
        n = DEFAULT_COUNTS[name] if count is None else count
        ks = (k,) if k is not None else DEFAULT_KS.get(name, (2,))
        results.append(SUITES[name](rng, n, ks, bound or DEFAULT_BOUND))
    return results
