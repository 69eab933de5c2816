"""The degree-4 torsion group G_Omega, its order by four routes, cup products and p1."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .classes import (
    quadratic_basis,
    quadratic_coords,
    rho_x,
    triples,
    v_class,
    x_ring,
)
from .exceptions import ArgumentError, CrossCheckError
from .linalg import (
    AbelianGroup,
    GroupElement,
    IntMatrix,
    cokernel,
    det_exact,
    row_vector_times,
    solve_left,
)
from .omega import OmegaMatrix, sign_epsilon
from .poly import IntPolynomial
from .trees import (
    EdgeWeights,
    _check_ordering,
    default_tree_budget,
    laplacian_minor,
    tree_order_sum,
    tree_product_gcd,
)

RHO_X = "RHO_X"
V_R = "V_R"


@dataclass(frozen=True)
class GOmegaPresentation:
    variant: str
    generators: tuple[str, ...]
    relations: IntMatrix


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(1, n + 1), 2))


def presentation_rho(omega: OmegaMatrix) -> GOmegaPresentation:
    """Generators ``x_i x_j``; one relation per 3-subset ``{p, q, r}``."""
    omega.require_validated()
    k = omega.k
    gens = tuple(f"x{i}^2" if i == j else f"x{i}*x{j}" for i, j in quadratic_basis(k))
    rows = [quadratic_coords(rho_x(omega, p, q, r), k) for p, q, r in triples(omega.n)]
    return GOmegaPresentation(RHO_X, gens, IntMatrix(rows, cols=len(gens)))


def _v_vector(index: dict, p: int, q: int, coeff: int = 1) -> dict[int, int]:
    # V_qp = -V_pq
    if p == q:
        return {}
    if p < q:
        return {index[p, q]: coeff}
    return {index[q, p]: -coeff}


def presentation_vr(omega: OmegaMatrix) -> GOmegaPresentation:
    """Generators ``V_pq`` (``p < q``); relations ``R_p`` then ``V_pq + V_qr + V_rp``."""
    omega.require_validated()
    n = omega.n
    pairs = _pairs(n)
    index = {pq: i for i, pq in enumerate(pairs)}
    rows = []
    for p in range(1, n + 1):
        row = [0] * len(pairs)
        for q in range(1, n + 1):
            if q == p:
                continue
            for i, c in _v_vector(index, p, q, abs(omega.minor(p, q))).items():
                row[i] += c
        rows.append(row)
    for p, q, r in triples(n):
        row = [0] * len(pairs)
        for a, b in ((p, q), (q, r), (r, p)):
            for i, c in _v_vector(index, a, b).items():
                row[i] += c
        rows.append(row)
    gens = tuple(f"V{p}_{q}" for p, q in pairs)
    return GOmegaPresentation(V_R, gens, IntMatrix(rows, cols=len(pairs)))


def vr_to_rho_matrix(omega: OmegaMatrix) -> IntMatrix:
    """Row ``V_pq`` holds the x-monomial coordinates of ``eps(p,q) v_p v_q``."""
    eps = sign_epsilon(omega)
    rows = []
    for p, q in _pairs(omega.n):
        f = eps(p, q) * v_class(omega, p) * v_class(omega, q)
        rows.append(quadratic_coords(f, omega.k))
    return IntMatrix(rows, cols=len(quadratic_basis(omega.k)))


def relations_matrix(omega: OmegaMatrix, ordering: Sequence[int] | None = None) -> IntMatrix:
    """Square matrix of relations for the ordering ``a_1, ..., a_{k+2}``.

    Columns: ``V_{a_i a_j}`` for ``i < j`` in lexicographic order.
    Rows: ``R'_{a_p}`` for ``p = 2..k+2``, then ``V_{a_1 a_i} + V_{a_i a_j} + V_{a_j a_1}``
    for ``2 <= i < j``.
    """
    omega.require_validated()
    n = omega.n
    a = _check_ordering(ordering, n)
    pos_pairs = _pairs(n)  # positions, 1-based
    index = {pq: i for i, pq in enumerate(pos_pairs)}
    size = len(pos_pairs)

    def vec(i: int, j: int, coeff: int = 1) -> dict[int, int]:
        return _v_vector(index, i, j, coeff)

    def add(row, d):
        for idx, c in d.items():
            row[idx] += c

    def delta(i: int, j: int) -> int:
        return abs(omega.minor(a[i - 1], a[j - 1]))

    rows = []
    for p in range(2, n + 1):
        row = [0] * size
        for q in range(1, n + 1):
            if q != p:
                add(row, vec(p, q, delta(p, q)))
                for x, y in ((1, p), (p, q), (q, 1)):
                    add(row, vec(x, y, -delta(p, q)))
        rows.append(row)
    for i, j in combinations(range(2, n + 1), 2):
        row = [0] * size
        for x, y in ((1, i), (i, j), (j, 1)):
            add(row, vec(x, y))
        rows.append(row)
    return IntMatrix(rows, cols=size)


def relations_matrix_det(omega: OmegaMatrix, ordering: Sequence[int] | None = None) -> int:
    """``|det|`` of :func:`relations_matrix`, after checking its block shape.

    The matrix must look like ``[[-M, 0], [?, I]]`` with ``M`` the
    Laplacian minor of the ``|Delta|`` weights in the same ordering.
    """
    R = relations_matrix(omega, ordering)
    n = omega.n
    m = n - 1
    size = R.rows
    M = laplacian_minor(EdgeWeights.from_omega(omega), _check_ordering(ordering, n))
    top_left = R.submatrix(range(m), range(m))
    top_right = R.submatrix(range(m), range(m, size))
    bottom_right = R.submatrix(range(m, size), range(m, size))
    if top_left != -M:
        raise CrossCheckError("upper-left block of the relations matrix is not -M")
    if any(top_right.entries):
        raise CrossCheckError("upper-right block of the relations matrix is not zero")
    if bottom_right != IntMatrix.identity(size - m):
        raise CrossCheckError("lower-right block of the relations matrix is not the identity")
    return abs(det_exact(R))


@lru_cache(maxsize=256)
def _cokernel_cached(relations: IntMatrix) -> AbelianGroup:
    return cokernel(relations)


def torsion_group(omega: OmegaMatrix) -> AbelianGroup:
    """``G_Omega`` as the cokernel of the rho relations on the ``x_i x_j``."""
    G = _cokernel_cached(presentation_rho(omega).relations)
    if G.free_rank:
        raise CrossCheckError(f"G_Omega has free rank {G.free_rank}; expected a torsion group")
    return G


def torsion_group_vr(omega: OmegaMatrix) -> AbelianGroup:
    return _cokernel_cached(presentation_vr(omega).relations)


@dataclass(frozen=True)
class OrderLedger:
    tree_sum: int | None  # None when enumeration was skipped for budget
    det_m: int
    snf_product: int
    relations_det: int

    @property
    def agree(self) -> bool:
        values = {self.det_m, self.snf_product, self.relations_det}
        if self.tree_sum is not None:
            values.add(self.tree_sum)
        return len(values) == 1

    def as_dict(self) -> dict:
        return {
            "tree_sum": "skipped" if self.tree_sum is None else str(self.tree_sum),
            "det_m": str(self.det_m),
            "snf_product": str(self.snf_product),
            "relations_det": str(self.relations_det),
            "agree": self.agree,
        }


def order_cross_check(
    omega: OmegaMatrix, tree_budget: int | None = None, ordering: Sequence[int] | None = None
) -> OrderLedger:
    omega.require_validated()
    w = EdgeWeights.from_omega(omega)
    budget = default_tree_budget() if tree_budget is None else tree_budget
    tree_sum = tree_order_sum(w, budget) if omega.n <= budget else None
    return OrderLedger(
        tree_sum=tree_sum,
        det_m=abs(det_exact(laplacian_minor(w, ordering))),
        snf_product=math.prod(torsion_group(omega).invariant_factors),
        relations_det=relations_matrix_det(omega, ordering),
    )


def _check_x_index(omega: OmegaMatrix, i: int) -> None:
    if not (isinstance(i, int) and 1 <= i <= omega.k):
        raise ArgumentError(f"index {i!r} outside 1..{omega.k}")


def cup_product(omega: OmegaMatrix, i: int, j: int) -> GroupElement:
    """Normal form of ``x_i x_j`` in ``G_Omega``."""
    _check_x_index(omega, i)
    _check_x_index(omega, j)
    i, j = min(i, j), max(i, j)
    basis = quadratic_basis(omega.k)
    coords = [int(b == (i, j)) for b in basis]
    return torsion_group(omega).reduce(coords)


def reduce_quadratic(omega: OmegaMatrix, f: IntPolynomial) -> GroupElement:
    """Image of a quadratic form in ``x`` in ``G_Omega``."""
    return torsion_group(omega).reduce(quadratic_coords(f, omega.k))


def vp_square_relation_check(omega: OmegaMatrix) -> bool:
    """``sum_q |Delta_pq| eps(p,q) v_p v_q`` vanishes in ``Z[x]`` for every ``p``."""
    eps = sign_epsilon(omega)
    n = omega.n
    for p in range(1, n + 1):
        vp = v_class(omega, p)
        total = x_ring(omega.k).zero()
        for q in range(1, n + 1):
            if q != p:
                total = total + abs(omega.minor(p, q)) * eps(p, q) * vp * v_class(omega, q)
        if not total.is_zero():
            return False
    return True


def pontryagin_polynomial(omega: OmegaMatrix) -> IntPolynomial:
    """``2 * sum_p v_p^2``."""
    R = x_ring(omega.k)
    return 2 * sum((v_class(omega, p) ** 2 for p in range(1, omega.n + 1)), R.zero())


def pontryagin_class(omega: OmegaMatrix) -> tuple[IntPolynomial, GroupElement]:
    f = pontryagin_polynomial(omega)
    return f, reduce_quadratic(omega, f)


def square_in_v_coords(omega: OmegaMatrix, p: int) -> list[int]:
    """Coordinates of ``v_p^2`` in the ``V_pq`` (``p < q``) generators.

    Writes ``v_p`` as an integer combination of the other ``v_q`` (possible
    because any ``k + 1`` rows of Omega span ``Z^k``) and uses
    ``v_p v_q = eps(p,q) V_pq``.
    """
    eps = sign_epsilon(omega)
    n = omega.n
    others = [q for q in range(1, n + 1) if q != p]
    sub = omega.matrix.submatrix([q - 1 for q in others], range(omega.k))
    c = solve_left(sub, list(omega.row(p)))
    if c is None:
        raise CrossCheckError(f"rows other than {p} do not span Z^{omega.k}")
    pairs = _pairs(n)
    index = {pq: i for i, pq in enumerate(pairs)}
    out = [0] * len(pairs)
    for q, cq in zip(others, c):
        for i, v in _v_vector(index, p, q, cq * eps(p, q)).items():
            out[i] += v
    return out


def pontryagin_via_vr(omega: OmegaMatrix) -> GroupElement:
    """p1 reduced in the V/R presentation, then carried to the rho normal form.

    The element is reduced in the V/R cokernel, a fresh representative is
    lifted from that normal form, and only then is it mapped through
    ``V_pq -> eps(p,q) v_p v_q`` and reduced in ``G_Omega``.
    """
    n = omega.n
    z = [0] * len(_pairs(n))
    for p in range(1, n + 1):
        for i, v in enumerate(square_in_v_coords(omega, p)):
            z[i] += 2 * v
    phi = vr_to_rho_matrix(omega)
    if row_vector_times(z, phi) != quadratic_coords(pontryagin_polynomial(omega), omega.k):
        raise CrossCheckError("V-coordinates of p1 do not map back to 2 sum v_p^2")
    G_vr = torsion_group_vr(omega)
    rep = G_vr.lift(G_vr.reduce(z))
    return torsion_group(omega).reduce(row_vector_times(rep, phi))


def gcd_over_trees(omega: OmegaMatrix, budget: int | None = None) -> int:
    omega.require_validated()
    g = tree_product_gcd(EdgeWeights.from_omega(omega), budget)
    if g != 1:
        raise CrossCheckError(f"gcd of tree products is {g}, expected 1")
    return g


def k1_closed_form(omega: OmegaMatrix) -> int:
    """``r = |D12||D13| + |D21||D23| + |D31||D32|`` for ``k = 1``."""
    if omega.k != 1:
        raise ArgumentError("closed form applies only to k = 1")
    d = lambda p, q: abs(omega.minor(p, q))  # noqa: E731
    return d(1, 2) * d(1, 3) + d(2, 1) * d(2, 3) + d(3, 1) * d(3, 2)


def betti_numbers(k: int) -> tuple[int, ...]:
    return (1, 0, k, 0, 0, k, 0, 1)


@dataclass
class CohomologyReport:
    k: int
    valid: bool
    betti: tuple[int, ...]
    torsion: AbelianGroup
    order_ledger: OrderLedger
    cup_table: dict[tuple[int, int], GroupElement]
    p1_polynomial: IntPolynomial
    p1: GroupElement
    bound_ok: bool
    k1_r: int | None = None
    minors: dict[tuple[int, int], int] = field(default_factory=dict)
    signs: dict[tuple[int, int], int] = field(default_factory=dict)
    diagnostics: list[str] = field(default_factory=list)

    @property
    def order(self) -> int:
        return self.torsion.order

    def to_dict(self) -> dict:
        out = {
            "k": self.k,
            "valid": self.valid,
            "betti": list(self.betti),
            "torsion": {
                "invariant_factors": [str(d) for d in self.torsion.invariant_factors],
                "order": str(self.torsion.order),
            },
            "order_ledger": self.order_ledger.as_dict(),
            "cup_table": [
                {"i": i, "j": j, "element": [str(x) for x in e.residues]}
                for (i, j), e in sorted(self.cup_table.items())
            ],
            "p1": {"polynomial": str(self.p1_polynomial), "element": [str(x) for x in self.p1.residues]},
            "bound_ok": self.bound_ok,
            "minors": {f"{p},{q}": str(d) for (p, q), d in sorted(self.minors.items())},
            "signs": {f"{p},{q}": s for (p, q), s in sorted(self.signs.items()) if p < q},
        }
        if self.k1_r is not None:
            out["k1_r"] = str(self.k1_r)
        if self.diagnostics:
            out["diagnostics"] = list(self.diagnostics)
        return out


def cohomology_report(
    omega: OmegaMatrix, tree_budget: int | None = None, ordering: Sequence[int] | None = None
) -> CohomologyReport:
    """Assemble everything; any failed cross-check marks the report invalid."""
    omega.require_validated()
    k = omega.k
    diagnostics = []
    G = torsion_group(omega)
    ledger = order_cross_check(omega, tree_budget, ordering)
    if ledger.tree_sum is None:
        diagnostics.append("tree enumeration skipped (budget); order from determinant routes only")
    if not ledger.agree:
        diagnostics.append(f"order ledger disagrees: {ledger.as_dict()}")

    G_vr = torsion_group_vr(omega)
    if G_vr.invariant_factors != G.invariant_factors or G_vr.free_rank:
        diagnostics.append(f"V/R presentation gives {G_vr}, rho presentation gives {G}")

    cup_table = {(i, j): cup_product(omega, i, j) for i, j in quadratic_basis(k)}
    p1_poly, p1 = pontryagin_class(omega)
    try:
        if pontryagin_via_vr(omega) != p1:
            diagnostics.append("p1 differs between the two presentations")
    except CrossCheckError as exc:
        diagnostics.append(str(exc))

    if not vp_square_relation_check(omega):
        diagnostics.append("sum_q |Delta_pq| eps(p,q) v_p v_q is not identically zero")

    k1_r = None
    if k == 1:
        k1_r = k1_closed_form(omega)
        if k1_r != G.order:
            diagnostics.append(f"k = 1 closed form r = {k1_r} but |G| = {G.order}")

    bound_ok = G.order >= (k + 2) ** k
    if not bound_ok:
        diagnostics.append(f"|G| = {G.order} < (k+2)^k = {(k + 2) ** k}")

    eps = sign_epsilon(omega)
    hard_failures = [d for d in diagnostics if not d.startswith("tree enumeration skipped")]
    return CohomologyReport(
        k=k,
        valid=not hard_failures,
        betti=betti_numbers(k),
        torsion=G,
        order_ledger=ledger,
        cup_table=cup_table,
        p1_polynomial=p1_poly,
        p1=p1,
        bound_ok=bound_ok,
        k1_r=k1_r,
        minors=dict(omega.minors),
        signs=dict(eps.eps),
        diagnostics=diagnostics,
    )

