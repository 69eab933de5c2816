"""Degree-2 classes built from an Omega matrix and the ideal they generate.

Two polynomial rings appear: ``Z[u_1..u_{k+2}]`` (the torus ``T^{k+2}``
side) and ``Z[x_1..x_k]`` (the ``T^k`` side).  They are kept distinct;
:func:`pullback` is the explicit substitution ``u_p -> v_p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Sequence

from .exceptions import ArgumentError
from .linalg import smith_normal_form
from .omega import OmegaMatrix, SignSystem, sign_epsilon
from .poly import IntPolynomial, PolynomialRing


@lru_cache(maxsize=None)
def u_ring(n: int) -> PolynomialRing:
    return PolynomialRing(f"u{p}" for p in range(1, n + 1))


@lru_cache(maxsize=None)
def x_ring(k: int) -> PolynomialRing:
    return PolynomialRing(f"x{i}" for i in range(1, k + 1))


def _distinct(*idx: int) -> None:
    if len(set(idx)) != len(idx):
        raise ArgumentError(f"indices must be distinct, got {idx}")


def v_class(omega: OmegaMatrix, p: int) -> IntPolynomial:
    """``v_p = sum_i Omega[p, i] x_i``."""
    omega.require_validated()
    R = x_ring(omega.k)
    return sum((c * x for c, x in zip(omega.row(p), R.gens)), R.zero())


def pullback(omega: OmegaMatrix, f: IntPolynomial) -> IntPolynomial:
    """Substitute ``u_p -> v_p``."""
    return f.substitute([v_class(omega, p) for p in range(1, omega.n + 1)])


def rho_u(eps: SignSystem, p: int, q: int, r: int) -> IntPolynomial:
    """``eps(p,q) u_p u_q + eps(q,r) u_q u_r + eps(r,p) u_r u_p``."""
    _distinct(p, q, r)
    u = u_ring(eps.n).gens
    up, uq, ur = u[p - 1], u[q - 1], u[r - 1]
    return eps(p, q) * up * uq + eps(q, r) * uq * ur + eps(r, p) * ur * up


def rho_x(omega: OmegaMatrix, p: int, q: int, r: int) -> IntPolynomial:
    _distinct(p, q, r)
    eps = sign_epsilon(omega)
    vp, vq, vr = (v_class(omega, i) for i in (p, q, r))
    return eps(p, q) * vp * vq + eps(q, r) * vq * vr + eps(r, p) * vr * vp


@dataclass(frozen=True)
class OrientationTable:
    n: int
    table: dict

    def __call__(self, p: int, q: int, r: int) -> int:
        return self.table[p, q, r]


def orientation_table(eps: SignSystem) -> OrientationTable:
    """``Or(p, q, r) = eps(p,q) eps(q,r) eps(r,p)`` over ordered distinct triples."""
    table = {
        (p, q, r): eps(p, q) * eps(q, r) * eps(r, p)
        for p, q, r in permutations(range(1, eps.n + 1), 3)
    }
    return OrientationTable(eps.n, table)


def cocycle_holds(orient: OrientationTable, p: int, q: int, r: int, s: int) -> bool:
    return orient(p, q, r) + orient(p, r, s) + orient(p, s, q) == orient(q, r, s)


def ideal_identity_lhs(eps: SignSystem, p: int, q: int, r: int, s: int) -> IntPolynomial:
    u = u_ring(eps.n).gens
    orient = eps(p, q) * eps(q, r) * eps(r, p)
    return orient * (
        eps(q, s) * eps(r, s) * u[p - 1] * rho_u(eps, q, r, s)
        + eps(r, s) * eps(p, s) * u[q - 1] * rho_u(eps, r, p, s)
        + eps(p, s) * eps(q, s) * u[r - 1] * rho_u(eps, p, q, s)
    )


def ideal_identity_check(omega: OmegaMatrix, p: int, q: int, r: int, s: int) -> bool:
    """The cubic identity that puts ``u_p u_q u_r`` in the ideal of the rho's."""
    _distinct(p, q, r, s)
    for i in (p, q, r, s):
        omega._check_index(i)
    eps = sign_epsilon(omega)
    u = u_ring(omega.n).gens
    return ideal_identity_lhs(eps, p, q, r, s) == -(u[p - 1] * u[q - 1] * u[r - 1])


@dataclass(frozen=True)
class MembershipCertificate:
    """``target == sum(coeff * rho_u(eps, *triple) for coeff, triple in terms)``.

    ``multiplier`` records the integer solved for when a certificate is
    assembled from a smaller one (``None`` for the base cubic case).
    """

    label: str
    target: IntPolynomial
    terms: tuple[tuple[IntPolynomial, tuple[int, int, int]], ...]
    eps: SignSystem
    multiplier: int | None = None

    def combination(self) -> IntPolynomial:
        R = self.target.ring
        return sum((c * rho_u(self.eps, *t) for c, t in self.terms), R.zero())

    def verify(self) -> bool:
        return self.combination() == self.target


def _scaled(terms, factor):
    return tuple((factor * c, t) for c, t in terms)


def cubic_certificate(eps: SignSystem, p: int, q: int, r: int, s: int | None = None) -> MembershipCertificate:
    _distinct(p, q, r)
    if s is None:
        s = next(i for i in range(1, eps.n + 1) if i not in (p, q, r))
    _distinct(p, q, r, s)
    u = u_ring(eps.n).gens
    orient = eps(p, q) * eps(q, r) * eps(r, p)
    terms = (
        (-orient * eps(q, s) * eps(r, s) * u[p - 1], (q, r, s)),
        (-orient * eps(r, s) * eps(p, s) * u[q - 1], (r, p, s)),
        (-orient * eps(p, s) * eps(q, s) * u[r - 1], (p, q, s)),
    )
    return MembershipCertificate(f"u{p}*u{q}*u{r}", u[p - 1] * u[q - 1] * u[r - 1], terms, eps)


def _monomial(n: int, powers: dict[int, int]) -> tuple[int, ...]:
    exps = [0] * n
    for i, e in powers.items():
        exps[i - 1] += e
    return tuple(exps)


def square_difference_certificate(eps: SignSystem, p: int, q: int, r: int) -> MembershipCertificate:
    """``eps(p,q) u_p^2 u_q - eps(p,r) u_p^2 u_r`` from ``u_p rho_pqr`` plus a cubic correction."""
    _distinct(p, q, r)
    n = eps.n
    u = u_ring(n).gens
    up = u[p - 1]
    base = up * rho_u(eps, p, q, r)
    # cancel the u_p u_q u_r term of u_p * rho_pqr
    m = -base.coefficient(_monomial(n, {p: 1, q: 1, r: 1}))
    cubic = cubic_certificate(eps, p, q, r)
    terms = ((up, (p, q, r)),) + _scaled(cubic.terms, m)
    target = eps(p, q) * up * up * u[q - 1] - eps(p, r) * up * up * u[r - 1]
    return MembershipCertificate(f"eps*u{p}^2*u{q} - eps*u{p}^2*u{r}", target, terms, eps, multiplier=m)


def biquadratic_certificate(eps: SignSystem, p: int, q: int, r: int | None = None) -> MembershipCertificate:
    """``u_p^2 u_q^2`` from ``u_q`` times the square-difference element."""
    _distinct(p, q)
    n = eps.n
    if r is None:
        r = next(i for i in range(1, n + 1) if i not in (p, q))
    u = u_ring(n).gens
    up, uq = u[p - 1], u[q - 1]
    sq = square_difference_certificate(eps, p, q, r)
    lifted = uq * sq.target
    # remove the u_p^2 u_q u_r term using u_p * (u_p u_q u_r)
    m = -lifted.coefficient(_monomial(n, {p: 2, q: 1, r: 1}))
    cubic = cubic_certificate(eps, p, q, r)
    sign = eps(p, q)  # u_q * sq.target + m u_p^2 u_q u_r == eps(p,q) u_p^2 u_q^2
    terms = _scaled(sq.terms, sign * uq) + _scaled(cubic.terms, sign * m * up)
    return MembershipCertificate(f"u{p}^2*u{q}^2", up * up * uq * uq, terms, eps, multiplier=m)


def ideal_membership_certificates(omega: OmegaMatrix) -> list[MembershipCertificate]:
    """All three certificate families over every ordered choice of indices."""
    if omega.k < 2:
        raise ArgumentError("ideal membership needs k >= 2 (four distinct indices)")
    eps = sign_epsilon(omega)
    n = omega.n
    certs = []
    for p, q, r in permutations(range(1, n + 1), 3):
        certs.append(cubic_certificate(eps, p, q, r))
        certs.append(square_difference_certificate(eps, p, q, r))
    for p, q in permutations(range(1, n + 1), 2):
        certs.append(biquadratic_certificate(eps, p, q))
    return certs


def ideal_membership_suite(omega: OmegaMatrix) -> bool:
    return all(c.verify() for c in ideal_membership_certificates(omega))


def quadratic_basis(k: int) -> list[tuple[int, int]]:
    """Monomials ``x_i x_j`` (``i <= j``) in lexicographic order."""
    return [(i, j) for i in range(1, k + 1) for j in range(i, k + 1)]


def quadratic_coords(f: IntPolynomial, k: int) -> list[int]:
    """Coefficient vector of a quadratic form in the :func:`quadratic_basis`."""
    if f.terms and f.degrees() != {2}:
        raise ArgumentError(f"{f} is not a quadratic form")
    out = []
    for i, j in quadratic_basis(k):
        exps = [0] * k
        exps[i - 1] += 1
        exps[j - 1] += 1
        out.append(f.coefficient(exps))
    return out


def triples(n: int) -> list[tuple[int, int, int]]:
    return list(combinations(range(1, n + 1), 3))


def row_span_invariants(omega: OmegaMatrix, rows: Sequence[int]) -> tuple[int, ...]:
    """Smith invariants of the chosen rows of Omega (all ones iff they span ``Z^k``)."""
    sub = omega.matrix.submatrix([p - 1 for p in rows], range(omega.k))
    return smith_normal_form(sub).diagonal
