"""Exact integer linear algebra.

Everything here works over Python's arbitrary-precision ``int``; there is
no floating point anywhere.  The main entry points are

* :func:`det_exact` -- fraction-free (Bareiss) determinant,
* :func:`smith_normal_form` -- ``U @ A @ V == S`` with unimodular ``U``, ``V``,
* :func:`cokernel` -- the finitely generated abelian group ``Z^n / rowspan(A)``
  together with a normal form for its elements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exceptions import ArgumentError


class IntMatrix:
    """Dense, immutable matrix of Python integers."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable[int]], cols: int | None = None):
        rows = tuple(tuple(int(x) for x in row) for row in data)
        if cols is None:
            if not rows:
                raise ArgumentError("column count is ambiguous for an empty matrix")
            cols = len(rows[0])
        for row in rows:
            if len(row) != cols:
                raise ArgumentError(f"ragged matrix: expected {cols} columns, got {len(row)}")
        self.rows = len(rows)
        self.cols = cols
        self._data = rows

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(([int(i == j) for j in range(n)] for i in range(n)), cols=n)

    @classmethod
    def zeros(cls, m: int, n: int) -> IntMatrix:
        return cls(([0] * n for _ in range(m)), cols=n)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> tuple[int, ...]:
        """Row-major flat view; length ``rows * cols``."""
        return tuple(x for row in self._data for x in row)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self._data)

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self._data]

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(([row[j] for row in self._data] for j in range(self.cols)), cols=self.rows)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> IntMatrix:
        return IntMatrix(([self._data[i][j] for j in cols] for i in rows), cols=len(cols))

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ArgumentError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = [other.column(j) for j in range(other.cols)]
        return IntMatrix(
            ([sum(a * b for a, b in zip(row, col)) for col in ocols] for row in self._data),
            cols=other.cols,
        )

    def __neg__(self) -> IntMatrix:
        return IntMatrix(([-x for x in row] for row in self._data), cols=self.cols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.shape, self._data))

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()!r}, cols={self.cols})"

    def is_diagonal(self) -> bool:
        return all(x == 0 for i, row in enumerate(self._data) for j, x in enumerate(row) if i != j)


def as_int_matrix(A) -> IntMatrix:
    if isinstance(A, IntMatrix):
        return A
    return IntMatrix(A)


def row_vector_times(x: Sequence[int], A: IntMatrix) -> list[int]:
    """Return ``x @ A`` for a plain integer row vector ``x``."""
    if len(x) != A.rows:
        raise ArgumentError(f"vector of length {len(x)} cannot multiply a {A.shape} matrix")
    out = [0] * A.cols
    for xi, row in zip(x, A._data):
        if xi:
            for j, a in enumerate(row):
                out[j] += xi * a
    return out


def det_exact(A) -> int:
    """Determinant by Bareiss fraction-free elimination.

    Every intermediate division is exact, so entries stay integral and
    grow only polynomially.  ``det`` of the 0x0 matrix is 1.
    """
    A = as_int_matrix(A)
    if A.rows != A.cols:
        raise ArgumentError(f"determinant of non-square {A.rows}x{A.cols} matrix")
    n = A.rows
    if n == 0:
        return 1
    M = A.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        rk = M[k]
        for i in range(k + 1, n):
            ri = M[i]
            lead = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - lead * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * M[n - 1][n - 1]


def det_cofactor(entries: Sequence[Sequence], zero=0):
    """Determinant by Laplace expansion along the first row.

    Works for any commutative ring whose elements support ``+``, ``-`` and
    ``*`` (integers, :class:`~s7omega.poly.IntPolynomial`, ...).  Cost is
    factorial, so keep it to small matrices.
    """
    n = len(entries)
    if n == 0:
        raise ArgumentError("det_cofactor needs an explicit unit for the 0x0 case")
    if n == 1:
        return entries[0][0]
    total = zero
    for j in range(n):
        a = entries[0][j]
        if a == zero:
            continue
        minor = [row[:j] + row[j + 1:] for row in (list(r) for r in entries[1:])]
        term = a * det_cofactor(minor, zero)
        total = total + term if j % 2 == 0 else total - term
    return total


@dataclass(frozen=True)
class SmithDecomposition:
    U: IntMatrix
    S: IntMatrix
    V: IntMatrix
    diagonal: tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def _swap_rows(M, a, b):
    M[a], M[b] = M[b], M[a]


def _swap_cols(M, a, b):
    for row in M:
        row[a], row[b] = row[b], row[a]


def _add_row(M, dst, src, c):
    rd, rs = M[dst], M[src]
    for j, x in enumerate(rs):
        if x:
            rd[j] += c * x


def _add_col(M, dst, src, c):
    for row in M:
        if row[src]:
            row[dst] += c * row[src]


def _min_pivot(S, t, m, n):
    best = None
    best_abs = 0
    for i in range(t, m):
        row = S[i]
        for j in range(t, n):
            a = abs(row[j])
            if a and (best is None or a < best_abs):
                best, best_abs = (i, j), a
                if a == 1:
                    return best
    return best


def smith_normal_form(A) -> SmithDecomposition:
    """Smith normal form with transforms, ``U @ A @ V == S``.

    Pivot rule: smallest nonzero absolute value in the remaining block,
    ties broken by lowest (row, col).  The output is therefore a
    deterministic function of the input.
    """
    A = as_int_matrix(A)
    m, n = A.shape
    S = A.tolist()
    U = IntMatrix.identity(m).tolist()
    V = IntMatrix.identity(n).tolist()

    for t in range(min(m, n)):
        while True:
            piv = _min_pivot(S, t, m, n)
            if piv is None:
                break
            i, j = piv
            if i != t:
                _swap_rows(S, t, i)
                _swap_rows(U, t, i)
            if j != t:
                _swap_cols(S, t, j)
                _swap_cols(V, t, j)
            p = S[t][t]
            dirty = False
            for i in range(t + 1, m):
                if S[i][t]:
                    q = S[i][t] // p
                    _add_row(S, i, t, -q)
                    _add_row(U, i, t, -q)
                    dirty = dirty or S[i][t] != 0
            for j in range(t + 1, n):
                if S[t][j]:
                    q = S[t][j] // p
                    _add_col(S, j, t, -q)
                    _add_col(V, j, t, -q)
                    dirty = dirty or S[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, m) if any(S[i][j] % p for j in range(t + 1, n))),
                None,
            )
            if bad is None:
                break
            _add_row(S, t, bad, 1)
            _add_row(U, t, bad, 1)
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]
        if S[t][t] == 0:
            break

    diagonal = tuple(S[i][i] for i in range(min(m, n)))
    return SmithDecomposition(IntMatrix(U, cols=m), IntMatrix(S, cols=n), IntMatrix(V, cols=n), diagonal)


def unimodular_inverse(M: IntMatrix) -> IntMatrix:
    """Exact inverse of a matrix with determinant +-1."""
    n = M.rows
    if M.cols != n:
        raise ArgumentError("inverse of a non-square matrix")
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(M.tolist())]
    for c in range(n):
        r = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if r is None:
            raise ArgumentError("matrix is singular")
        aug[c], aug[r] = aug[r], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    out = []
    for row in aug:
        tail = row[n:]
        if any(x.denominator != 1 for x in tail):
            raise ArgumentError("matrix is not unimodular")
        out.append([int(x) for x in tail])
    return IntMatrix(out, cols=n)


def solve_left(A, b: Sequence[int]) -> list[int] | None:
    """Some integer row vector ``x`` with ``x @ A == b``, or ``None``."""
    A = as_int_matrix(A)
    if len(b) != A.cols:
        raise ArgumentError(f"right-hand side has length {len(b)}, expected {A.cols}")
    snf = smith_normal_form(A)
    c = row_vector_times(list(b), snf.V)
    y = [0] * A.rows
    for i, ci in enumerate(c):
        d = snf.diagonal[i] if i < len(snf.diagonal) else 0
        if d == 0:
            if ci != 0:
                return None
        elif ci % d:
            return None
        else:
            y[i] = ci // d
    return row_vector_times(y, snf.U)


@dataclass(frozen=True)
class GroupElement:
    """Normal form of an element of a finitely generated abelian group."""

    residues: tuple[int, ...]
    free_part: tuple[int, ...] = ()

    def is_identity(self) -> bool:
        return not any(self.residues) and not any(self.free_part)


@dataclass(frozen=True)
class AbelianGroup:
    """``Z/d_1 + ... + Z/d_r + Z^f`` with ``d_1 | d_2 | ... | d_r``, all ``d_i >= 2``.

    ``coordinate_map`` sends a coordinate row vector in the presentation
    generators to normal-form coordinates (torsion first, then free);
    ``lift_map`` goes back, one representative row per normal-form
    coordinate.
    """

    invariant_factors: tuple[int, ...]
    free_rank: int
    coordinate_map: IntMatrix
    lift_map: IntMatrix

    @property
    def n_generators(self) -> int:
        return self.coordinate_map.rows

    @property
    def order(self) -> int | None:
        """Group order, or ``None`` when the group is infinite."""
        if self.free_rank:
            return None
        return math.prod(self.invariant_factors)

    def reduce(self, coords: Sequence[int]) -> GroupElement:
        if len(coords) != self.n_generators:
            raise ArgumentError(
                f"expected {self.n_generators} generator coordinates, got {len(coords)}"
            )
        y = row_vector_times(list(coords), self.coordinate_map)
        t = len(self.invariant_factors)
        residues = tuple(yi % d for yi, d in zip(y[:t], self.invariant_factors))
        return GroupElement(residues, tuple(y[t:]))

    def lift(self, element: GroupElement) -> list[int]:
        """A coordinate vector in presentation generators representing ``element``."""
        y = list(element.residues) + list(element.free_part)
        return row_vector_times(y, self.lift_map)

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        residues = tuple((x + y) % d for x, y, d in zip(a.residues, b.residues, self.invariant_factors))
        return GroupElement(residues, tuple(x + y for x, y in zip(a.free_part, b.free_part)))

    def identity(self) -> GroupElement:
        return GroupElement((0,) * len(self.invariant_factors), (0,) * self.free_rank)

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.invariant_factors]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


def cokernel(A) -> AbelianGroup:
    """The group ``Z^cols / rowspan(A)``: rows of ``A`` are relations."""
    A = as_int_matrix(A)
    snf = smith_normal_form(A)
    n = A.cols
    diag = list(snf.diagonal) + [0] * (n - len(snf.diagonal))
    torsion = [i for i, d in enumerate(diag) if d >= 2]
    free = [i for i, d in enumerate(diag) if d == 0]
    keep = torsion + free
    V = snf.V
    Vinv = unimodular_inverse(V)
    coordinate_map = V.submatrix(range(n), keep)
    lift_map = Vinv.submatrix(keep, range(n))
    return AbelianGroup(tuple(diag[i] for i in torsion), len(free), coordinate_map, lift_map)


def reduce_element(G: AbelianGroup, coords: Sequence[int]) -> GroupElement:
    return G.reduce(coords)
