"""Input validation and the matrix file formats.

Text format::

    # comment lines start with '#'
    4 2
    1 0
    0 1
    1 2
    3 1

JSON format: ``{"k": 2, "rows": [[1, 0], [0, 1], [1, 2], [3, 1]]}``.
"""

from __future__ import annotations

import json
import numbers
from typing import Sequence

import numpy as np

from .exceptions import ArgumentError
from .omega import OmegaMatrix


class MatrixParseError(ArgumentError):
    pass


def _as_int(x) -> int:
    if isinstance(x, (bool, np.bool_)):
        raise ArgumentError(f"boolean entry {x!r} is not an integer")
    if isinstance(x, numbers.Integral):
        return int(x)
    if isinstance(x, numbers.Real) and float(x).is_integer():
        # exact only while the float holds an integer exactly
        if abs(x) >= 2**53:
            raise ArgumentError(f"float entry {x!r} is too large to be trusted as an exact integer")
        return int(x)
    raise ArgumentError(f"entry {x!r} is not an integer")


def check_omega_array(X) -> OmegaMatrix:
    """Turn an array-like into an :class:`OmegaMatrix`, rejecting non-integers."""
    if isinstance(X, OmegaMatrix):
        return X
    if isinstance(X, np.ndarray):
        if X.ndim != 2:
            raise ArgumentError(f"Omega must be 2-dimensional, got shape {X.shape}")
        rows = X.tolist()
    else:
        try:
            rows = [list(r) for r in X]
        except TypeError:
            raise ArgumentError(f"cannot interpret {type(X).__name__} as a matrix") from None
    return OmegaMatrix([[_as_int(x) for x in r] for r in rows])


def check_coordinate_rows(X, width: int) -> list[list[int]]:
    """2-d integer array-like of shape ``(m, width)``; a single row is promoted."""
    if isinstance(X, np.ndarray):
        X = X.tolist()
    rows = [list(r) for r in X] if X and isinstance(X[0], (list, tuple, np.ndarray)) else [list(X)]
    out = []
    for r in rows:
        if len(r) != width:
            raise ArgumentError(f"expected rows of length {width}, got {len(r)}")
        out.append([_as_int(x) for x in r])
    return out


def check_ordering(ordering: Sequence[int] | str | None, n: int) -> tuple[int, ...] | None:
    if ordering is None:
        return None
    if isinstance(ordering, str):
        try:
            ordering = [int(t) for t in ordering.replace(" ", "").split(",") if t]
        except ValueError:
            raise ArgumentError(f"ordering {ordering!r} is not a comma-separated list of integers") from None
    ordering = tuple(ordering)
    if sorted(ordering) != list(range(1, n + 1)):
        raise ArgumentError(f"ordering {ordering} is not a permutation of 1..{n}")
    return ordering


def _rows_from_tokens(lines: list[list[str]]) -> list[list[int]]:
    if not lines:
        raise MatrixParseError("empty matrix description")
    header = lines[0]
    if len(header) != 2:
        raise MatrixParseError(f"header must be '<rows> <cols>', got {' '.join(header)!r}")
    try:
        m, n = int(header[0]), int(header[1])
        rows = [[int(t) for t in line] for line in lines[1:]]
    except ValueError as exc:
        raise MatrixParseError(f"non-integer token: {exc}") from None
    if len(rows) != m:
        raise MatrixParseError(f"header announces {m} rows, found {len(rows)}")
    for i, r in enumerate(rows, start=1):
        if len(r) != n:
            raise MatrixParseError(f"row {i} has {len(r)} entries, header announces {n}")
    return rows


def parse_matrix_text(text: str) -> OmegaMatrix:
    """Parse either the whitespace text format or the JSON object format."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
            rows = obj["rows"]
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise MatrixParseError(f"bad JSON matrix: {exc}") from None
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise MatrixParseError("'rows' must be a list of lists")
        for r in rows:
            for x in r:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise MatrixParseError(f"non-integer entry {x!r}")
        if "k" in obj and rows and obj["k"] != len(rows[0]):
            raise MatrixParseError(f"'k' is {obj['k']} but rows have {len(rows[0])} columns")
    else:
        lines = [
            line.split() for line in stripped.splitlines()
            if line.strip() and not line.lstrip().startswith("#")
        ]
        rows = _rows_from_tokens(lines)
    try:
        return OmegaMatrix(rows)
    except ArgumentError as exc:
        raise MatrixParseError(str(exc)) from None


def parse_inline_matrix(text: str) -> OmegaMatrix:
    """``"r c; row; row; ..."`` with whitespace-separated entries."""
    lines = [part.split() for part in text.split(";") if part.strip()]
    try:
        return OmegaMatrix(_rows_from_tokens(lines))
    except MatrixParseError:
        raise
    except ArgumentError as exc:
        raise MatrixParseError(str(exc)) from None


def format_matrix_text(omega: OmegaMatrix) -> str:
    lines = [f"{omega.n} {omega.k}"]
    lines += [" ".join(str(x) for x in row) for row in omega.entries]
    return "\n".join(lines) + "\n"


def format_matrix_json(omega: OmegaMatrix) -> str:
    return json.dumps({"k": omega.k, "rows": [list(r) for r in omega.entries]}) + "\n"
