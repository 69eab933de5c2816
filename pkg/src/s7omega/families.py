"""Generators of admissible Omega matrices."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .exceptions import ArgumentError, BudgetExceededError, CrossCheckError
from .omega import OmegaMatrix, check_condition

DEFAULT_MAX_ATTEMPTS = 100_000


@dataclass(frozen=True)
class BgmrParams:
    """Bottom two rows ``a`` and ``b`` of the block family ``[I_k; a; b]``."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        a, b = tuple(self.a), tuple(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if len(a) != len(b) or not a:
            raise ArgumentError(f"a and b must be non-empty and of equal length, got {len(a)} and {len(b)}")
        for i, (ai, bi) in enumerate(zip(a, b), start=1):
            if math.gcd(ai, bi) != 1:
                raise ArgumentError(f"a_{i} = {ai} and b_{i} = {bi} are not coprime")
        for i, j in combinations(range(len(a)), 2):
            if abs(a[i]) == abs(a[j]) and abs(b[i]) == abs(b[j]):
                raise ArgumentError(
                    f"pair ({i + 1}, {j + 1}) has a_{i + 1} = +-a_{j + 1} and b_{i + 1} = +-b_{j + 1}"
                )

    @property
    def k(self) -> int:
        return len(self.a)


def bgmr_family(params: BgmrParams | tuple[Sequence[int], Sequence[int]]) -> OmegaMatrix:
    """The ``(k+2) x k`` matrix with identity on top and rows ``a``, ``b`` below."""
    if not isinstance(params, BgmrParams):
        params = BgmrParams(*params)
    k = params.k
    rows = [[int(i == j) for j in range(k)] for i in range(k)]
    rows += [list(params.a), list(params.b)]
    omega = OmegaMatrix(rows)
    report = check_condition(omega)
    if not report.valid:
        raise CrossCheckError(f"block family member {rows} fails the reduction condition: {report.describe()}")
    return omega


def random_valid_omega(
    k: int, entry_bound: int, seed: int | None = None, max_attempts: int = DEFAULT_MAX_ATTEMPTS
) -> OmegaMatrix:
    """Rejection-sample a valid Omega with entries uniform in ``[-entry_bound, entry_bound]``."""
    if k < 1 or entry_bound < 1:
        raise ArgumentError(f"need k >= 1 and entry_bound >= 1, got k = {k}, entry_bound = {entry_bound}")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    for _ in range(max_attempts):
        rows = [[rng.randint(-entry_bound, entry_bound) for _ in range(k)] for _ in range(k + 2)]
        omega = OmegaMatrix(rows)
        if check_condition(omega).valid:
            return omega
    raise BudgetExceededError(
        f"no valid Omega found in {max_attempts} attempts (k = {k}, entry_bound = {entry_bound})"
    )


def random_omegas(count: int, ks: Sequence[int], entry_bound: int, seed: int) -> list[OmegaMatrix]:
    """A reproducible corpus; ``k`` cycles through ``ks``."""
    rng = random.Random(seed)
    return [random_valid_omega(ks[i % len(ks)], entry_bound, rng) for i in range(count)]
