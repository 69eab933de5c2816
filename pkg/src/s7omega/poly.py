"""Multivariate polynomials with integer coefficients.

A polynomial lives in a :class:`PolynomialRing`, which fixes an ordered
tuple of generator names.  Terms are stored as ``{exponent tuple: coeff}``
with zero coefficients never stored, so two polynomials are equal exactly
when their term maps are.  Printing uses graded lexicographic order::

    >>> R = PolynomialRing(["x1", "x2"])
    >>> x1, x2 = R.gens
    >>> str((x1 + x2) * (x1 - x2))
    'x1^2 - x2^2'
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence

from .exceptions import ArgumentError


class PolynomialRing:
    """The ring ``Z[g_1, ..., g_n]`` over named generators."""

    def __init__(self, generators: Iterable[str]):
        self.generators = tuple(generators)
        if len(set(self.generators)) != len(self.generators):
            raise ArgumentError(f"duplicate generator names in {self.generators}")
        self._index = {g: i for i, g in enumerate(self.generators)}

    @property
    def ngens(self) -> int:
        return len(self.generators)

    @property
    def gens(self) -> tuple[IntPolynomial, ...]:
        return tuple(self.gen(i) for i in range(self.ngens))

    def gen(self, i: int | str) -> IntPolynomial:
        if isinstance(i, str):
            i = self._index[i]
        exps = [0] * self.ngens
        exps[i] = 1
        return IntPolynomial(self, {tuple(exps): 1})

    def zero(self) -> IntPolynomial:
        return IntPolynomial(self, {})

    def one(self) -> IntPolynomial:
        return self.constant(1)

    def constant(self, c: int) -> IntPolynomial:
        return IntPolynomial(self, {(0,) * self.ngens: c})

    def monomial(self, exps: Sequence[int], coeff: int = 1) -> IntPolynomial:
        if len(exps) != self.ngens:
            raise ArgumentError(f"exponent vector {tuple(exps)} has wrong length for {self}")
        return IntPolynomial(self, {tuple(exps): coeff})

    def parse(self, text: str) -> IntPolynomial:
        """Inverse of ``str`` on polynomials of this ring."""
        text = text.strip()
        if text == "0":
            return self.zero()
        terms: dict[tuple[int, ...], int] = {}
        # split into signed terms; leading sign optional
        for sign, body in re.findall(r"([+-]?)\s*([^+-]+)", text.replace(" ", "")):
            coeff = -1 if sign == "-" else 1
            exps = [0] * self.ngens
            for factor in body.split("*"):
                if factor.isdigit():
                    coeff *= int(factor)
                    continue
                name, _, power = factor.partition("^")
                if name not in self._index:
                    raise ArgumentError(f"unknown generator {name!r} in {text!r}")
                exps[self._index[name]] += int(power) if power else 1
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + coeff
        return IntPolynomial(self, terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolynomialRing) and self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return f"PolynomialRing({list(self.generators)!r})"


def _grlex_key(exps: tuple[int, ...]):
    return (-sum(exps), tuple(-e for e in exps))


class IntPolynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolynomialRing, terms: Mapping[tuple[int, ...], int]):
        self.ring = ring
        self.terms = {e: int(c) for e, c in terms.items() if c}

    def _coerce(self, other) -> IntPolynomial:
        if isinstance(other, IntPolynomial):
            if other.ring != self.ring:
                raise ArgumentError(f"mixing polynomials over {self.ring} and {other.ring}")
            return other
        if isinstance(other, int):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return IntPolynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(other, self)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return IntPolynomial(self.ring, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ArgumentError("negative powers are not polynomials")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.terms == ({(0,) * self.ring.ngens: other} if other else {})
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Sequence[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]))

    def substitute(self, images: Sequence[IntPolynomial]) -> IntPolynomial:
        """Ring homomorphism sending generator ``i`` to ``images[i]``."""
        if len(images) != self.ring.ngens:
            raise ArgumentError(f"need {self.ring.ngens} images, got {len(images)}")
        target = images[0].ring if images else self.ring
        out = target.zero()
        for exps, c in self.terms.items():
            term = target.constant(c)
            for img, e in zip(images, exps):
                if e:
                    term = term * img ** e
            out = out + term
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            factors = []
            for name, e in zip(self.ring.generators, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"IntPolynomial({str(self)!r})"


def add(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    return f + g


def mul(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    return f * g


def scale(c: int, f: IntPolynomial) -> IntPolynomial:
    return IntPolynomial(f.ring, {e: c * v for e, v in f.terms.items()})


def equal(f: IntPolynomial, g: IntPolynomial) -> bool:
    if f.ring != g.ring:
        raise ArgumentError(f"comparing polynomials over {f.ring} and {g.ring}")
    return f.terms == g.terms
