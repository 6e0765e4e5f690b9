"""F_q[X_0, ..., X_{m-1}] / (X_i^q - 1) and its isomorphism with F_q[G].

X_i is sent to the monomial X^(a^i), so X_0^(e_0) ... X_{m-1}^(e_{m-1}) lands
on the group element with base-q digits (e_0, ..., e_{m-1}) once exponents
are reduced mod q.
"""

from __future__ import annotations

from typing import Iterable, Mapping

import numpy as np

from .errors import FieldMismatchError, InvalidInputError
from .ff import FiniteField
from .group_algebra import GAElem, GroupAlgebra

Exponents = tuple[int, ...]


class MultiPoly:
    """Sparse multivariate polynomial; coefficients are field encodings and
    zero terms are never stored."""

    __slots__ = ("field", "m", "_terms")

    def __init__(self, field: FiniteField, m: int, terms: Mapping[Exponents, int] | Iterable = ()):
        self.field = field
        self.m = m
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponents, int] = {}
        for exps, c in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != m or min(exps, default=0) < 0:
                raise InvalidInputError(f"exponent tuple {exps} for {m} variables")
            acc[exps] = field.add(acc.get(exps, 0), field.check(int(c)))
        self._terms = {e: c for e, c in sorted(acc.items()) if c}

    @classmethod
    def variable(cls, field: FiniteField, m: int, i: int) -> "MultiPoly":
        exps = [0] * m
        exps[i] = 1
        return cls(field, m, {tuple(exps): 1})

    @classmethod
    def constant(cls, field: FiniteField, m: int, c: int) -> "MultiPoly":
        return cls(field, m, {(0,) * m: c})

    @property
    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def _same(self, other: "MultiPoly") -> None:
        if not isinstance(other, MultiPoly) or other.field != self.field or other.m != self.m:
            raise FieldMismatchError("polynomials over different rings")

    def __add__(self, other):
        self._same(other)
        return MultiPoly(self.field, self.m, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self):
        f = self.field
        return MultiPoly(f, self.m, {e: f.neg(c) for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._same(other)
        f = self.field
        out = []
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out.append((tuple(a + b for a, b in zip(e1, e2)), f.mul(c1, c2)))
        return MultiPoly(f, self.m, out)

    def __pow__(self, e: int):
        result = MultiPoly.constant(self.field, self.m, 1)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (self.field, self.m, self._terms) == (other.field, other.m, other._terms)

    __hash__ = None

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for exps, c in self._terms.items():
            mono = "*".join(f"X{i}^{e}" for i, e in enumerate(exps) if e)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)

    def to_list(self) -> list[list]:
        """JSON-friendly [[exponents], coefficient] pairs."""
        return [[list(e), c] for e, c in self._terms.items()]

    @classmethod
    def from_list(cls, field: FiniteField, m: int, data) -> "MultiPoly":
        return cls(field, m, [(tuple(e), c) for e, c in data])


def normal_form(f: MultiPoly) -> MultiPoly:
    """Remainder modulo (X_0^q - 1, ..., X_{m-1}^q - 1): exponents mod q."""
    q = f.field.order
    return MultiPoly(f.field, f.m, [(tuple(e % q for e in exps), c) for exps, c in f._terms.items()])


def is_normal(f: MultiPoly) -> bool:
    q = f.field.order
    return all(e < q for exps in f._terms for e in exps)


def psi(algebra: GroupAlgebra, f: MultiPoly) -> GAElem:
    if f.m != algebra.m:
        raise InvalidInputError(f"{f.m} variables but the group has rank {algebra.m}")
    if f.field != algebra.field:
        raise FieldMismatchError("polynomial and group algebra over different fields")
    q = algebra.q
    coeffs = np.zeros(algebra.size, dtype=np.int64)
    for exps, c in f._terms.items():
        g = sum((e % q) * q**l for l, e in enumerate(exps))
        coeffs[g] = algebra.field.add(int(coeffs[g]), c)
    return GAElem(algebra, coeffs)


def psi_inverse(a: GAElem) -> MultiPoly:
    algebra = a.algebra
    terms = {tuple(algebra.digits[g].tolist()): int(a.coeffs[g]) for g in a.support()}
    return MultiPoly(algebra.field, algebra.m, terms)


def random_multipoly(field: FiniteField, m: int, rng: np.random.Generator,
                     nterms: int = 6, max_exp: int | None = None) -> MultiPoly:
    """Random polynomial with exponents up to ``max_exp`` (default 2q)."""
    if max_exp is None:
        max_exp = 2 * field.order
    terms = [(tuple(rng.integers(0, max_exp + 1, m).tolist()), int(rng.integers(0, field.order)))
             for _ in range(nterms)]
    return MultiPoly(field, m, terms)
