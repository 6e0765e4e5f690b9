"""The modular group algebra F_q[G], G the additive group of GR(q, m).

Elements are dense coefficient vectors of length q^m indexed by group index
(see :mod:`galois_grm.galois_ring`); the coefficient at index k is a_g for
the group element g with idx(g) = k. The Jennings machinery uses the free
generators 1, a, ..., a^(m-1) of G, whose group indices are q**l.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import FieldMismatchError, InvalidInputError, MalformedInputError, UnsupportedError
from .ff import FieldElem, FiniteField
from .galois_ring import GaloisRing
from .linalg import (
    Subspace,
    full_space,
    nullspace,
    rank,
    stack_reduce,
    subspace_from_spanning,
    zero_subspace,
)

# above this size the N x N translation table is not materialised
_TABLE_LIMIT = 1024


class GroupAlgebra:
    """R = F_q[G] for G = (GR(p^r, m), +) and F_q = F_{p^r}."""

    def __init__(self, ring: GaloisRing, field: FiniteField | None = None):
        if field is None:
            field = FiniteField(ring.p, ring.r)
        if field.p != ring.p or field.k != ring.r:
            raise InvalidInputError(f"coefficient field F_{field.order} does not match q = {ring.q}")
        self.ring = ring
        self.field = field
        self.q = ring.q
        self.m = ring.m
        self.size = ring.size
        self.nilpotency = self.m * (self.q - 1) + 1
        idx = np.arange(self.size, dtype=np.int64)
        digits = np.zeros((self.size, self.m), dtype=np.int64)
        for l in range(self.m):
            digits[:, l] = idx % self.q
            idx //= self.q
        digits.setflags(write=False)
        self.digits = digits
        self._qpow = np.array([self.q**l for l in range(self.m)], dtype=np.int64)

    def __eq__(self, other):
        return isinstance(other, GroupAlgebra) and (self.ring, self.field) == (other.ring, other.field)

    def __hash__(self):
        return hash((self.ring, self.field))

    def __repr__(self):
        return f"GroupAlgebra(q={self.q}, m={self.m})"

    # -- group index arithmetic --------------------------------------------

    def shift(self, g: int) -> np.ndarray:
        """perm with perm[k] = idx(k - g), so (a * X^g)[k] = a[perm[k]]."""
        return ((self.digits - self.digits[g]) % self.q) @ self._qpow

    def index_add(self, g: int, h: int) -> int:
        return int(((self.digits[g] + self.digits[h]) % self.q) @ self._qpow)

    def index_scale(self, c: int, g: int) -> int:
        return int((self.digits[g] * c % self.q) @ self._qpow)

    @cached_property
    def _sub_table(self) -> np.ndarray:
        # table[k, j] = idx(k - j)
        d = self.digits
        t = ((d[:, None, :] - d[None, :, :]) % self.q) @ self._qpow
        t.setflags(write=False)
        return t

    def mult_matrix(self, s: "GAElem") -> np.ndarray:
        """Matrix of a -> a * s in the monomial basis: entry [k, j] = s_{k-j}."""
        if self.size <= _TABLE_LIMIT:
            return s.coeffs[self._sub_table]
        return np.stack([s.coeffs[self.shift(j)] for j in range(self.size)], axis=1)

    # -- constructors -------------------------------------------------------

    def element(self, coeffs) -> "GAElem":
        arr = np.array([int(c) for c in coeffs] if not isinstance(coeffs, np.ndarray) else coeffs,
                       dtype=np.int64)
        if arr.shape != (self.size,):
            raise MalformedInputError(f"expected {self.size} coefficients, got {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= self.field.order):
            raise MalformedInputError("coefficients must be field encodings")
        return GAElem(self, arr)

    def zero(self) -> "GAElem":
        return GAElem(self, np.zeros(self.size, dtype=np.int64))

    def one(self) -> "GAElem":
        return self.monomial(0)

    def monomial(self, g: int, c: int = 1) -> "GAElem":
        if not (0 <= g < self.size):
            raise MalformedInputError(f"group index {g} outside [0, {self.size})")
        arr = np.zeros(self.size, dtype=np.int64)
        arr[g] = c
        return GAElem(self, arr)

    def all_ones(self) -> "GAElem":
        """sum over g in G of X^g."""
        return GAElem(self, np.ones(self.size, dtype=np.int64))

    def random(self, rng: np.random.Generator) -> "GAElem":
        return GAElem(self, rng.integers(0, self.field.order, self.size, dtype=np.int64))

    def generator_minus_one(self, l: int) -> "GAElem":
        """X^(a^l) - 1."""
        return self.monomial(self.q**l) - self.one()

    # -- multiplication -----------------------------------------------------

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        f = self.field
        if self.size <= _TABLE_LIMIT:
            return f.vsum(f.vmul(a[self._sub_table], b[None, :]), axis=1)
        out = np.zeros(self.size, dtype=np.int64)
        for h in np.flatnonzero(b):
            out = f.vadd(out, f.vmul(a[self.shift(int(h))], int(b[h])))
        return out


class GAElem:
    """Immutable element of a :class:`GroupAlgebra`."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: GroupAlgebra, coeffs: np.ndarray):
        coeffs = np.asarray(coeffs, dtype=np.int64)
        coeffs.setflags(write=False)
        self.algebra = algebra
        self.coeffs = coeffs

    def _same(self, other) -> "GAElem":
        if not isinstance(other, GAElem) or other.algebra != self.algebra:
            raise FieldMismatchError("elements of different group algebras")
        return other

    def _scalar(self, c) -> int | None:
        if isinstance(c, FieldElem):
            if c.field != self.algebra.field:
                raise FieldMismatchError("scalar from a different field")
            return c.value
        if isinstance(c, (int, np.integer)):
            return int(c) % self.algebra.field.p
        return None

    def __add__(self, other):
        other = self._same(other)
        return GAElem(self.algebra, self.algebra.field.vadd(self.coeffs, other.coeffs))

    def __sub__(self, other):
        other = self._same(other)
        return GAElem(self.algebra, self.algebra.field.vsub(self.coeffs, other.coeffs))

    def __neg__(self):
        return GAElem(self.algebra, self.algebra.field.vneg(self.coeffs))

    def __mul__(self, other):
        c = self._scalar(other)
        if c is not None:
            return self.scale(c)
        other = self._same(other)
        return GAElem(self.algebra, self.algebra.mul(self.coeffs, other.coeffs))

    def __rmul__(self, other):
        c = self._scalar(other)
        if c is None:
            return NotImplemented
        return self.scale(c)

    def scale(self, c: int) -> "GAElem":
        return GAElem(self.algebra, self.algebra.field.vmul(self.coeffs, c))

    def times_monomial(self, g: int) -> "GAElem":
        return GAElem(self.algebra, self.coeffs[self.algebra.shift(g)])

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = self.algebra.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, GAElem):
            return NotImplemented
        return self.algebra == other.algebra and bool(np.array_equal(self.coeffs, other.coeffs))

    __hash__ = None

    def __bool__(self):
        return bool(np.any(self.coeffs))

    def __repr__(self):
        terms = [f"{c}*X^{g}" for g, c in enumerate(self.coeffs.tolist()) if c]
        return " + ".join(terms) if terms else "0"

    def support(self) -> list[int]:
        return np.flatnonzero(self.coeffs).tolist()


def ga_mul(a: GAElem, b: GAElem) -> GAElem:
    return a * b


def ga_add(a: GAElem, b: GAElem) -> GAElem:
    return a + b


def ga_scale(c, a: GAElem) -> GAElem:
    return c * a


def augment(a: GAElem) -> FieldElem:
    """Sum of coefficients (the augmentation homomorphism R -> F_q)."""
    f = a.algebra.field
    return FieldElem(f, int(f.vsum(a.coeffs)))


def is_unit(a: GAElem) -> bool:
    return augment(a).value != 0


# -- Jennings basis ------------------------------------------------------------


class JenningsIndex(NamedTuple):
    i: int
    digits: tuple[int, ...]
    weight: int


def jennings_index(i: int, q: int, m: int) -> JenningsIndex:
    if not (0 <= i < q**m):
        raise MalformedInputError(f"index {i} outside [0, {q**m})")
    digits = []
    j = i
    for _ in range(m):
        digits.append(j % q)
        j //= q
    return JenningsIndex(i, tuple(digits), sum(digits))


def qr_weight(i: int, q: int, m: int) -> int:
    """Sum of the base-q digits of i."""
    return jennings_index(i, q, m).weight


def jennings_vector(algebra: GroupAlgebra, i: int) -> GAElem:
    """V_i = prod_l (X^(a^l) - 1)^(i_l) for the base-q digits i_l of i."""
    idx = jennings_index(i, algebra.q, algebra.m)
    result = algebra.one()
    for l, e in enumerate(idx.digits):
        if e:
            result = result * algebra.generator_minus_one(l) ** e
    return result


def _all_jennings(algebra: GroupAlgebra) -> np.ndarray:
    # V_i = V_{i - q^l} * (X^(q^l) - 1) with l the top nonzero digit of i
    N, q = algebra.size, algebra.q
    f = algebra.field
    out = np.zeros((N, N), dtype=np.int64)
    out[0, 0] = 1
    shifts = [algebra.shift(q**l) for l in range(algebra.m)]
    for i in range(1, N):
        l = 0
        while q ** (l + 1) <= i:
            l += 1
        prev = out[i - q**l]
        out[i] = f.vsub(prev[shifts[l]], prev)
    return out


def jennings_basis(algebra: GroupAlgebra, t: int) -> list[GAElem]:
    """B_t: the V_i with weight >= t, in increasing i."""
    top = algebra.m * (algebra.q - 1)
    if not (0 <= t <= top):
        raise MalformedInputError(f"level {t} outside [0, {top}]")
    mat = _jennings_matrix(algebra)
    weights = algebra.digits.sum(axis=1)
    return [GAElem(algebra, mat[i]) for i in np.flatnonzero(weights >= t)]


_JENNINGS_CACHE: dict[GroupAlgebra, np.ndarray] = {}


def _jennings_matrix(algebra: GroupAlgebra) -> np.ndarray:
    mat = _JENNINGS_CACHE.get(algebra)
    if mat is None:
        mat = _all_jennings(algebra)
        mat.setflags(write=False)
        _JENNINGS_CACHE[algebra] = mat
    return mat


def radical_power_basis(algebra: GroupAlgebra, t: int) -> Subspace:
    """M^t as the span of the Jennings vectors of weight >= t."""
    top = algebra.m * (algebra.q - 1)
    if not (0 <= t <= top + 1):
        raise MalformedInputError(f"level {t} outside [0, {top + 1}]")
    if t == top + 1:
        return zero_subspace(algebra.field, algebra.size)
    mat = _jennings_matrix(algebra)
    weights = algebra.digits.sum(axis=1)
    return subspace_from_spanning(algebra.field, mat[weights >= t], algebra.size)


def radical_power_oracle(algebra: GroupAlgebra, t: int, max_size: int = 81) -> Subspace:
    """M^t computed without Jennings vectors: M is spanned by the X^g - 1,
    and M^s = span{ b * (X^g - 1) : b in M^(s-1), g != 0 }."""
    if t < 0:
        raise MalformedInputError("level must be >= 0")
    if algebra.size > max_size:
        raise InvalidInputError(f"oracle capped at q^m <= {max_size} (got {algebra.size})")
    N = algebra.size
    f = algebra.field
    current = full_space(f, N)
    shifts = [algebra.shift(g) for g in range(1, N)]
    for _ in range(t):
        B = current.basis
        if B.shape[0] == 0:
            break
        products = np.vstack([f.vsub(B[:, s], B) for s in shifts])
        current = subspace_from_spanning(f, products, N)
    return current


def annihilator(spanning: Sequence[GAElem]) -> Subspace:
    """{a in R : a * s = 0 for every s in the spanning set}."""
    spanning = list(spanning)
    if not spanning:
        raise InvalidInputError("annihilator needs a non-empty spanning set")
    algebra = spanning[0].algebra
    for s in spanning[1:]:
        if s.algebra != algebra:
            raise FieldMismatchError("spanning set mixes group algebras")
    f, N = algebra.field, algebra.size
    rows = stack_reduce(f, (algebra.mult_matrix(s) for s in spanning), N)
    return nullspace(f, rows, N)


def subspace_elements(algebra: GroupAlgebra, s: Subspace) -> list[GAElem]:
    return [GAElem(algebra, row) for row in s.basis]


def subset_product(algebra: GroupAlgebra, U: Iterable[int]) -> GAElem:
    """prod over g in U of (X^g - 1)^(p-1); r = 1 only."""
    if algebra.ring.r != 1:
        raise UnsupportedError("subset_product is only defined over prime fields (r = 1)")
    U = list(U)
    if not U or 0 in U:
        raise InvalidInputError("U must be non-empty and exclude 0")
    p = algebra.q
    result = algebra.one()
    for g in U:
        result = result * (algebra.monomial(g) - algebra.one()) ** (p - 1)
    return result


def span_sum(algebra: GroupAlgebra, U: Iterable[int]) -> GAElem:
    """sum of X^g over the F_p-span of U (r = 1)."""
    span = {0}
    for g in U:
        new = set(span)
        for h in span:
            x = h
            for _ in range(algebra.q - 1):
                x = algebra.index_add(x, g)
                new.add(x)
        span = new
    arr = np.zeros(algebra.size, dtype=np.int64)
    arr[sorted(span)] = 1
    return GAElem(algebra, arr)


def is_independent(algebra: GroupAlgebra, U: Iterable[int]) -> bool:
    """Linear independence of group elements over F_p (r = 1)."""
    U = list(U)
    fp = FiniteField(algebra.ring.p)
    return rank(fp, algebra.digits[U], algebra.m) == len(U)
