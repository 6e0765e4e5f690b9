"""Prime and extension fields F_{p^k} with integer-encoded elements.

An element with coefficient sequence (c_0, ..., c_{k-1}) modulo the field's
modulus is encoded as the integer sum(c_i * p**i). That encoding is the only
representation used for I/O and for the vectorised (numpy) operations that
the linear algebra and group algebra layers rely on.

Multiplication goes through log/exp tables built once per field from the
smallest-encoding primitive element; fields are desk-sized (<= 4096 elements
is the tested range), so tables are cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _poly
from .errors import (
    FieldMismatchError,
    InvalidInputError,
    NoEmbeddingError,
    NotInSubfieldError,
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise InvalidInputError(f"p must be prime, got {p}")


def is_irreducible(p: int, f: Sequence[int]) -> bool:
    """Rabin's irreducibility test for a monic polynomial over F_p.

    f is a coefficient sequence, low degree first.
    """
    _check_prime(p)
    f = _poly.trim(f, p)
    k = len(f) - 1
    if k < 1 or f[-1] != 1:
        raise InvalidInputError("is_irreducible expects a monic polynomial of degree >= 1")
    if k == 1:
        return True
    x = [0, 1]
    if _poly.powmod(x, p**k, f, p) != _poly.mod(x, f, p):
        return False
    for ell in prime_factors(k):
        h = _poly.sub(_poly.powmod(x, p ** (k // ell), f, p), x, p)
        if len(_poly.gcd(h, f, p)) != 1:
            return False
    return True


def _monic_from_encoding(p: int, k: int, enc: int) -> tuple[int, ...]:
    coeffs = []
    for _ in range(k):
        coeffs.append(enc % p)
        enc //= p
    return tuple(coeffs) + (1,)


def find_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Monic irreducible of degree k whose lower coefficients have the
    smallest encoding sum(c_i p^i)."""
    _check_prime(p)
    if k < 1:
        raise InvalidInputError("degree must be >= 1")
    for enc in range(p**k):
        f = _monic_from_encoding(p, k, enc)
        if is_irreducible(p, f):
            return f
    raise AssertionError("unreachable: irreducibles exist in every degree")


def _x_is_primitive(p: int, f: Sequence[int]) -> bool:
    k = len(f) - 1
    n = p**k - 1
    x = [0, 1]
    if _poly.powmod(x, n, f, p) != [1]:
        return False
    return all(_poly.powmod(x, n // ell, f, p) != [1] for ell in prime_factors(n))


def find_primitive_polynomial(p: int, k: int) -> tuple[int, ...]:
    """Smallest-encoding monic irreducible of degree k whose root x is primitive."""
    _check_prime(p)
    for enc in range(p**k):
        f = _monic_from_encoding(p, k, enc)
        if is_irreducible(p, f) and _x_is_primitive(p, f):
            return f
    raise AssertionError("unreachable: primitive polynomials exist in every degree")


def binom_mod_p(n: int, i: int, p: int) -> int:
    """C(n, i) mod p by Lucas' theorem; returns 0 when i > n."""
    if i < 0 or i > n:
        return 0
    result = 1
    while n or i:
        ni, ii = n % p, i % p
        if ii > ni:
            return 0
        c = 1
        for j in range(ii):
            c = c * (ni - j) // (j + 1)
        result = result * c % p
        n //= p
        i //= p
    return result


class FiniteField:
    """The field F_{p^k} = F_p[x]/(modulus), elements encoded as ints."""

    def __init__(self, p: int, k: int = 1, modulus: Sequence[int] | None = None):
        _check_prime(p)
        if k < 1:
            raise InvalidInputError("extension degree must be >= 1")
        if modulus is None:
            modulus = find_irreducible(p, k)
        mod = tuple(c % p for c in modulus)
        while mod and mod[-1] == 0:
            mod = mod[:-1]
        if len(mod) != k + 1 or mod[-1] != 1:
            raise InvalidInputError(f"modulus must be monic of degree {k}")
        if not is_irreducible(p, mod):
            raise InvalidInputError(f"modulus {list(mod)} is reducible over F_{p}")
        self.p = p
        self.k = k
        self.modulus = mod
        self.order = p**k
        self._build_tables()

    # -- construction ------------------------------------------------------

    def _poly_mul(self, a: int, b: int) -> int:
        prod = _poly.mod(_poly.mul(self.to_coeffs(a), self.to_coeffs(b), self.p), self.modulus, self.p)
        return self.from_coeffs(prod)

    def _slow_pow(self, a: int, e: int) -> int:
        return self.from_coeffs(_poly.powmod(self.to_coeffs(a), e, self.modulus, self.p))

    def _build_tables(self) -> None:
        q, p = self.order, self.p
        n = q - 1
        self._pw = np.array([p**i for i in range(self.k)], dtype=np.int64)
        digits = np.zeros((q, self.k), dtype=np.int64)
        enc = np.arange(q, dtype=np.int64)
        for i in range(self.k):
            digits[:, i] = enc % p
            enc //= p
        self._digits = digits

        if q == 2:
            gen = 1
        else:
            factors = prime_factors(n)
            for gen in range(2, q):
                if self._slow_pow(gen, n) == 1 and all(
                    self._slow_pow(gen, n // ell) != 1 for ell in factors
                ):
                    break
        self._primitive = gen
        exp = [1] * n
        for i in range(1, n):
            exp[i] = self._poly_mul(exp[i - 1], gen)
        log = [-1] * q
        for i, e in enumerate(exp):
            log[e] = i
        self._exp_list = exp
        self._log_list = log
        self._exp = np.array(exp + exp, dtype=np.int64)
        self._log = np.array(log, dtype=np.int64)

    # -- identity ----------------------------------------------------------

    def _key(self):
        return (self.p, self.k, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FiniteField) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FiniteField(p={self.p}, k={self.k}, modulus={list(self.modulus)})"

    # -- encodings ---------------------------------------------------------

    def to_coeffs(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.k:
            coeffs = _poly.mod(coeffs, self.modulus, self.p)
        return sum((c % self.p) * self.p**i for i, c in enumerate(coeffs))

    def __call__(self, value: int) -> "FieldElem":
        return FieldElem(self, value)

    def elements(self) -> list["FieldElem"]:
        return [FieldElem(self, a) for a in range(self.order)]

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    @property
    def primitive(self) -> int:
        return self._primitive

    def check(self, a: int) -> int:
        if not (0 <= a < self.order):
            raise InvalidInputError(f"{a} is not an element encoding of F_{self.order}")
        return a

    # -- scalar arithmetic on encodings -------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        return int(((self._digits[a] + self._digits[b]) % self.p) @ self._pw)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.k == 1:
            return -a % self.p
        return int((-self._digits[a] % self.p) @ self._pw)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp_list[(self._log_list[a] + self._log_list[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self._exp_list[-self._log_list[a] % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return self._exp_list[self._log_list[a] * e % (self.order - 1)]

    def log(self, a: int) -> int:
        """Discrete log to the base of :attr:`primitive`."""
        if a == 0:
            raise ZeroDivisionError("log of zero")
        return self._log_list[a]

    # -- vectorised arithmetic on int64 arrays -------------------------------

    def vadd(self, a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        return ((self._digits[a] + self._digits[b]) % self.p) @ self._pw

    def vneg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        if self.k == 1:
            return -a % self.p
        return (-self._digits[a] % self.p) @ self._pw

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return (a * b) % self.p
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def vinv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def vsum(self, a, axis=None):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor.reduce(a.ravel() if axis is None else a, axis=axis or 0)
        if self.k == 1:
            return a.sum(axis=axis) % self.p
        d = self._digits[a]
        if axis is None:
            return (d.reshape(-1, self.k).sum(axis=0) % self.p) @ self._pw
        if axis < 0:
            axis += a.ndim
        return (d.sum(axis=axis) % self.p) @ self._pw

    def vdot(self, matrix, vector):
        """Matrix-vector product over the field."""
        return self.vsum(self.vmul(matrix, np.asarray(vector)[None, :]), axis=1)


@dataclass(frozen=True)
class FieldElem:
    field: FiniteField
    value: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.field.check(int(self.value)))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.field.to_coeffs(self.value))

    def _other(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldMismatchError(f"{other.field!r} vs {self.field!r}")
            return other.value
        if isinstance(other, int):
            return other % self.field.p  # integers act through the prime subfield
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElem(self.field, self.field.div(self.value, b))

    def __pow__(self, e: int):
        return FieldElem(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.field, self.field.inv(self.value))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"F{self.field.order}({self.value})"


def fq_add(a: FieldElem, b: FieldElem) -> FieldElem:
    return a + b


def fq_neg(a: FieldElem) -> FieldElem:
    return -a


def fq_mul(a: FieldElem, b: FieldElem) -> FieldElem:
    return a * b


def fq_pow(a: FieldElem, e: int) -> FieldElem:
    return a**e


def fq_inv(a: FieldElem) -> FieldElem:
    return a.inverse()


def multiplicative_order(a: FieldElem) -> int:
    if a.value == 0:
        raise ZeroDivisionError("zero has no multiplicative order")
    field = a.field
    order = field.order - 1
    for ell in prime_factors(field.order - 1):
        while order % ell == 0 and field.pow(a.value, order // ell) == 1:
            order //= ell
    return order


def find_primitive(field: FiniteField) -> FieldElem:
    """Smallest-encoding element of multiplicative order p^k - 1."""
    return FieldElem(field, field.primitive)


class Embedding:
    """Field homomorphism F_{p^a} -> F_{p^b} fixed by sending the class of x
    to the smallest-encoding root of the small field's modulus."""

    def __init__(self, sub: FiniteField, sup: FiniteField):
        if sub.p != sup.p or sup.k % sub.k:
            raise NoEmbeddingError(f"F_{sub.order} does not embed in F_{sup.order}")
        self.sub = sub
        self.sup = sup
        root = None
        for cand in range(sup.order):
            acc = 0
            for c in reversed(sub.modulus):
                acc = sup.add(sup.mul(acc, cand), c)
            if acc == 0:
                root = cand
                break
        if root is None:
            raise NoEmbeddingError("modulus of subfield has no root in the extension")
        self.root = root
        powers = [1]
        for _ in range(1, sub.k):
            powers.append(sup.mul(powers[-1], root))
        image = []
        for a in range(sub.order):
            acc = 0
            for c, w in zip(sub.to_coeffs(a), powers):
                acc = sup.add(acc, sup.mul(c, w))
            image.append(acc)
        self.image = tuple(image)
        self._preimage = {v: i for i, v in enumerate(image)}

    def __call__(self, a: int) -> int:
        return self.image[a]

    def contains(self, e: int) -> bool:
        return self.sup.pow(e, self.sub.order) == e

    def project(self, e: int) -> int:
        try:
            return self._preimage[e]
        except KeyError:
            raise NotInSubfieldError(
                f"{e} is not in the image of F_{self.sub.order} inside F_{self.sup.order}"
            ) from None


def subfield_embedding(sub: FiniteField, sup: FiniteField) -> Embedding:
    return Embedding(sub, sup)
