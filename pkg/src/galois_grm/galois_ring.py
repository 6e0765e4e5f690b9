"""Galois rings GR(p^r, m) = Z_{p^r}[X]/(h) and their additive groups.

Elements are coordinate tuples in the basis 1, a, ..., a^(m-1), where a is
the class of X. The additive group is indexed by reading the coordinates as
base-q digits (q = p^r): idx(v) = sum(v_l * q**l). Addition of group
elements is then digit-wise addition mod q.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import _poly
from .errors import (
    FieldMismatchError,
    InvalidInputError,
    MalformedInputError,
    UnsupportedError,
)
from .ff import FieldElem, FiniteField, find_irreducible, is_irreducible, multiplicative_order


def _check_fbar(p: int, fbar: Sequence[int]) -> list[int]:
    f = _poly.trim(fbar, p)
    if len(f) < 2 or f[-1] != 1:
        raise InvalidInputError("fbar must be monic of degree >= 1")
    if f[0] == 0:
        raise InvalidInputError("fbar(0) = 0: not a factor of X^(p^m - 1) - 1")
    if not is_irreducible(p, f):
        raise InvalidInputError(f"fbar {f} is reducible over F_{p}")
    return f


def hensel_lift(p: int, r: int, fbar: Sequence[int]) -> tuple[int, ...]:
    """Lift an irreducible fbar over F_p to the monic divisor of X^(p^m-1) - 1
    over Z_{p^r} that reduces to fbar mod p.

    Quadratic lifting of the coprime factorisation X^n - 1 = f * g with the
    Bezout cofactors carried along; precision doubles each round.
    """
    if r < 1:
        raise InvalidInputError("r must be >= 1")
    f = _check_fbar(p, fbar)
    m = len(f) - 1
    n = p**m - 1
    target = [-1] + [0] * (n - 1) + [1]
    g, rem = _poly.divmod_(target, f, p)
    if rem:
        raise InvalidInputError("fbar does not divide X^(p^m - 1) - 1 over F_p")
    one, s, t = _poly.xgcd(f, g, p)
    if one != [1]:
        raise InvalidInputError("fbar is a repeated factor of X^(p^m - 1) - 1")

    # invariant: target = f*g, s*f + t*g = 1 (mod M), f and g monic, deg s < deg g, deg t < deg f
    M = p
    final = p**r
    while M < final:
        M = min(M * M, final)
        e = _poly.sub(target, _poly.mul(f, g, M), M)
        qt, rt = _poly.divmod_(_poly.mul(t, e, M), f, M)
        f_new = _poly.add(f, rt, M)
        g_new = _poly.add(g, _poly.add(_poly.mul(s, e, M), _poly.mul(qt, g, M), M), M)
        b = _poly.sub(_poly.add(_poly.mul(s, f_new, M), _poly.mul(t, g_new, M), M), [1], M)
        c, d = _poly.divmod_(_poly.mul(t, b, M), f_new, M)
        t = _poly.sub(t, d, M)
        s = _poly.sub(_poly.sub(s, _poly.mul(s, b, M), M), _poly.mul(c, g_new, M), M)
        f, g = f_new, g_new
    return tuple(f + [0] * (m + 1 - len(f)))


class GaloisRing:
    """GR(p^r, m). ``h`` defaults to the Hensel lift of the canonical
    irreducible of degree m (or X when m = 1)."""

    def __init__(self, p: int, r: int, m: int, h: Sequence[int] | None = None, *, check: bool = True):
        if r < 1 or m < 1:
            raise InvalidInputError("r and m must be >= 1")
        FiniteField(p)  # validates p
        self.p, self.r, self.m = p, r, m
        self.q = p**r
        self.size = self.q**m
        if h is None:
            h = (0, 1) if m == 1 else hensel_lift(p, r, find_irreducible(p, m))
        h = tuple(c % self.q for c in h)
        if len(h) != m + 1 or h[-1] != 1:
            raise InvalidInputError(f"h must be monic of degree {m} over Z_{self.q}")
        self.h = h
        if check:
            problems = self.defects()
            if problems:
                raise InvalidInputError("; ".join(problems))

    def defects(self) -> list[str]:
        """Ways in which h fails to define GR(p^r, m); empty when valid."""
        out = []
        if self.m == 1:
            return out
        hbar = _poly.trim(self.h, self.p)
        if len(hbar) != self.m + 1 or not is_irreducible(self.p, hbar):
            out.append("h mod p is not irreducible")
        n = self.p**self.m - 1
        target = [-1] + [0] * (n - 1) + [1]
        if _poly.mod(target, self.h, self.q):
            out.append(f"h does not divide X^{n} - 1 over Z_{self.q}")
        return out

    def _key(self):
        return (self.p, self.r, self.m, self.h)

    def __eq__(self, other):
        return isinstance(other, GaloisRing) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"GaloisRing(p={self.p}, r={self.r}, m={self.m}, h={list(self.h)})"

    # -- elements ---------------------------------------------------------

    def element(self, coeffs: Sequence[int]) -> "GRElem":
        coeffs = list(coeffs)
        if len(coeffs) > self.m:
            coeffs = _poly.mod(coeffs, self.h, self.q)
        coeffs = coeffs + [0] * (self.m - len(coeffs))
        return GRElem(self, tuple(c % self.q for c in coeffs))

    @property
    def zero(self) -> "GRElem":
        return self.element([])

    @property
    def one(self) -> "GRElem":
        return self.element([1])

    @property
    def alpha(self) -> "GRElem":
        """Class of X."""
        return self.element([0, 1])

    def elements(self) -> list["GRElem"]:
        return [index_to_element(self, i) for i in range(self.size)]

    def residue_field(self) -> FiniteField:
        """F_{p^m} = GR / pGR, with modulus h mod p."""
        return FiniteField(self.p, self.m, [c % self.p for c in self.h])

    def residue(self, v: "GRElem") -> int:
        """Encoding of the image of v in :meth:`residue_field`."""
        return sum((c % self.p) * self.p**i for i, c in enumerate(v.coeffs))


@dataclass(frozen=True)
class GRElem:
    ring: GaloisRing
    coeffs: tuple[int, ...]

    def _same(self, other: "GRElem") -> None:
        if not isinstance(other, GRElem) or other.ring != self.ring:
            raise FieldMismatchError("elements of different Galois rings")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.element([other])
        self._same(other)
        q = self.ring.q
        return GRElem(self.ring, tuple((a + b) % q for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        q = self.ring.q
        return GRElem(self.ring, tuple(-a % q for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.element([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = self.ring.element([other])
        self._same(other)
        ring = self.ring
        prod = _poly.mod(_poly.mul(self.coeffs, other.coeffs, ring.q), ring.h, ring.q)
        return ring.element(prod)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self):
        return any(self.coeffs)

    @property
    def index(self) -> int:
        return element_to_index(self)

    def is_unit(self) -> bool:
        return unit_decompose(self)[0] == 0

    def __repr__(self):
        return f"GR{self.coeffs}"


def gr_add(a: GRElem, b: GRElem) -> GRElem:
    return a + b


def gr_neg(a: GRElem) -> GRElem:
    return -a


def gr_mul(a: GRElem, b: GRElem) -> GRElem:
    return a * b


def _valuation(c: int, p: int, r: int) -> int:
    if c == 0:
        return r
    t = 0
    while c % p == 0:
        c //= p
        t += 1
    return t


def unit_decompose(v: GRElem) -> tuple[int, GRElem]:
    """Write v = p^t * u with u a unit.

    u is only determined modulo p^(r-t); the representative returned divides
    each coordinate by p^t exactly. For v = 0 this returns (r, 1).
    """
    ring = v.ring
    t = min(_valuation(c, ring.p, ring.r) for c in v.coeffs)
    if t == ring.r:
        return t, ring.one
    pt = ring.p**t
    return t, GRElem(ring, tuple(c // pt for c in v.coeffs))


def index_to_element(ring: GaloisRing, i: int) -> GRElem:
    if not (0 <= i < ring.size):
        raise MalformedInputError(f"group index {i} outside [0, {ring.size})")
    digits = []
    for _ in range(ring.m):
        digits.append(i % ring.q)
        i //= ring.q
    return GRElem(ring, tuple(digits))


def element_to_index(v: GRElem) -> int:
    q = v.ring.q
    return sum(c * q**l for l, c in enumerate(v.coeffs))


def index_add(ring: GaloisRing, i: int, j: int) -> int:
    return element_to_index(index_to_element(ring, i) + index_to_element(ring, j))


@dataclass(frozen=True)
class GroupOrdering:
    """Total order 0 < g_0 < ... < g_{q^m-2} on the additive group.

    ``integer``: g_i is the element with group index i + 1.
    ``gamma``: g_i = gamma**i in GR(p, m) = F_{p^m}; only valid when r = 1 and
    gamma lives in a field whose modulus is h.
    """

    kind: str = "integer"
    gamma: FieldElem | None = None

    def __post_init__(self):
        if self.kind not in ("integer", "gamma"):
            raise InvalidInputError(f"unknown ordering {self.kind!r}")
        if self.kind == "gamma" and self.gamma is None:
            raise InvalidInputError("gamma ordering needs a primitive element")


def group_order_map(ring: GaloisRing, ordering: GroupOrdering) -> tuple[int, ...]:
    """Group indices (idx(g_0), ..., idx(g_{q^m-2}))."""
    if ordering.kind == "integer":
        return tuple(range(1, ring.size))
    if ring.r != 1:
        raise UnsupportedError("gamma-power ordering requires r = 1")
    gamma = ordering.gamma
    field = gamma.field
    if field.p != ring.p or field.k != ring.m or tuple(field.modulus) != tuple(ring.h):
        raise InvalidInputError("gamma must live in the field F_p[X]/(h) of the ring")
    if multiplicative_order(gamma) != ring.size - 1:
        raise InvalidInputError("gamma is not primitive")
    # with r = 1 the field encoding of an element equals its group index
    out, x = [], 1
    for _ in range(ring.size - 1):
        out.append(x)
        x = field.mul(x, gamma.value)
    return tuple(out)
