"""Generalized Reed-Muller codes C_nu(m, q) inside F_q[G].

The shortened code HC_nu(m, q) is the cyclic code of length n = q^m - 1
generated by

    f_nu(z) = prod (z - gamma^i)   over 0 < w_q(i) <= m(q-1) - nu - 1,

with gamma primitive in F_{q^m}. ``extend`` appends the overall parity
coordinate at X^0 and places coordinate i at X^{g_i}, turning HC_nu into
C_nu. The generator sets K_nu, one basis per code, are built from the shifts
theta(nu, j) = extend(z^j f_nu).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import NamedTuple, Sequence

import numpy as np

from .errors import InternalConsistencyError, InvalidInputError, MalformedInputError, NoLeadingTermError
from .ff import (
    Embedding,
    FieldElem,
    FiniteField,
    find_primitive,
    multiplicative_order,
    subfield_embedding,
)
from .galois_ring import GaloisRing, GroupOrdering, group_order_map, hensel_lift
from .group_algebra import GAElem, GroupAlgebra, radical_power_basis
from .linalg import Subspace, rank, subspace_from_spanning

MAX_GROUP_SIZE = 4096


def weight_class(t: int, q: int, m: int) -> list[int]:
    """All k in [0, q^m - 1] whose base-q digits sum to t."""
    out = []
    for k in range(q**m):
        s, j = 0, k
        for _ in range(m):
            s += j % q
            j //= q
        if s == t:
            out.append(k)
    return out


def weight_count(t: int, q: int, m: int) -> int:
    """N(t): number of length-m base-q digit strings with digit sum t."""
    if t < 0 or t > m * (q - 1):
        return 0
    counts = [1]
    for _ in range(m):
        nxt = [0] * (len(counts) + q - 1)
        for s, c in enumerate(counts):
            for d in range(q):
                nxt[s + d] += c
        counts = nxt
    return counts[t]


class GrmContext:
    """Everything the code construction needs for one parameter triple.

    Build with :func:`build_context`.
    """

    def __init__(self, algebra: GroupAlgebra, ext: FiniteField, gamma: FieldElem,
                 ordering: GroupOrdering):
        self.algebra = algebra
        self.ring = algebra.ring
        self.field = algebra.field
        self.ext = ext
        self.p, self.r, self.m, self.q = self.ring.p, self.ring.r, self.ring.m, self.ring.q
        self.n = self.q**self.m - 1
        self.top = self.m * (self.q - 1)
        if gamma.field != ext:
            raise InvalidInputError("gamma must be an element of the extension field")
        if multiplicative_order(gamma) != self.n:
            raise InvalidInputError(f"gamma = {gamma.value} is not primitive in F_{ext.order}")
        self.gamma = gamma
        self.embedding: Embedding = subfield_embedding(self.field, ext)
        self.ordering = ordering
        self.order_map = group_order_map(self.ring, ordering)
        # slot[g] = 0 for the zero element, i + 1 for g = g_i
        slot = np.zeros(algebra.size, dtype=np.int64)
        slot[list(self.order_map)] = np.arange(1, self.n + 1)
        slot.setflags(write=False)
        self.slot = slot
        self._f_cache: dict[int, CyclicPoly] = {}

    def __repr__(self):
        return (f"GrmContext(p={self.p}, r={self.r}, m={self.m}, ordering={self.ordering.kind}, "
                f"gamma={self.gamma.value})")

    def check_nu(self, nu: int) -> None:
        if not (0 <= nu <= self.top - 1):
            raise MalformedInputError(f"order nu = {nu} outside [0, {self.top - 1}]")

    def to_coordinates(self, a: GAElem) -> np.ndarray:
        """Coefficient vector in the order X^0, X^{g_0}, ..., X^{g_{n-1}}."""
        return a.coeffs[[0, *self.order_map]]

    def from_coordinates(self, coords: Sequence[int]) -> GAElem:
        arr = np.zeros(self.algebra.size, dtype=np.int64)
        arr[[0, *self.order_map]] = np.asarray(coords, dtype=np.int64)
        return self.algebra.element(arr)


def build_context(p: int, r: int, m: int, *, ordering: str = "integer",
                  fbar: Sequence[int] | None = None, h: Sequence[int] | None = None,
                  ext_modulus: Sequence[int] | None = None, gamma: int | None = None,
                  check: bool = True) -> GrmContext:
    """Assemble ring, algebra, extension field and primitive element.

    For r = 1 the extension field is F_p[X]/(h), so powers of gamma can be
    read directly as group elements.
    """
    q = p**r
    if r < 1 or m < 1:
        raise InvalidInputError("r and m must be >= 1")
    if q**m > MAX_GROUP_SIZE:
        raise InvalidInputError(f"q^m = {q**m} exceeds the supported size {MAX_GROUP_SIZE}")
    if h is None and fbar is not None:
        fb = [c % p for c in fbar]
        h = (0, 1) if m == 1 and fb == [0, 1] else hensel_lift(p, r, fb)
        if len(h) != m + 1:
            raise InvalidInputError(f"fbar must have degree {m}")
    ring = GaloisRing(p, r, m, h, check=check)
    algebra = GroupAlgebra(ring)
    if r == 1:
        hmod = tuple(c % p for c in ring.h)
        if ext_modulus is not None and tuple(c % p for c in ext_modulus) != hmod:
            raise InvalidInputError("with r = 1 the extension modulus is h itself")
        ext = FiniteField(p, m, hmod)
    else:
        ext = FiniteField(p, r * m, ext_modulus)
    gam = find_primitive(ext) if gamma is None else FieldElem(ext, gamma)
    order = GroupOrdering("gamma", gam) if ordering == "gamma" else GroupOrdering(ordering)
    return GrmContext(algebra, ext, gam, order)


class CyclicPoly:
    """Element of A = F_q[Z]/(Z^n - 1): n coefficients, lowest degree first."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: GrmContext, coeffs):
        arr = np.zeros(ctx.n, dtype=np.int64)
        coeffs = np.asarray(coeffs, dtype=np.int64)
        if coeffs.shape[0] > ctx.n:
            raise MalformedInputError(f"more than n = {ctx.n} coefficients")
        arr[: coeffs.shape[0]] = coeffs
        arr.setflags(write=False)
        self.ctx = ctx
        self.coeffs = arr

    @property
    def degree(self) -> int:
        nz = np.flatnonzero(self.coeffs)
        return int(nz[-1]) if nz.size else -1

    def shift(self, j: int) -> "CyclicPoly":
        """z^j * self in A (cyclic)."""
        return CyclicPoly(self.ctx, np.roll(self.coeffs, j))

    def __eq__(self, other):
        if not isinstance(other, CyclicPoly):
            return NotImplemented
        return self.ctx is other.ctx and bool(np.array_equal(self.coeffs, other.coeffs))

    __hash__ = None

    def __repr__(self):
        terms = [f"{c}*z^{i}" for i, c in enumerate(self.coeffs.tolist()) if c]
        return " + ".join(terms) if terms else "0"


def f_nu_degree(ctx: GrmContext, nu: int) -> int:
    ctx.check_nu(nu)
    return sum(weight_count(t, ctx.q, ctx.m) for t in range(1, ctx.top - nu))


def f_nu_roots(ctx: GrmContext, nu: int) -> list[int]:
    """Exponents i with 0 < w_q(i) <= m(q-1) - nu - 1."""
    ctx.check_nu(nu)
    bound = ctx.top - nu - 1
    return [i for t in range(1, bound + 1) for i in weight_class(t, ctx.q, ctx.m)]


def f_nu_ext(ctx: GrmContext, nu: int) -> np.ndarray:
    """Coefficients of f_nu over F_{q^m} (lowest degree first)."""
    ext = ctx.ext
    poly = np.array([1], dtype=np.int64)
    for i in sorted(f_nu_roots(ctx, nu)):
        root = ext.pow(ctx.gamma.value, i)
        nxt = np.zeros(poly.shape[0] + 1, dtype=np.int64)
        nxt[1:] = poly
        nxt[:-1] = ext.vsub(nxt[:-1], ext.vmul(poly, root))
        poly = nxt
    return poly


def f_nu(ctx: GrmContext, nu: int) -> CyclicPoly:
    """Generator polynomial of HC_nu, with coefficients pulled back to F_q."""
    ctx.check_nu(nu)
    cached = ctx._f_cache.get(nu)
    if cached is not None:
        return cached
    big = f_nu_ext(ctx, nu)
    emb = ctx.embedding
    try:
        small = [emb.project(int(c)) for c in big]
    except Exception as exc:  # NotInSubfieldError
        raise InternalConsistencyError(f"f_{nu} has a coefficient outside F_{ctx.q}") from exc
    poly = CyclicPoly(ctx, small)
    ctx._f_cache[nu] = poly
    return poly


def extend(ctx: GrmContext, a: CyclicPoly) -> GAElem:
    """a_0 + ... + a_{n-1} z^{n-1}  ->  (-sum a_i) X^0 + sum a_i X^{g_i}."""
    f = ctx.field
    coeffs = np.zeros(ctx.algebra.size, dtype=np.int64)
    coeffs[list(ctx.order_map)] = a.coeffs
    coeffs[0] = f.neg(int(f.vsum(a.coeffs)))
    return GAElem(ctx.algebra, coeffs)


def theta(ctx: GrmContext, nu: int, j: int) -> GAElem:
    """extend(z^j f_nu) for 0 <= j <= n - 1 - deg f_nu."""
    f = f_nu(ctx, nu)
    limit = ctx.n - 1 - f.degree
    if not (0 <= j <= limit):
        raise MalformedInputError(f"shift j = {j} outside [0, {limit}] for nu = {nu}")
    return extend(ctx, f.shift(j))


class LeadingTerm(NamedTuple):
    rank: int | None  # i for X^{g_i}; None for the X^0 slot
    index: int  # group index of the monomial
    coeff: FieldElem


def leading_term(ctx: GrmContext, a: GAElem) -> LeadingTerm:
    nz = np.flatnonzero(a.coeffs)
    if nz.size == 0:
        raise NoLeadingTermError("the zero element has no leading term")
    slots = ctx.slot[nz]
    g = int(nz[int(np.argmax(slots))])
    top = int(ctx.slot[g])
    return LeadingTerm(top - 1 if top else None, g, FieldElem(ctx.field, int(a.coeffs[g])))


def shift_family(ctx: GrmContext, nu: int) -> list[CyclicPoly]:
    f = f_nu(ctx, nu)
    return [f.shift(j) for j in range(ctx.n - f.degree)]


def hc_code(ctx: GrmContext, nu: int) -> Subspace:
    """HC_nu as a subspace of F_q^n."""
    rows = np.array([c.coeffs for c in shift_family(ctx, nu)], dtype=np.int64)
    return subspace_from_spanning(ctx.field, rows, ctx.n)


def grm_generator_labels(ctx: GrmContext, nu: int) -> list[tuple[int, int]]:
    """(i, j) labels of K_nu in lexicographic order."""
    ctx.check_nu(nu)
    labels = [(0, 0)]
    for i in range(1, nu + 1):
        labels += [(i, j) for j in range(weight_count(ctx.top - i, ctx.q, ctx.m))]
    return labels


def grm_generators(ctx: GrmContext, nu: int) -> list[GAElem]:
    """K_nu = {theta_0^0} + {theta_i^j : 1 <= i <= nu, 0 <= j < N(m(q-1) - i)}."""
    return [theta(ctx, i, j) for i, j in grm_generator_labels(ctx, nu)]


def code_dimension(ctx: GrmContext, nu: int) -> int:
    """n - deg f_nu."""
    return ctx.n - f_nu_degree(ctx, nu)


def _span(ctx: GrmContext, elems: Sequence[GAElem]) -> Subspace:
    rows = np.array([e.coeffs for e in elems], dtype=np.int64).reshape(-1, ctx.algebra.size)
    return subspace_from_spanning(ctx.field, rows, ctx.algebra.size)


def grm_code(ctx: GrmContext, nu: int, check: bool = True) -> Subspace:
    """C_nu = extend(HC_nu), in group-index coordinates."""
    code = _span(ctx, [extend(ctx, c) for c in shift_family(ctx, nu)])
    if check:
        if _span(ctx, grm_generators(ctx, nu)) != code:
            raise InternalConsistencyError(f"span(K_{nu}) differs from C_{nu}")
        if code.dim != code_dimension(ctx, nu):
            raise InternalConsistencyError(f"dim C_{nu} = {code.dim} != n - deg f_{nu}")
    return code


def generator_matrix(ctx: GrmContext, nu: int) -> np.ndarray:
    """Rows of K_nu in coordinates X^0, X^{g_0}, ..., X^{g_{n-1}}."""
    gens = grm_generators(ctx, nu)
    return np.array([ctx.to_coordinates(e) for e in gens], dtype=np.int64).reshape(-1, ctx.n + 1)


@dataclass
class RadicalComparison:
    radical_dims: list[int]  # dim M^t, t = 0..m(q-1)
    code_dims: list[int]  # dim C_nu, nu = 0..m(q-1)-1
    equal: list[tuple[int, int]] = dc_field(default_factory=list)  # (t, nu) with M^t = C_nu
    bottom_ok: bool = False  # C_0 = M^{m(q-1)}
    top_ok: bool = False  # C_{m(q-1)-1} = M

    def codes_equal_to(self, t: int) -> list[int]:
        return [nu for tt, nu in self.equal if tt == t]


def compare_radical_grm(ctx: GrmContext) -> RadicalComparison:
    alg = ctx.algebra
    radicals = [radical_power_basis(alg, t) for t in range(ctx.top + 1)]
    codes = [grm_code(ctx, nu, check=False) for nu in range(ctx.top)]
    report = RadicalComparison([s.dim for s in radicals], [c.dim for c in codes])
    for t, mt in enumerate(radicals):
        for nu, c in enumerate(codes):
            if mt.dim == c.dim and mt == c:
                report.equal.append((t, nu))
    report.bottom_ok = codes[0] == radicals[ctx.top]
    report.top_ok = codes[-1] == radicals[1]
    return report


def rank_of(ctx: GrmContext, elems: Sequence[GAElem]) -> int:
    rows = np.array([e.coeffs for e in elems], dtype=np.int64).reshape(-1, ctx.algebra.size)
    return rank(ctx.field, rows, ctx.algebra.size)
