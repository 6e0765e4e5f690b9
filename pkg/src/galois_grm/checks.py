"""Identity checks run by ``galois-grm verify`` and ``example16``.

Each check returns a :class:`CheckResult`; nothing here raises on a failed
identity, so a single run reports every violation.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from .ff import FiniteField, binom_mod_p, multiplicative_order
from .galois_ring import GaloisRing, element_to_index, index_to_element, unit_decompose
from .group_algebra import (
    GroupAlgebra,
    annihilator,
    augment,
    jennings_basis,
    jennings_vector,
    radical_power_basis,
    radical_power_oracle,
    subspace_elements,
)
from .grm import (
    GrmContext,
    build_context,
    code_dimension,
    compare_radical_grm,
    extend,
    f_nu,
    f_nu_degree,
    f_nu_ext,
    grm_code,
    grm_generator_labels,
    grm_generators,
    leading_term,
    rank_of,
    shift_family,
    theta,
    weight_class,
    weight_count,
)
from .linalg import rank, subspace_from_spanning
from .quotient_iso import normal_form, psi, psi_inverse, random_multipoly


@dataclass
class CheckResult:
    name: str
    identity: str
    ok: bool
    detail: str = ""


Check = Callable[[], "tuple[bool, str] | bool"]


def _run(name: str, identity: str, fn: Check) -> CheckResult:
    try:
        out = fn()
    except Exception as exc:  # a crash counts as a failed identity
        return CheckResult(name, identity, False, f"{type(exc).__name__}: {exc}")
    ok, detail = out if isinstance(out, tuple) else (out, "")
    return CheckResult(name, identity, bool(ok), detail)


# -- field -----------------------------------------------------------------


def _field_axioms(F: FiniteField, rng, samples: int):
    a, b, c = (rng.integers(0, F.order, samples) for _ in range(3))
    assoc_add = np.array_equal(F.vadd(F.vadd(a, b), c), F.vadd(a, F.vadd(b, c)))
    assoc_mul = np.array_equal(F.vmul(F.vmul(a, b), c), F.vmul(a, F.vmul(b, c)))
    comm = np.array_equal(F.vmul(a, b), F.vmul(b, a)) and np.array_equal(F.vadd(a, b), F.vadd(b, a))
    dist = np.array_equal(F.vmul(a, F.vadd(b, c)), F.vadd(F.vmul(a, b), F.vmul(a, c)))
    nz = a[a != 0]
    inv = np.all(F.vmul(nz, F.vinv(nz)) == 1)
    # table multiplication agrees with polynomial multiplication mod the modulus
    poly = all(F._poly_mul(int(x), int(y)) == F.mul(int(x), int(y)) for x, y in zip(a[:50], b[:50]))
    ok = assoc_add and assoc_mul and comm and dist and inv and poly
    return ok, f"assoc={assoc_add and assoc_mul} comm={comm} dist={dist} inv={inv} poly={poly}"


def _frobenius(F: FiniteField, rng):
    if F.order <= 81:
        pairs = itertools.product(range(F.order), repeat=2)
    else:
        pairs = zip(rng.integers(0, F.order, 2000).tolist(), rng.integers(0, F.order, 2000).tolist())
    p = F.p
    for a, b in pairs:
        if F.pow(F.add(a, b), p) != F.add(F.pow(a, p), F.pow(b, p)):
            return False, f"fails at ({a}, {b})"
    return True


def _embedding_hom(ctx: GrmContext, rng):
    emb, sub, sup = ctx.embedding, ctx.field, ctx.ext
    if sub.order <= 16:
        pairs = itertools.product(range(sub.order), repeat=2)
    else:
        pairs = zip(rng.integers(0, sub.order, 1000).tolist(), rng.integers(0, sub.order, 1000).tolist())
    if emb(1) != 1:
        return False, "image(1) != 1"
    for a, b in pairs:
        if emb(sub.add(a, b)) != sup.add(emb(a), emb(b)) or emb(sub.mul(a, b)) != sup.mul(emb(a), emb(b)):
            return False, f"fails at ({a}, {b})"
    return len(set(emb.image)) == sub.order, "injective"


def field_checks(ctx: GrmContext, rng, samples: int = 1000) -> Iterator[CheckResult]:
    F, E = ctx.field, ctx.ext
    yield _run("field.axioms", f"field axioms in F_{F.order}", lambda: _field_axioms(F, rng, samples))
    yield _run("field.axioms.ext", f"field axioms in F_{E.order}", lambda: _field_axioms(E, rng, samples))
    yield _run("field.frobenius", "(a+b)^p = a^p + b^p", lambda: _frobenius(F, rng) and _frobenius(E, rng))
    q = ctx.q
    yield _run("field.binomial", "binom(q-1, i) = (-1)^i mod p",
               lambda: all(binom_mod_p(q - 1, i, ctx.p) == (-1) ** i % ctx.p for i in range(q)))
    yield _run("field.primitive", "gamma has order q^m - 1",
               lambda: (multiplicative_order(ctx.gamma) == ctx.n, f"gamma={ctx.gamma.value}"))
    yield _run("field.embedding", "F_q -> F_{q^m} is an injective homomorphism",
               lambda: _embedding_hom(ctx, rng))


# -- Galois ring -------------------------------------------------------------


def _ring_elements(R: GaloisRing, rng, count: int):
    if R.size <= 256:
        return R.elements()
    return [index_to_element(R, int(i)) for i in rng.integers(0, R.size, count)]


def _ring_axioms(R: GaloisRing, rng, samples: int):
    els = [index_to_element(R, int(i)) for i in rng.integers(0, R.size, 3 * samples)]
    for a, b, c in zip(els[0::3], els[1::3], els[2::3]):
        if (a * b) * c != a * (b * c) or a * (b + c) != a * b + a * c or a * b != b * a:
            return False, f"fails at {a}, {b}, {c}"
    one = R.one
    char_ok = not (one * R.q) and (R.r == 1 or bool(one * (R.q // R.p)))
    return char_ok, "characteristic" if not char_ok else ""


def _residue_hom(R: GaloisRing, rng, samples: int):
    K = R.residue_field()
    els = [index_to_element(R, int(i)) for i in rng.integers(0, R.size, 2 * samples)]
    for a, b in zip(els[0::2], els[1::2]):
        ra, rb = R.residue(a), R.residue(b)
        if R.residue(a + b) != K.add(ra, rb) or R.residue(a * b) != K.mul(ra, rb):
            return False, f"fails at {a}, {b}"
    return True


def _units(R: GaloisRing, rng):
    unit_group_order = (R.p**R.m - 1) * R.p ** (R.m * (R.r - 1))
    for v in _ring_elements(R, rng, 500):
        t, u = unit_decompose(v)
        if (t == 0) != (R.residue(v) != 0):
            return False, f"unit test disagrees at {v}"
        if v and R.element([R.p**t]) * u != v:
            return False, f"p^t u != v at {v}"
        # the unit group has order (p^m - 1) p^(m(r-1))
        if t == 0 and v ** unit_group_order != R.one:
            return False, f"{v} has no inverse"
    return True


def _ideal_chain(R: GaloisRing):
    if R.size > 256:
        return True, "skipped (q^m > 256)"
    counts = [0] * (R.r + 1)
    for v in R.elements():
        counts[unit_decompose(v)[0]] += 1
    for s in range(R.r + 1):
        size = sum(counts[s:])
        if size != R.p ** (R.m * (R.r - s)):
            return False, f"|p^{s} GR| = {size}"
    return True


def ring_checks(ctx: GrmContext, rng, samples: int = 200) -> Iterator[CheckResult]:
    R = ctx.ring
    yield _run("ring.modulus", "h is basic irreducible and divides X^(p^m-1) - 1",
               lambda: (not R.defects(), "; ".join(R.defects())))
    yield _run("ring.axioms", "ring axioms and characteristic p^r", lambda: _ring_axioms(R, rng, samples))
    yield _run("ring.residue", "reduction mod p is a ring map onto F_{p^m}",
               lambda: _residue_hom(R, rng, samples))
    yield _run("ring.units", "v is a unit iff v = p^0 u iff v mod p != 0", lambda: _units(R, rng))
    yield _run("ring.ideals", "|p^s GR| = p^(m(r-s))", lambda: _ideal_chain(R))
    yield _run("ring.index", "index/element bijection",
               lambda: all(element_to_index(index_to_element(R, i)) == i for i in range(R.size)))


# -- group algebra -------------------------------------------------------------


def _power_identity(A: GroupAlgebra, rng, samples: int):
    for _ in range(samples):
        a = A.random(rng)
        if a ** A.q != A.one() * augment(a):
            return False, f"fails for {a}"
    return True


def _radical_generators(A: GroupAlgebra, rng):
    f = A.field
    gens = np.array([(A.monomial(g) - A.one()).coeffs for g in range(1, A.size)]).reshape(-1, A.size)
    span = subspace_from_spanning(f, gens, A.size)
    if span != radical_power_basis(A, 1):
        return False, "span{X^g - 1} != M"
    for _ in range(50):
        a = A.random(rng)
        a = a - A.one() * augment(a)
        if not span.contains(a.coeffs):
            return False, "augmentation-zero element outside span"
    return True


def _cyclic_sum(A: GroupAlgebra, g: int):
    coeffs = np.zeros(A.size, dtype=np.int64)
    x = 0
    for _ in range(A.q):
        coeffs[x] = A.field.add(int(coeffs[x]), 1)
        x = A.index_add(x, g)
    return A.element(coeffs)


def _binomial_identity(A: GroupAlgebra, rng):
    gs = range(1, A.size) if A.size <= 256 else rng.integers(1, A.size, 100).tolist()
    for g in gs:
        if (A.monomial(g) - A.one()) ** (A.q - 1) != _cyclic_sum(A, g):
            return False, f"fails at g = {g}"
    return True


def _nilpotency(A: GroupAlgebra):
    top = A.m * (A.q - 1)
    last = jennings_vector(A, A.size - 1)
    if not last:
        return False, "M^(m(q-1)) = 0"
    killed = all(not (last * (A.monomial(g) - A.one())) for g in range(1, A.size))
    return killed and radical_power_basis(A, top + 1).dim == 0, "M^(m(q-1)+1) != 0"


def _annihilators(A: GroupAlgebra):
    top = A.m * (A.q - 1)
    for t in range(1, top + 1):
        ann = annihilator(subspace_elements(A, radical_power_basis(A, t)))
        if ann != radical_power_basis(A, top + 1 - t):
            return False, f"t = {t}"
    return True


def algebra_checks(ctx: GrmContext, rng, samples: int = 1000, max_oracle: int = 81) -> Iterator[CheckResult]:
    A = ctx.algebra
    top = ctx.top
    yield _run("algebra.power", "a^q = augment(a) X^0", lambda: _power_identity(A, rng, samples))
    yield _run("algebra.radical_generators", "M is spanned by the X^g - 1",
               lambda: _radical_generators(A, rng))
    yield _run("algebra.binomial", "(X^g - 1)^(q-1) = sum_i X^(ig)", lambda: _binomial_identity(A, rng))
    yield _run("algebra.full_product", "prod_l (X^(a^l) - 1)^(q-1) = sum_g X^g",
               lambda: jennings_vector(A, A.size - 1) == A.all_ones())
    yield _run("algebra.jennings_full_rank", "Jennings vectors form a basis",
               lambda: rank(A.field, np.array([v.coeffs for v in jennings_basis(A, 0)]), A.size) == A.size)
    yield _run("algebra.jennings_products", "recurrence and direct products agree",
               lambda: all(jennings_vector(A, i) == v for i, v in enumerate(jennings_basis(A, 0))))
    if A.size <= max_oracle:
        yield _run("algebra.radical_powers", "span B_t = M^t (oracle)",
                   lambda: all(radical_power_basis(A, t) == radical_power_oracle(A, t, max_oracle)
                               for t in range(top + 2)))
    yield _run("algebra.nilpotency", "M^(m(q-1)) != 0 = M^(m(q-1)+1)", lambda: _nilpotency(A))
    if A.size <= max_oracle:
        yield _run("algebra.annihilator", "ann(M^t) = M^(1 + m(q-1) - t)", lambda: _annihilators(A))


# -- quotient isomorphism --------------------------------------------------------


def _psi_hom(A: GroupAlgebra, rng, samples: int):
    for _ in range(samples):
        f = random_multipoly(A.field, A.m, rng)
        g = random_multipoly(A.field, A.m, rng)
        if psi(A, f * g) != psi(A, f) * psi(A, g) or psi(A, f + g) != psi(A, f) + psi(A, g):
            return False, f"fails for {f}, {g}"
    return True


def _psi_bijection(A: GroupAlgebra, rng):
    for g in range(A.size):
        x = A.monomial(g)
        if psi(A, psi_inverse(x)) != x:
            return False, f"monomial {g}"
    for _ in range(100):
        a = A.random(rng)
        if psi(A, psi_inverse(a)) != a:
            return False, "random element"
        f = random_multipoly(A.field, A.m, rng)
        if psi_inverse(psi(A, f)) != normal_form(f):
            return False, f"normal form of {f}"
    return True


def iso_checks(ctx: GrmContext, rng, samples: int = 100) -> Iterator[CheckResult]:
    A = ctx.algebra
    yield _run("iso.homomorphism", "psi(fg) = psi(f) psi(g), psi(f+g) = psi(f) + psi(g)",
               lambda: _psi_hom(A, rng, samples))
    yield _run("iso.bijection", "psi and psi_inverse are mutually inverse on normal forms",
               lambda: _psi_bijection(A, rng))


# -- GRM codes ------------------------------------------------------------------


def _f_well_defined(ctx: GrmContext):
    for nu in range(ctx.top):
        big = f_nu_ext(ctx, nu)
        if not all(ctx.embedding.contains(int(c)) for c in big):
            return False, f"f_{nu} not over F_q"
        if f_nu(ctx, nu).degree != f_nu_degree(ctx, nu):
            return False, f"deg f_{nu}"
    return True


def _chain(ctx: GrmContext):
    codes = [grm_code(ctx, nu, check=False) for nu in range(ctx.top)]
    for a, b in zip(codes, codes[1:]):
        if not a.issubspace(b) or a.dim >= b.dim:
            return False, "chain not strictly increasing"
    return codes[0].dim > 0 and codes[-1].dim < ctx.algebra.size


def _lt_order(ctx: GrmContext):
    nu = ctx.top - 1
    labels = grm_generator_labels(ctx, nu)
    lts = {lab: leading_term(ctx, e).rank for lab, e in zip(labels, grm_generators(ctx, nu))}
    for (i1, j1), (i2, j2) in itertools.combinations(labels, 2):
        a, b = lts[(i1, j1)], lts[(i2, j2)]
        if i1 == i2 and (a < b) != (j1 < j2):
            return False, f"shift order at {(i1, j1)}, {(i2, j2)}"
        if i1 != i2 and (a < b) != (i1 > i2):
            return False, f"order at {(i1, j1)}, {(i2, j2)}"
    for (i, j), lt in lts.items():
        if lt != f_nu_degree(ctx, i) + j:
            return False, f"LT(theta_{i}^{j}) = g_{lt}"
    return True


def _triple_dims(ctx: GrmContext):
    for nu in range(ctx.top):
        formula = code_dimension(ctx, nu)
        k_rank = rank_of(ctx, grm_generators(ctx, nu))
        fam = rank_of(ctx, [extend(ctx, c) for c in shift_family(ctx, nu)])
        if not formula == k_rank == fam == len(grm_generator_labels(ctx, nu)):
            return False, f"nu = {nu}: {formula}, {k_rank}, {fam}"
    return True


def _span_k(ctx: GrmContext):
    for nu in range(ctx.top):
        grm_code(ctx, nu, check=True)
    return True


def _weight_steps(ctx: GrmContext):
    dims = [code_dimension(ctx, nu) for nu in range(ctx.top)]
    return all(weight_count(ctx.top - i, ctx.q, ctx.m) == dims[i] - dims[i - 1] for i in range(1, ctx.top))


def _augmentation_zero(ctx: GrmContext):
    for nu in range(ctx.top):
        for row in grm_code(ctx, nu, check=False).basis:
            if ctx.field.vsum(row) != 0:
                return False, f"C_{nu}"
    return True


def _radical_coincidence(ctx: GrmContext):
    rep = compare_radical_grm(ctx)
    for t in range(1, ctx.top + 1):
        if ctx.top - t not in rep.codes_equal_to(t):
            return False, f"M^{t} != C_{ctx.top - t}"
    return True


def grm_checks(ctx: GrmContext) -> Iterator[CheckResult]:
    yield _run("grm.f_over_Fq", "f_nu has coefficients in F_q and the expected degree",
               lambda: _f_well_defined(ctx))
    yield _run("grm.chain", "C_0 < C_1 < ... < C_{m(q-1)-1} < F_q[G] strictly", lambda: _chain(ctx))
    yield _run("grm.leading_terms", "LT(theta_i^j) = g_{deg f_i + j}, ordered as in K_nu",
               lambda: _lt_order(ctx))
    yield _run("grm.dimensions", "n - deg f_nu = rank K_nu = rank of shift family",
               lambda: _triple_dims(ctx))
    yield _run("grm.generators", "span K_nu = C_nu", lambda: _span_k(ctx))
    yield _run("grm.weight_steps", "N(m(q-1) - i) = dim C_i - dim C_(i-1)", lambda: _weight_steps(ctx))
    yield _run("grm.augmentation", "every codeword has augmentation 0", lambda: _augmentation_zero(ctx))

    def forced():
        rep = compare_radical_grm(ctx)
        return rep.bottom_ok and rep.top_ok, f"C_0=M^top: {rep.bottom_ok}, C_last=M: {rep.top_ok}"

    yield _run("grm.forced_equalities", "C_0 = M^(m(q-1)) and C_(m(q-1)-1) = M", forced)
    if ctx.r == 1 and ctx.ordering.kind == "gamma":
        yield _run("grm.radical_coincidence", "M^t = C_(m(p-1)-t) over a prime field",
                   lambda: _radical_coincidence(ctx))


def run_all(ctx: GrmContext, *, seed: int = 0, samples: int = 1000, max_oracle: int = 81) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    results: list[CheckResult] = []
    results += field_checks(ctx, rng, samples)
    results += ring_checks(ctx, rng)
    results += algebra_checks(ctx, rng, samples, max_oracle)
    results += iso_checks(ctx, rng, min(samples, 100))
    results += grm_checks(ctx)
    return results


# -- length-16 example over F_4 ------------------------------------------------------


@dataclass
class ExampleLine:
    label: str
    expected: object
    got: object

    @property
    def ok(self) -> bool:
        return self.expected == self.got


def reproduce_length16() -> tuple[list[ExampleLine], float]:
    """Every quantity of the (p, r, m) = (2, 2, 2) example, with timing."""
    start = time.perf_counter()
    ctx = build_context(2, 2, 2)
    lines = [
        ExampleLine("N(5), N(4), N(3), N(2)", (2, 3, 4, 3),
                    tuple(weight_count(t, 4, 2) for t in (5, 4, 3, 2))),
        ExampleLine("weight-5 set", [11, 14], weight_class(5, 4, 2)),
        ExampleLine("weight-4 set", [7, 10, 13], weight_class(4, 4, 2)),
        ExampleLine("weight-3 set", [3, 6, 9, 12], weight_class(3, 4, 2)),
        ExampleLine("weight-2 set", [2, 5, 8], weight_class(2, 4, 2)),
        ExampleLine("deg f_nu, nu = 0..5", (14, 12, 9, 5, 2, 0),
                    tuple(f_nu(ctx, nu).degree for nu in range(6))),
        ExampleLine("f_0 = 1 + z + ... + z^14", [1] * 15, f_nu(ctx, 0).coeffs[:15].tolist()),
        ExampleLine("f_5 = 1", [1] + [0] * 14, f_nu(ctx, 5).coeffs.tolist()),
        ExampleLine("dim C_nu, nu = 0..5", (1, 3, 6, 10, 13, 15),
                    tuple(grm_code(ctx, nu).dim for nu in range(6))),
        ExampleLine("LT indices of K_5", (14, 12, 13, 9, 10, 11, 5, 6, 7, 8, 2, 3, 4, 0, 1),
                    tuple(leading_term(ctx, e).rank for e in grm_generators(ctx, 5))),
        ExampleLine("theta_0^0 = sum_g X^g", [1] * 16, theta(ctx, 0, 0).coeffs.tolist()),
        ExampleLine("K_nu independent, |K_nu|", (1, 3, 6, 10, 13, 15),
                    tuple(rank_of(ctx, grm_generators(ctx, nu)) for nu in range(6))),
    ]
    return lines, time.perf_counter() - start
