import itertools

import numpy as np
import pytest

from galois_grm.errors import InvalidInputError, MalformedInputError, NoLeadingTermError, UnsupportedError
from galois_grm.grm import (
    CyclicPoly,
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
    hc_code,
    leading_term,
    rank_of,
    theta,
    weight_class,
    weight_count,
)
from galois_grm.group_algebra import augment, radical_power_basis

from .conftest import GRID


def brute_weight_count(t, q, m):
    return sum(1 for d in itertools.product(range(q), repeat=m) if sum(d) == t)


@pytest.mark.parametrize("q,m", [(4, 2), (2, 3), (3, 2), (8, 1), (5, 2), (4, 3)])
def test_weight_count_matches_enumeration(q, m):
    for t in range(-1, m * (q - 1) + 2):
        assert weight_count(t, q, m) == brute_weight_count(t, q, m)


def test_weight_examples():
    assert weight_count(5, 4, 2) == 2
    assert weight_count(0, 4, 2) == 1
    assert weight_count(3, 4, 2) == 4
    assert weight_class(4, 4, 2) == [7, 10, 13]


def test_f_nu_examples(ctx222):
    assert f_nu(ctx222, 0).coeffs.tolist() == [1] * 15
    assert f_nu(ctx222, 5).coeffs.tolist() == [1] + [0] * 14
    ctx = build_context(2, 1, 2)
    assert f_nu(ctx, 0).coeffs.tolist() == [1, 1, 1]


@pytest.mark.parametrize("p,r,m", GRID)
def test_f_nu_roots_by_evaluation(p, r, m):
    """gamma^i is a root of f_nu exactly when 0 < w_q(i) <= m(q-1) - nu - 1."""
    ctx = build_context(p, r, m)
    ext = ctx.ext
    for nu in range(ctx.top):
        coeffs = [ctx.embedding(int(c)) for c in f_nu(ctx, nu).coeffs]
        bound = ctx.top - nu - 1
        for i in range(ctx.n):
            x = ext.pow(ctx.gamma.value, i)
            val = 0
            for c in reversed(coeffs):
                val = ext.add(ext.mul(val, x), c)
            digits_sum = sum((i // ctx.q**l) % ctx.q for l in range(m))
            assert (val == 0) == (0 < digits_sum <= bound), (nu, i)


def test_f_nu_coefficients_in_subfield(ctx222):
    for nu in range(ctx222.top):
        assert all(ctx222.embedding.contains(int(c)) for c in f_nu_ext(ctx222, nu))


def test_f_nu_range(ctx222):
    with pytest.raises(MalformedInputError):
        f_nu(ctx222, 6)


def test_extend_examples(ctx222):
    zero = CyclicPoly(ctx222, [])
    assert not extend(ctx222, zero)
    F = ctx222.field
    for j in (0, 3, 14):
        e = extend(ctx222, CyclicPoly(ctx222, [0] * j + [1]))
        assert e == ctx222.algebra.monomial(0, F.neg(1)) + ctx222.algebra.monomial(ctx222.order_map[j])
    assert extend(ctx222, f_nu(ctx222, 0)) == ctx222.algebra.all_ones()


def test_extend_lands_in_radical(ctx222):
    rng = np.random.default_rng(0)
    for _ in range(50):
        a = CyclicPoly(ctx222, rng.integers(0, 4, 15))
        assert augment(extend(ctx222, a)).value == 0


def test_leading_terms(ctx222):
    assert leading_term(ctx222, ctx222.algebra.one()).rank is None
    assert leading_term(ctx222, theta(ctx222, 0, 0)).rank == 14
    assert leading_term(ctx222, theta(ctx222, 1, 0)).rank == 12
    assert leading_term(ctx222, theta(ctx222, 5, 1)).rank == 1
    assert leading_term(ctx222, theta(ctx222, 5, 0)).rank == 0
    assert [leading_term(ctx222, theta(ctx222, 3, j)).rank for j in range(4)] == [5, 6, 7, 8]
    with pytest.raises(NoLeadingTermError):
        leading_term(ctx222, ctx222.algebra.zero())


def test_theta_shift_range(ctx222):
    with pytest.raises(MalformedInputError):
        theta(ctx222, 0, 1)


def test_hc_dims(ctx222):
    assert hc_code(ctx222, 0).dim == 1
    assert hc_code(ctx222, 5).dim == 15
    assert hc_code(ctx222, 2).dim == 6


def test_generator_sets(ctx222):
    assert grm_generator_labels(ctx222, 0) == [(0, 0)]
    assert len(grm_generators(ctx222, 3)) == 10
    assert grm_code(ctx222, 3).dim == 10
    assert rank_of(ctx222, grm_generators(ctx222, 3)) == 10


def test_c0_is_all_ones(ctx222):
    code = grm_code(ctx222, 0)
    assert code.dim == 1 and code.contains(ctx222.algebra.all_ones().coeffs)


@pytest.mark.parametrize("p,r", [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3)])
def test_m1_reed_solomon_like(p, r):
    ctx = build_context(p, r, 1)
    for nu in range(ctx.top):
        assert grm_generator_labels(ctx, nu) == [(i, 0) for i in range(nu + 1)]
        assert grm_code(ctx, nu).dim == nu + 1


def test_compare_examples(ctx222):
    rep = compare_radical_grm(ctx222)
    assert (6, 0) in rep.equal
    assert rep.radical_dims[3] == rep.code_dims[3] == 10
    assert 3 not in rep.codes_equal_to(3)
    assert rep.bottom_ok and rep.top_ok
    ctx = build_context(2, 1, 2, ordering="gamma")
    assert (2, 0) in compare_radical_grm(ctx).equal


def test_gamma_ordering_needs_r1():
    with pytest.raises(UnsupportedError):
        build_context(2, 2, 2, ordering="gamma")


def test_context_size_limit():
    with pytest.raises(InvalidInputError):
        build_context(2, 1, 13)


def test_context_alternative_modulus():
    # x^4 + x^3 + 1 instead of the canonical x^4 + x + 1 for F_16
    ctx = build_context(2, 2, 2, ext_modulus=[1, 0, 0, 1, 1])
    assert [code_dimension(ctx, nu) for nu in range(6)] == [1, 3, 6, 10, 13, 15]
    assert grm_code(ctx, 4).dim == 13


def test_prime_field_radical_powers_are_codes():
    ctx = build_context(2, 1, 3, ordering="gamma")
    for t in range(1, ctx.top + 1):
        assert grm_code(ctx, ctx.top - t) == radical_power_basis(ctx.algebra, t)


def test_degree_formula(ctx222):
    assert [f_nu_degree(ctx222, nu) for nu in range(6)] == [14, 12, 9, 5, 2, 0]
    assert [f_nu(ctx222, nu).degree for nu in range(6)] == [14, 12, 9, 5, 2, 0]
