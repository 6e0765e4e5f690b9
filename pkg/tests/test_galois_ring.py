import itertools

import pytest

from galois_grm import _poly
from galois_grm.errors import InvalidInputError, MalformedInputError, UnsupportedError
from galois_grm.ff import FiniteField, find_irreducible, find_primitive
from galois_grm.galois_ring import (
    GaloisRing,
    GroupOrdering,
    element_to_index,
    gr_add,
    gr_mul,
    gr_neg,
    group_order_map,
    hensel_lift,
    index_add,
    index_to_element,
    unit_decompose,
)

from .conftest import GRID


def exhaustive_lift(p, r, fbar):
    """All monic lifts of fbar over Z_{p^r} that divide X^(p^m - 1) - 1."""
    q, m = p**r, len(fbar) - 1
    n = p**m - 1
    target = [-1] + [0] * (n - 1) + [1]
    found = []
    for extra in itertools.product(range(p ** (r - 1)), repeat=m):
        h = [fbar[i] + p * extra[i] for i in range(m)] + [1]
        if not _poly.mod(target, h, q):
            found.append(tuple(h))
    return found


def test_hensel_examples():
    assert hensel_lift(2, 2, [1, 1, 1]) == (1, 1, 1)
    assert hensel_lift(2, 2, [1, 1, 0, 1]) == (3, 1, 2, 1)
    assert hensel_lift(3, 2, [1, 0, 1]) == (1, 0, 1)


@pytest.mark.parametrize("p,r,fbar", [(2, 2, [1, 1, 0, 1]), (2, 3, [1, 1, 0, 1]), (2, 2, [1, 1, 0, 0, 1]),
                                      (3, 2, [2, 1, 1]), (3, 3, [1, 0, 1]), (5, 2, [2, 0, 1])])
def test_hensel_matches_exhaustive_search(p, r, fbar):
    assert exhaustive_lift(p, r, fbar) == [hensel_lift(p, r, fbar)]


def test_hensel_errors():
    with pytest.raises(InvalidInputError):
        hensel_lift(2, 2, [0, 1, 1])
    with pytest.raises(InvalidInputError):
        hensel_lift(2, 2, [1, 0, 1])


def test_hensel_r1_is_identity():
    assert hensel_lift(2, 1, [1, 1, 0, 1]) == (1, 1, 0, 1)


R = GaloisRing(2, 2, 2)


def test_default_modulus():
    assert R.h == (1, 1, 1)
    assert GaloisRing(2, 2, 1).h == (0, 1)


def test_gr_mul_examples():
    a = R.alpha
    assert gr_mul(a, a) == R.element([3, 3])
    assert gr_mul(R.element([2]), R.element([2])) == R.zero
    assert gr_mul(a, R.element([3, 3])) == R.one


def test_gr_mul_matches_polynomial_product():
    ring = GaloisRing(2, 2, 3)
    for a, b in itertools.product(ring.elements()[::7], repeat=2):
        expect = _poly.mod(_poly.mul(list(a.coeffs), list(b.coeffs), 4), list(ring.h), 4)
        assert list(gr_mul(a, b).coeffs) == expect + [0] * (3 - len(expect))


def test_gr_add_neg():
    a, b = R.element([3, 1]), R.element([1, 1])
    assert gr_add(a, b) == R.element([0, 2])
    assert gr_add(a, gr_neg(a)) == R.zero


@pytest.mark.parametrize("p,r,m", [(2, 2, 2), (3, 2, 1), (2, 3, 1), (2, 2, 3)])
def test_ring_axioms_exhaustive_small(p, r, m):
    ring = GaloisRing(p, r, m)
    els = ring.elements()
    sample = els[:: max(1, len(els) // 12)]
    for a, b, c in itertools.product(sample, repeat=3):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a


@pytest.mark.parametrize("p,r,m", [(2, 2, 2), (3, 2, 1), (2, 2, 3), (2, 3, 2)])
def test_residue_is_homomorphism(p, r, m):
    ring = GaloisRing(p, r, m)
    F = ring.residue_field()
    els = ring.elements()[::5]
    for a, b in itertools.product(els, repeat=2):
        assert ring.residue(a * b) == F.mul(ring.residue(a), ring.residue(b))
        assert ring.residue(a + b) == F.add(ring.residue(a), ring.residue(b))


def test_units_are_elements_with_unit_residue():
    ring = GaloisRing(2, 2, 2)
    els = ring.elements()
    for a in els:
        has_inverse = any(a * b == ring.one for b in els)
        assert has_inverse == a.is_unit() == (ring.residue(a) != 0)


def test_unit_decompose_examples():
    assert unit_decompose(R.element([0, 2])) == (1, R.alpha)
    assert unit_decompose(R.element([3])) == (0, R.element([3]))
    assert unit_decompose(R.zero) == (2, R.one)


def test_unit_decompose_reconstructs():
    ring = GaloisRing(2, 3, 2)
    for v in ring.elements():
        t, u = unit_decompose(v)
        if v:
            assert u.is_unit()
            assert ring.element([ring.p**t]) * u == v


def test_ideal_chain():
    ring = GaloisRing(2, 3, 2)
    sizes = [len({(ring.element([2**k]) * v).coeffs for v in ring.elements()}) for k in range(4)]
    # |p^k GR| = p^(m(r-k))
    assert sizes == [64, 16, 4, 1]


def test_index_examples():
    assert index_to_element(R, 0) == R.zero
    assert index_to_element(R, 7) == R.element([3, 1])
    assert element_to_index(R.element([3, 1])) == 7
    assert index_add(R, 7, 5) == 8


def test_index_roundtrip_and_range():
    for i in range(16):
        assert element_to_index(index_to_element(R, i)) == i
    with pytest.raises(MalformedInputError):
        index_to_element(R, 16)


def test_order_maps():
    assert group_order_map(R, GroupOrdering()) == tuple(range(1, 16))
    ring = GaloisRing(2, 1, 2, h=[1, 1, 1])
    F = FiniteField(2, 2, [1, 1, 1])
    assert group_order_map(ring, GroupOrdering("gamma", F(2))) == (1, 2, 3)
    with pytest.raises(UnsupportedError):
        group_order_map(R, GroupOrdering("gamma", FiniteField(2, 2)(2)))


def test_gamma_order_is_permutation():
    h = find_irreducible(3, 2)
    ring = GaloisRing(3, 1, 2, h=h)
    F = FiniteField(3, 2, h)
    order = group_order_map(ring, GroupOrdering("gamma", find_primitive(F)))
    assert sorted(order) == list(range(1, 9))


@pytest.mark.parametrize("p,r,m", [g for g in GRID if g[2] >= 2])
def test_default_h_is_valid(p, r, m):
    ring = GaloisRing(p, r, m)
    assert ring.defects() == []
    assert tuple(c % p for c in ring.h) == find_irreducible(p, m)


def test_corrupted_h_rejected():
    with pytest.raises(InvalidInputError, match="divide"):
        GaloisRing(2, 2, 2, h=[3, 1, 1])
    assert GaloisRing(2, 2, 2, h=[3, 1, 1], check=False).defects()
