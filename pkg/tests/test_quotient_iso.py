import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galois_grm.errors import InvalidInputError
from galois_grm.ff import FiniteField
from galois_grm.galois_ring import GaloisRing
from galois_grm.group_algebra import GroupAlgebra
from galois_grm.linalg import nullspace
from galois_grm.quotient_iso import MultiPoly, is_normal, normal_form, psi, psi_inverse, random_multipoly

from .conftest import GRID

A = GroupAlgebra(GaloisRing(2, 2, 2))
F4 = A.field


def mono(field, exps, c=1):
    return MultiPoly(field, len(exps), {tuple(exps): c})


def test_normal_form_examples():
    one = MultiPoly.constant(F4, 2, 1)
    assert normal_form(mono(F4, (4, 0))) == one
    assert normal_form(mono(F4, (5, 0))) == mono(F4, (1, 0))
    # X_0^3 X_1^5 + X_0^3 X_1 reduces to 2 X_0^3 X_1, which vanishes in characteristic 2
    f = mono(F4, (3, 5)) + mono(F4, (3, 1))
    assert not normal_form(f)
    F9 = FiniteField(3, 2)
    g = mono(F9, (3, 10)) + mono(F9, (3, 1))
    assert normal_form(g) == mono(F9, (3, 1), 2)


def test_normal_form_idempotent():
    rng = np.random.default_rng(0)
    for _ in range(20):
        f = normal_form(random_multipoly(F4, 2, rng))
        assert is_normal(f) and normal_form(f) == f


def test_psi_examples():
    assert psi(A, MultiPoly.variable(F4, 2, 1)) == A.monomial(4)
    assert not psi(A, mono(F4, (4, 0)) - MultiPoly.constant(F4, 2, 1))
    assert psi(A, mono(F4, (2, 1))) == A.monomial(6)


def test_psi_inverse_examples():
    assert psi_inverse(A.one()) == MultiPoly.constant(F4, 2, 1)
    assert psi_inverse(A.monomial(4)) == MultiPoly.variable(F4, 2, 1)
    assert psi_inverse(A.monomial(7)) == mono(F4, (3, 1))


def test_psi_variable_count_mismatch():
    with pytest.raises(InvalidInputError):
        psi(A, MultiPoly.variable(F4, 3, 0))


@pytest.mark.parametrize("p,r,m", GRID)
def test_psi_homomorphism(p, r, m):
    alg = GroupAlgebra(GaloisRing(p, r, m))
    rng = np.random.default_rng(7)
    for _ in range(100):
        f, g = random_multipoly(alg.field, m, rng), random_multipoly(alg.field, m, rng)
        assert psi(alg, f * g) == psi(alg, f) * psi(alg, g)
        assert psi(alg, f + g) == psi(alg, f) + psi(alg, g)
        assert normal_form(psi_inverse(psi(alg, f))) == normal_form(f)


@pytest.mark.parametrize("p,r,m", [g for g in GRID if (p := g[0] ** g[1]) ** g[2] <= 81])
def test_psi_injective_on_normal_forms(p, r, m):
    alg = GroupAlgebra(GaloisRing(p, r, m))
    # matrix whose rows are psi(monomial) for every normal-form monomial
    rows = [psi(alg, mono(alg.field, alg.digits[g].tolist())).coeffs for g in range(alg.size)]
    assert nullspace(alg.field, np.array(rows)).dim == 0


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=16, max_size=16))
def test_psi_psi_inverse_identity(coeffs):
    a = A.element(coeffs)
    assert psi(A, psi_inverse(a)) == a
    assert is_normal(psi_inverse(a))
