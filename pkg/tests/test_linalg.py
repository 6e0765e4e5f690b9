import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galois_grm.errors import MalformedInputError
from galois_grm.ff import FiniteField
from galois_grm.linalg import nullspace, rank, rref, subspace_contains, subspace_from_spanning

F2 = FiniteField(2)
F3 = FiniteField(3)
F4 = FiniteField(2, 2)


def brute_nullspace(field, rows, ncols):
    out = []
    for v in itertools.product(range(field.order), repeat=ncols):
        if all(field.vdot(np.array([r]), np.array(v))[0] == 0 for r in rows):
            out.append(v)
    return out


def test_rref_identity():
    R, r, piv = rref(F2, [[1, 0], [0, 1]])
    assert R.tolist() == [[1, 0], [0, 1]] and r == 2 and piv == [0, 1]


def test_rref_duplicate_row():
    R, r, piv = rref(F2, [[1, 1], [1, 1]])
    assert R[:r].tolist() == [[1, 1]] and r == 1


def test_rref_f3_dependent_rows():
    # (1,2) = 2 * (2,1) mod 3
    R, r, piv = rref(F3, [[2, 1], [1, 2]])
    assert r == 1
    assert R[0].tolist() == [1, 2]


def test_rref_ragged_rows():
    with pytest.raises(MalformedInputError):
        rref(F2, [[1, 0], [1]])


def test_rref_bad_entry():
    with pytest.raises(MalformedInputError):
        rref(F2, [[2, 0]])


def test_nullspace_zero_matrix():
    assert nullspace(F2, [[0, 0, 0], [0, 0, 0]]).dim == 3


@pytest.mark.parametrize("field", [F2, F3, F4])
def test_nullspace_identity(field):
    assert nullspace(field, np.eye(3, dtype=np.int64)).dim == 0


def test_nullspace_f2_example():
    rows = [[1, 1, 0], [0, 1, 1]]
    ns = nullspace(F2, rows)
    brute = brute_nullspace(F2, rows, 3)
    assert sorted(brute) == [(0, 0, 0), (1, 1, 1)]
    assert ns.basis.tolist() == [[1, 1, 1]]


@pytest.mark.parametrize("field", [F3, F4])
def test_nullspace_matches_enumeration(field):
    rng = np.random.default_rng(3)
    for _ in range(5):
        rows = rng.integers(0, field.order, (2, 4))
        ns = nullspace(field, rows)
        brute = brute_nullspace(field, rows.tolist(), 4)
        assert len(brute) == field.order ** ns.dim
        assert all(ns.contains(v) for v in brute)


def test_span_examples():
    assert subspace_from_spanning(F2, [[1, 0], [0, 1], [1, 1]]).dim == 2
    assert subspace_from_spanning(F2, [], ambient_dim=5).dim == 0


def test_contains():
    s = subspace_from_spanning(F2, [[1, 1]])
    assert subspace_contains(s, [0, 0])
    assert not subspace_contains(s, [1, 0])
    with pytest.raises(MalformedInputError):
        s.contains([1, 1, 1])


matrices = st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(0, 3), min_size=c, max_size=c), min_size=1, max_size=6))


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rref_idempotent(rows):
    R, r, _ = rref(F4, rows)
    R2, r2, _ = rref(F4, R)
    assert np.array_equal(R, R2) and r == r2


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rank_nullity(rows):
    assert rank(F4, rows) + nullspace(F4, rows).dim == len(rows[0])


@settings(max_examples=60, deadline=None)
@given(matrices, st.randoms(use_true_random=False))
def test_span_order_independent(rows, rnd):
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    assert subspace_from_spanning(F4, rows) == subspace_from_spanning(F4, shuffled)


@settings(max_examples=40, deadline=None)
@given(matrices)
def test_nullspace_annihilates(rows):
    ns = nullspace(F4, rows)
    M = np.array(rows)
    for v in ns.basis:
        assert not np.any(F4.vdot(M, v))
