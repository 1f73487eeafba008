from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from oracles import rank_mod_p
from torpersist import _kernels, linalg
from torpersist.field import QQ, CharacteristicError, Field


def test_field_basics():
    F = Field(7)
    assert F.mul(3, 5) == 1
    assert F.inv(3) == 5
    assert F(Fraction(1, 2)) == 4
    assert F.half() == 4
    assert QQ.half() == Fraction(1, 2)
    assert F.kind == "prime" and QQ.kind == "rationals"
    assert Field.from_json(F.to_json()) == F


def test_characteristic_two_refuses_halving():
    with pytest.raises(CharacteristicError):
        Field(2).half()
    with pytest.raises(CharacteristicError):
        Field(2).require_odd()


def test_non_prime_rejected():
    with pytest.raises(ValueError):
        Field(9)


matrices = st.integers(1, 7).flatmap(
    lambda r: st.integers(1, 7).flatmap(
        lambda c: st.lists(st.lists(st.integers(-5, 5), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@given(matrices, st.sampled_from([3, 7, 101]))
@settings(max_examples=60, deadline=None)
def test_rank_matches_oracle(rows, p):
    F = Field(p)
    A = F.array(rows)
    oracle = rank_mod_p([{j: v % p for j, v in enumerate(r) if v % p} for r in rows], p)
    assert linalg.rank(A, F) == oracle


@given(matrices, st.sampled_from([5, 101]))
@settings(max_examples=60, deadline=None)
def test_nullspace_is_kernel(rows, p):
    F = Field(p)
    A = F.array(rows)
    K = linalg.nullspace(A, F)
    assert len(K) == A.shape[1] - linalg.rank(A, F)
    if len(K):
        assert not np.any(linalg.matmul(A, K.T, F))


@given(matrices)
@settings(max_examples=40, deadline=None)
def test_rational_rank_matches_sympy(rows):
    assert linalg.rank(QQ.array(rows), QQ) == sympy.Matrix(rows).rank()


@given(matrices, st.sampled_from([3, 101]))
@settings(max_examples=60, deadline=None)
def test_numba_and_numpy_kernels_agree(rows, p):
    A = np.array(rows, dtype=np.int64) % p
    B = A.copy()
    piv_a = _kernels._rref_modp_loops(A, p)
    piv_b = _kernels.rref_modp_numpy(B, p)
    assert np.array_equal(A, B)
    assert list(piv_a) == list(piv_b)
    if _kernels.HAVE_NUMBA:
        C = np.array(rows, dtype=np.int64) % p
        piv_c = _kernels.rref_modp_numba(C, p)
        assert np.array_equal(C, A)
        assert list(piv_c) == list(piv_a)


def test_quotient_and_complement():
    F = Field(101)
    U = F.array([[1, 1, 0], [0, 0, 1]])
    q = linalg.Quotient(3, U, F)
    assert q.dim == 1
    assert not np.any(linalg.matmul(q.Q, U.T, F))
    assert np.array_equal(linalg.matmul(q.Q, q.lift, F), F.eye(1))
    assert linalg.complement(F.eye(3), U, F, 3) == [0]


def test_echelon_grows():
    F = Field(101)
    ech = linalg.Echelon(3, F)
    assert ech.add(F.array([1, 2, 3]))
    assert not ech.add(F.array([2, 4, 6]))
    assert ech.add(F.array([0, 1, 0]))
    assert ech.dim == 2 and ech.contains(F.array([1, 0, 3]))


def test_coordinates():
    F = QQ
    basis = F.array([[1, 0, 1], [0, 1, 1]])
    V = F.array([[2, 3, 5]])
    X = linalg.coordinates(basis, V, F)
    assert list(X[0]) == [2, 3]


def test_matmul_exact_for_large_entries():
    F = Field(1048573)
    A = F.array([[F.characteristic - 1] * 50])
    B = F.array([[F.characteristic - 1]] * 50)
    assert linalg.matmul(A, B, F)[0, 0] == 50 % F.characteristic


@given(matrices, matrices)
@settings(max_examples=40, deadline=None)
def test_row_reduction_against_echelon_agrees_across_backends(rows, other):
    p = 101
    E = np.array(rows, dtype=np.int64) % p
    piv = _kernels.rref_modp_numpy(E, p)
    E = E[: len(piv)]
    n = E.shape[1]
    V = np.array([(r * n)[:n] for r in other], dtype=np.int64) % p
    a = _kernels._reduce_rows_loops(V.copy(), E, piv, p)
    b = _kernels.reduce_rows_numpy(V.copy(), E, piv, p)
    assert np.array_equal(a, b)
    if _kernels.HAVE_NUMBA:
        assert np.array_equal(_kernels.reduce_rows_numba(V.copy(), E, piv, p), a)
