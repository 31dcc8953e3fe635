from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from shortlocal import exactla as la


def mats(p=7, max_rows=5, max_cols=5):
    return st.tuples(st.integers(1, max_rows), st.integers(1, max_cols), st.integers(0, 2**32 - 1)).map(
        lambda rc: np.random.default_rng(rc[2]).integers(0, p, size=(rc[0], rc[1]))
    )


def brute_kernel_size(m, p):
    """Count solutions of m v = 0 by enumeration; the kernel has p^dim elements."""
    cols = m.shape[1]
    return sum(
        1 for v in itertools.product(range(p), repeat=cols) if not (m @ np.array(v) % p).any()
    )


def test_rref_trivial_cases():
    R, r, piv = la.rref(np.zeros((2, 2), dtype=np.int64), 5)
    assert r == 0 and piv == []
    R, r, piv = la.rref(np.eye(3, dtype=np.int64), 5)
    assert r == 3 and (R == np.eye(3)).all()


def test_rref_hand_reduction_gf5():
    R, r, piv = la.rref(np.array([[1, 2], [2, 4]]), 5)
    assert r == 1 and piv == [0]
    assert R.tolist()[:1] == [[1, 2]]


def test_kernel_examples():
    assert la.kernel_basis(np.eye(2, dtype=np.int64), 7).dim == 0
    assert la.kernel_basis(np.zeros((2, 3), dtype=np.int64), 7).dim == 3
    K = la.kernel_basis(np.array([[1, 1, 0]]), 7)
    assert K.dim == 2
    for v in K.basis:
        assert (v[0] + v[1]) % 7 == 0


def test_solve_examples():
    v = np.array([3, 1, 4])
    assert (la.solve(np.eye(3, dtype=np.int64), v, 7) == v).all()
    assert la.solve(np.zeros((2, 2), dtype=np.int64), [1, 0], 7) is None


def test_field_rejects_composite():
    with pytest.raises(ValueError):
        la.PrimeField(15)
    with pytest.raises(ValueError):
        la.PrimeField(2**31 + 11)


def test_field_inverse():
    F = la.PrimeField(32003)
    for x in (1, 2, 12345, 32002):
        assert x * F.inv(x) % 32003 == 1
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_ambient_mismatch():
    with pytest.raises(ValueError):
        la.subspace_sum(la.full_space(2, 7), la.full_space(3, 7))


@given(mats(p=3, max_rows=4, max_cols=4))
def test_kernel_matches_enumeration(m):
    # independent oracle: brute-force count over GF(3)
    K = la.kernel_basis(m, 3)
    assert 3**K.dim == brute_kernel_size(m, 3)


@given(mats())
def test_rref_canonical_form(m):
    R, r, piv = la.rref(m, 7)
    assert (la.rref(R, 7)[0] == R).all()
    assert piv == sorted(piv) and len(set(piv)) == r
    for i, c in enumerate(piv):
        assert R[i, c] == 1 and np.count_nonzero(R[:, c]) == 1
    assert not R[r:].any()


@given(mats())
def test_rank_transpose(m):
    assert la.rank(m, 7) == la.rank(m.T, 7)


@given(mats())
def test_kernel_vectors(m):
    K = la.kernel_basis(m, 7)
    assert K.dim == m.shape[1] - la.rank(m, 7)
    assert not (la.matmul(m, K.basis.T, 7)).any()


@given(mats(), st.integers(0, 2**32 - 1))
def test_solve_roundtrip(m, seed):
    x = np.random.default_rng(seed).integers(0, 7, size=m.shape[1])
    rhs = la.matmul(m, x.reshape(-1, 1), 7).ravel()
    sol = la.solve(m, rhs, 7)
    assert sol is not None
    assert (la.matmul(m, sol.reshape(-1, 1), 7).ravel() == rhs).all()


@given(mats(max_cols=5), mats(max_cols=5))
def test_modular_law(a, b):
    n = min(a.shape[1], b.shape[1])
    U, V = la.span(a[:, :n], 7, n), la.span(b[:, :n], 7, n)
    assert la.subspace_sum(U, V).dim + la.intersect(U, V).dim == U.dim + V.dim
    assert la.subspace_sum(U, U) == U
    assert la.intersect(U, la.full_space(n, 7)) == U
    for v in la.intersect(U, V).basis:
        assert U.contains(v) and V.contains(v)


@given(mats(), st.integers(0, 2**32 - 1))
def test_equality_is_basis_identity(m, seed):
    U = la.span(m, 7, m.shape[1])
    # random invertible row mix spans the same space
    rng = np.random.default_rng(seed)
    k = m.shape[0]
    while True:
        g = rng.integers(0, 7, size=(k, k))
        if la.rank(g, 7) == k:
            break
    V = la.span(la.matmul(g, m, 7), 7, m.shape[1])
    assert U == V and (U.basis == V.basis).all()


def test_large_prime_no_overflow():
    p = la.MAX_PRIME
    rng = np.random.default_rng(0)
    m = rng.integers(0, p, size=(30, 30))
    r = la.rank(m, p)
    K = la.kernel_basis(m, p)
    assert r + K.dim == 30
    assert not la.matmul(m, K.basis.T, p).any()


def test_independent_rows_modulo():
    W = la.span(np.array([[1, 0, 0]]), 7, 3)
    m = np.array([[1, 0, 0], [0, 1, 0], [2, 2, 0], [0, 0, 1]])
    assert la.independent_rows(m, 7, modulo=W) == [1, 3]
