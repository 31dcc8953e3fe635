from __future__ import annotations

import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from shortlocal import exactla as la
from shortlocal.algebra import (
    BadShape,
    SpanDeficient,
    algebra_from_json,
    algebra_from_products,
    load_algebra,
    new_algebra,
)
from shortlocal.presets import lambda_cd, lambda_prime_cd, preset
from shortlocal.randgen import random_algebra


def random_alg(seed):
    rng = np.random.default_rng(seed)
    e = int(rng.integers(1, 5))
    a = int(rng.integers(0, min(4, e * e) + 1))
    return random_algebra(rng, e, a)


seeds = st.integers(0, 2**32 - 1)


def test_radical_square_zero():
    alg = new_algebra(2, 0, np.zeros((2, 2, 0)))
    assert alg.hilbert_type == (2, 0)
    assert alg.is_commutative()


def test_span_deficient():
    with pytest.raises(SpanDeficient):
        new_algebra(2, 1, np.zeros((2, 2, 1)))


def test_bad_shape():
    with pytest.raises(BadShape):
        new_algebra(2, 1, np.zeros((3, 2, 1)))
    with pytest.raises(BadShape):
        algebra_from_products(2, 1, {(0, 5): [1]})


def test_fibonacci_algebra_products():
    alg = preset("alg_8_2_A").algebra
    x, y, z = alg.x(0), alg.x(1), alg.x(2)
    assert (alg.multiply(x, x) == alg.z(0)).all()
    assert (alg.multiply(z, y) == alg.z(1)).all()
    assert not alg.multiply(x, y).any()
    assert (alg.multiply(alg.one(), y) == y).all()


def test_commutativity_flags():
    assert lambda_cd(2, 1)[0].is_commutative()
    assert not lambda_prime_cd(2, 1)[0].is_commutative()


def test_json_roundtrip(tmp_path):
    alg = preset("ex_3_6_3").algebra
    path = tmp_path / "a.json"
    path.write_text(json.dumps(alg.to_json()))
    again = load_algebra(str(path))
    assert again == alg
    assert algebra_from_json(alg.to_json(), p=2).p == 2


def test_json_indices_are_one_based():
    obj = {"e": 2, "a": 1, "products": [{"i": 2, "j": 1, "z": [1]}]}
    alg = algebra_from_json(obj)
    assert (alg.multiply(alg.x(1), alg.x(0)) == alg.z(0)).all()


def test_negative_constants_reduce():
    alg = algebra_from_products(1, 1, {(0, 0): [-1]}, p=7)
    assert alg.c[0, 0, 0] == 6


@given(seeds)
def test_left_mult_identity_and_j_cubed(seed):
    alg = random_alg(seed)
    assert (alg.left_mult_matrix(alg.one()) == np.eye(alg.dim)).all()
    for m in range(alg.a):
        for i in range(alg.e):
            prod = la.matmul(alg.left_mult_matrix(alg.z(m)), alg.left_mult_matrix(alg.x(i)), alg.p)
            assert not prod.any()
    assert alg.check_j_cubed_zero()
    assert alg.recomputed_hilbert_type() == alg.hilbert_type


@given(seeds)
def test_span_condition_via_mult_matrices(seed):
    alg = random_alg(seed)
    rows = []
    for i in range(alg.e):
        L = alg.left_mult_matrix(alg.x(i))
        rows.append(L[alg.z_slice, alg.x_slice].T)
    if alg.a:
        assert la.rank(np.vstack(rows), alg.p) == alg.a


@given(seeds, seeds)
def test_associativity(seed, seed2):
    alg = random_alg(seed)
    rng = np.random.default_rng(seed2)
    u, v, w = (rng.integers(0, alg.p, size=alg.dim) for _ in range(3))
    assert (alg.multiply(alg.multiply(u, v), w) == alg.multiply(u, alg.multiply(v, w))).all()


@given(seeds)
def test_opposite_involution(seed):
    alg = random_alg(seed)
    op = alg.opposite()
    assert op.opposite() == alg
    assert op.hilbert_type == alg.hilbert_type
    if alg.is_commutative():
        assert op == alg


@given(seeds, seeds)
def test_opposite_reverses_products(seed, seed2):
    alg = random_alg(seed)
    op = alg.opposite()
    rng = np.random.default_rng(seed2)
    u, v = (rng.integers(0, alg.p, size=alg.dim) for _ in range(2))
    assert (op.multiply(u, v) == alg.multiply(v, u)).all()
