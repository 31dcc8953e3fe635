from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from shortlocal import exactla as la
from shortlocal.amodule import GeneratorNotInRadical, quotient_by_left_ideal, simple_module
from shortlocal.conca import (
    BudgetExceeded,
    ideal_closure,
    is_left_conca_generator,
    is_left_conca_ideal,
    search_conca,
)
from shortlocal.presets import lambda_cd, preset, preset_names
from shortlocal.randgen import random_algebra
from shortlocal.resolution import is_koszul_up_to

seeds = st.integers(0, 2**32 - 1)


def test_closure_examples():
    alg = preset("ex_6_3").algebra
    assert ideal_closure(alg, []).dim == 0
    U = ideal_closure(alg, [alg.x(0)])
    assert U.closure == la.span(np.array([alg.x(0), alg.z(0), alg.z(1)]), alg.p, alg.dim)
    for m in range(alg.a):
        assert ideal_closure(alg, [alg.z(m)]).dim == 1
    with pytest.raises(GeneratorNotInRadical):
        ideal_closure(alg, [alg.one()])


def test_conca_ideal_examples():
    for c, d in [(2, 1), (3, 2), (2, 2)]:
        pr = preset(f"lambda_cd:{c},{d}")
        assert is_left_conca_ideal(pr.algebra, ideal_closure(pr.algebra, pr.ideals["U"])).is_conca
    alg = preset("alg_8_2_A").algebra
    J = ideal_closure(alg, [alg.basis_element(k) for k in range(1, alg.dim)])
    v = is_left_conca_ideal(alg, J)
    assert not v.is_conca and not v.u2_zero
    op = preset("ex_6_3").algebra.opposite()
    assert is_left_conca_ideal(op, ideal_closure(op, [op.x(0)])).is_conca


def test_conca_generator_examples():
    for c in (1, 2, 3):
        alg, _ = lambda_cd(c, 1)
        assert is_left_conca_generator(alg, alg.x(c))
    alg = preset("alg_8_2_A").algebra
    assert not is_left_conca_generator(alg, alg.x(0))  # x^2 != 0
    assert not is_left_conca_generator(alg, alg.element())


def test_search_examples():
    alg = preset("lambda_cd:2,1", 2).algebra
    res = search_conca(alg, "exhaustive", budget=100)
    assert res.found and is_left_conca_ideal(alg, res.ideal).is_conca
    res = search_conca(preset("ex_6_3", 2).algebra, "exhaustive", budget=100)
    assert not res.found and res.exhaustive_completed and "exhaustive" in res.note
    res = search_conca(preset("rsz:3", 2).algebra, "exhaustive", budget=100)
    assert res.found


def test_search_budget_and_random_honesty():
    with pytest.raises(BudgetExceeded):
        search_conca(preset("ex_6_3").algebra, "exhaustive", budget=1000)
    res = search_conca(preset("alg_8_2_A").algebra, "random", budget=30, seed=1)
    if not res.found:
        assert not res.exhaustive_completed and "not a nonexistence proof" in res.note
    with pytest.raises(ValueError):
        search_conca(preset("ex_6_3").algebra, "clever", budget=10)


def test_random_search_is_deterministic():
    alg = preset("ex_6_3").algebra
    a = search_conca(alg, "random", budget=40, max_gens=2, seed=7).to_json()
    b = search_conca(alg, "random", budget=40, max_gens=2, seed=7).to_json()
    assert a == b


@given(seeds)
def test_generator_implies_ideal(seed):
    import itertools

    rng = np.random.default_rng(seed)
    e = int(rng.integers(1, 4))
    alg = random_algebra(rng, e, int(rng.integers(0, min(3, e * e) + 1)), p=2)
    for coeffs in itertools.product(range(2), repeat=alg.dim - 1):
        x = np.array((0,) + coeffs)
        if is_left_conca_generator(alg, x):
            assert is_left_conca_ideal(alg, ideal_closure(alg, [x])).is_conca
            assert alg.a <= alg.e - 1


def _conca_cases():
    for name in preset_names() + ["lambda_cd:2,2", "lambda_conca:2;2,1", "rsz:2"]:
        pr = preset(name)
        for key, gens in pr.ideals.items():
            yield name, pr, gens


def test_conca_ideal_makes_annihilated_modules_koszul():
    for name, pr, gens in _conca_cases():
        alg = pr.algebra
        U = ideal_closure(alg, gens)
        if not is_left_conca_ideal(alg, U).is_conca:
            continue
        assert 4 * alg.a <= alg.e**2, name
        # A/U and S are annihilated by U
        for M in (quotient_by_left_ideal(alg, U.closure.basis), simple_module(alg)):
            assert is_koszul_up_to(M, 4).koszul_up_to_N, name


def test_conca_in_random_small_algebras_respects_bound():
    rng = np.random.default_rng(99)
    for _ in range(15):
        e = int(rng.integers(1, 4))
        a = int(rng.integers(0, min(4, e * e) + 1))
        alg = random_algebra(rng, e, a, p=2)
        res = search_conca(alg, "exhaustive", budget=2**7)
        if res.found:
            assert 4 * a <= e * e
            assert is_koszul_up_to(simple_module(alg), 4).koszul_up_to_N
