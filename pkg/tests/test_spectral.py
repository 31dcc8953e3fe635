from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from shortlocal.spectral import (
    HypothesisViolated,
    b_closed_form,
    b_sequence,
    koszul_prediction,
    omega_apply,
    omega_power,
    perfect_square_root,
    rho_sweep,
    spectral_data,
    spectral_radius,
    theorem3_points,
    theorem3_solve,
)

small = st.integers(0, 9)


def test_omega_examples():
    assert omega_apply(5, 3, (1, 0)) == (5, 3)
    assert omega_apply(3, 2, (1, 1)) == (2, 2)
    assert omega_apply(3, 1, (1, 1)) == (2, 1)
    assert omega_power(4, 7, 0) == [[1, 0], [0, 1]]


def test_spectral_examples():
    sd = spectral_data(3, 2)
    assert sd.rho_exact == 2 and set(sd.eigenvalues) == {Fraction(2), Fraction(1)}
    assert [spectral_data(7, a).rho_exact for a in (6, 10, 12)] == [6, 5, 4]
    sd = spectral_data(2, 4)
    assert sd.rho == 2 and not sd.rho_is_eigenvalue


def test_b_sequence_examples():
    assert b_sequence(3, 1, 5) == [1, 3, 8, 21, 55, 144]
    assert b_sequence(4, 0, 4) == [4**n for n in range(5)]
    assert b_sequence(3, 2, 4) == [1, 3, 7, 15, 31]


def test_closed_form_examples():
    assert b_closed_form(3, 2, 3) == 15
    assert b_closed_form(6, 0, 2) == 36
    assert b_closed_form(5, 4, 4) == b_sequence(5, 4, 4)[4]
    with pytest.raises(HypothesisViolated):
        b_closed_form(4, 4, 2)


def test_prediction_examples():
    assert koszul_prediction(3, 2, (1, 0), 3) == [(1, 0), (3, 2), (7, 6), (15, 14)]
    assert koszul_prediction(5, 6, (0, 0), 4) == [(0, 0)] * 5
    c, d = 3, 2
    assert koszul_prediction(c + d, c * d, (1, c), 5) == [(d**n, c * d**n) for n in range(6)]


def test_theorem3_examples():
    assert theorem3_solve(7, 6) == (1, 6)
    assert theorem3_solve(7, 10) == (2, 5)
    assert theorem3_solve(7, 12) == (3, 4)
    assert theorem3_solve(7, 11) is None
    assert theorem3_solve(2, 1) == (1, 1)
    assert [a for a, _, _ in theorem3_points(7)] == [6, 10, 12]
    assert all(pair.chain_holds for pair in map(lambda t: theorem3_solve(7, t[0]), theorem3_points(7)))


@given(small, small, st.integers(0, 20))
def test_b_sequence_is_omega_orbit(e, a, n):
    b = b_sequence(e, a, n)
    M = omega_power(e, a, n)
    assert (M[0][0], M[1][0]) == (b[n], a * (b[n - 1] if n else 0))


@given(st.integers(0, 8), st.integers(0, 15), st.integers(0, 12))
def test_closed_form_agrees(e, a, n):
    if 4 * a < e * e:
        assert b_closed_form(e, a, n) == b_sequence(e, a, n)[n]


@given(st.integers(1, 12))
def test_rho_continuous_at_quarter(e):
    # both branches meet at e/2 when a = e^2/4
    if e % 2 == 0:
        assert spectral_radius(e, e * e // 4) == e / 2
    eps = 1e-9
    a = e * e / 4
    left = (e + math.sqrt(max(e * e - 4 * (a - eps), 0))) / 2
    right = math.sqrt(a + eps)
    assert abs(left - right) < 1e-3


@given(st.integers(1, 12), st.integers(0, 36))
def test_real_eigenvalues_in_range(e, a):
    if 4 * a <= e * e:
        for lam in spectral_data(e, a).real_eigenvalues:
            assert -1e-12 <= lam <= e + 1e-12


@given(st.integers(2, 10), st.data())
def test_ratio_tends_to_rho(e, data):
    a = data.draw(st.integers(1, max(1, (e * e - 1) // 4)))
    if 4 * a >= e * e:
        return
    b = b_sequence(e, a, 41)
    assert abs(b[41] / b[40] - spectral_radius(e, a)) < 1e-3


@given(st.integers(0, 10**6))
def test_perfect_square(n):
    r = perfect_square_root(n)
    assert (r is not None) == (math.isqrt(n) ** 2 == n)


def test_sweep_shape():
    pts = rho_sweep(4)
    assert len(pts) == 17 and pts[0] == (0, 4.0) and pts[4][1] == 2.0
