from __future__ import annotations

import json
from fractions import Fraction

import numpy as np

from shortlocal import report
from shortlocal.presets import preset
from shortlocal.randgen import random_algebra, random_module, random_pair
from shortlocal.resolution import betti_sequence


def test_json_plain_types():
    text = report.to_json({"b": np.int64(3), "a": [Fraction(1, 2), Fraction(4)], "c": np.array([1, 2])})
    assert json.loads(text) == {"a": ["1/2", 4], "b": 3, "c": [1, 2]}
    assert text.index('"a"') < text.index('"b"')


def test_betti_tables():
    rep = betti_sequence(preset("alg_8_2_A").module("S"), 3)
    assert report.betti_csv(rep).splitlines() == ["n,t_n,top,rad,w", "0,1,1,0,", "1,3,3,2,0", "2,8,8,5,1", "3,21,21,14,2"]
    text = report.betti_text(rep)
    assert "Hilbert type (3, 2)" in text and text.splitlines()[-1].split() == ["3", "21", "21", "14", "2"]


def test_randgen_seeded():
    a = random_pair(np.random.default_rng(3))
    b = random_pair(np.random.default_rng(3))
    assert a[0] == b[0] and a[1].relations == b[1].relations


def test_random_module_loewy():
    rng = np.random.default_rng(0)
    alg = random_algebra(rng, 3, 2)
    for _ in range(10):
        assert random_module(rng, alg, 2).is_loewy_le2()
    assert random_module(rng, alg, 1, loewy2=False).rank == 1
