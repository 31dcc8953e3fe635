"""Seeded random short local algebras and modules for property checks."""

from __future__ import annotations

import numpy as np

from . import exactla as la
from .algebra import ShortLocalAlgebra, SpanDeficient, new_algebra
from .amodule import (
    ModulePresentation,
    coordinate_space,
    presentation_from_relations,
    radical_coords,
    square_radical_coords,
    x_layer_coords,
)
from .exactla import DEFAULT_PRIME, PrimeField


def random_algebra(rng: np.random.Generator, e: int, a: int, p: int = DEFAULT_PRIME,
                   density: float = 0.5, max_tries: int = 1000) -> ShortLocalAlgebra:
    """Structure constants in {-1, 0, 1}, redrawn until the products span J^2."""
    if a > e * e:
        raise ValueError(f"a = {a} cannot exceed e^2 = {e * e}")
    field = PrimeField(p)
    for _ in range(max_tries):
        mask = rng.random((e, e, a)) < density
        c = rng.integers(-1, 2, size=(e, e, a)) * mask
        try:
            return new_algebra(e, a, c, field)
        except SpanDeficient:
            continue
    raise RuntimeError(f"no spanning tensor found for (e, a) = ({e}, {a})")


def random_module(rng: np.random.Generator, alg: ShortLocalAlgebra, t: int,
                  loewy2: bool = True, max_rel: int | None = None) -> ModulePresentation:
    """F_t modulo a random submodule of J F_t.

    With ``loewy2`` the relations contain J^2 F_t, so the quotient has Loewy
    length at most 2; relations are random combinations of x-layer
    coordinates with small signed coefficients.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    n = t * alg.dim
    layer = x_layer_coords(alg, t) if loewy2 else radical_coords(alg, t)
    max_rel = len(layer) if max_rel is None else max_rel
    k = int(rng.integers(0, max_rel + 1))
    gens = np.zeros((k, n), dtype=np.int64)
    if k:
        gens[:, layer] = rng.integers(-1, 2, size=(k, len(layer)))
    if loewy2:
        j2 = coordinate_space(alg, t, square_radical_coords(alg, t)).basis
        gens = np.vstack([gens, j2])
    return presentation_from_relations(alg, t, gens % alg.p, f"rand(t={t})")


def random_pair(rng: np.random.Generator, e_max: int = 4, a_max: int = 4, t_max: int = 3,
                p: int = DEFAULT_PRIME) -> tuple[ShortLocalAlgebra, ModulePresentation]:
    e = int(rng.integers(1, e_max + 1))
    a = int(rng.integers(0, min(a_max, e * e) + 1))
    alg = random_algebra(rng, e, a, p)
    t = int(rng.integers(1, t_max + 1))
    return alg, random_module(rng, alg, t)
