"""Two-sided ideals of a short local algebra and the left Conca conditions.

An ideal U is left Conca when U^2 = 0 and J^2 is contained in J U; an element
x is a left Conca generator when x != 0, x^2 = 0 and J x = J^2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import exactla as la
from .algebra import ShortLocalAlgebra
from .amodule import GeneratorNotInRadical


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class IdealSpec:
    alg: ShortLocalAlgebra
    generators: tuple
    closure: la.Subspace

    @property
    def dim(self) -> int:
        return self.closure.dim


def _products(alg: ShortLocalAlgebra, left, right) -> np.ndarray:
    rows = [alg.multiply(u, v) for u in left for v in right]
    return np.array(rows, dtype=np.int64).reshape(-1, alg.dim)


def _radical_basis(alg: ShortLocalAlgebra) -> list[np.ndarray]:
    return [alg.basis_element(k) for k in range(1, alg.dim)]


def j_squared(alg: ShortLocalAlgebra) -> la.Subspace:
    return la.span(np.eye(alg.dim, dtype=np.int64)[1 + alg.e:], alg.p, alg.dim)


def ideal_closure(alg: ShortLocalAlgebra, gens) -> IdealSpec:
    gens = [np.asarray(g, dtype=np.int64) % alg.p for g in gens]
    for g in gens:
        if not alg.in_radical(g):
            raise GeneratorNotInRadical(f"generator {g.tolist()} has a unit component")
    space = la.span(np.array(gens).reshape(-1, alg.dim), alg.p, alg.dim)
    rad = _radical_basis(alg)
    while True:
        basis = list(space.basis)
        new = np.vstack([space.basis, _products(alg, rad, basis), _products(alg, basis, rad)])
        grown = la.span(new, alg.p, alg.dim)
        if grown.dim == space.dim:
            return IdealSpec(alg, tuple(gens), space)
        space = grown


@dataclass
class ConcaVerdict:
    is_conca: bool
    u2_zero: bool
    j2_in_ju: bool

    def __bool__(self):
        return self.is_conca


def is_left_conca_ideal(alg: ShortLocalAlgebra, U: IdealSpec) -> ConcaVerdict:
    basis = list(U.closure.basis)
    u2 = la.span(_products(alg, basis, basis), alg.p, alg.dim)
    ju = la.span(_products(alg, _radical_basis(alg), basis), alg.p, alg.dim)
    j2 = j_squared(alg)
    u2_zero = u2.dim == 0
    j2_in_ju = la.subspace_sum(ju, j2).dim == ju.dim
    return ConcaVerdict(u2_zero and j2_in_ju, u2_zero, j2_in_ju)


def is_left_conca_generator(alg: ShortLocalAlgebra, x) -> bool:
    x = np.asarray(x, dtype=np.int64) % alg.p
    if not x.any() or alg.multiply(x, x).any():
        return False
    jx = la.span(_products(alg, _radical_basis(alg), [x]), alg.p, alg.dim)
    return jx == j_squared(alg)


@dataclass
class SearchResult:
    found: bool
    witness: Optional[list]
    ideal: Optional[IdealSpec]
    mode: str
    max_gens: int
    candidates_checked: int
    exhaustive_completed: bool
    note: str = ""

    def to_json(self) -> dict:
        return {
            "found": self.found,
            "witness": [[int(v) for v in g] for g in self.witness] if self.witness else None,
            "ideal_dim": self.ideal.dim if self.ideal else None,
            "mode": self.mode,
            "max_gens": self.max_gens,
            "candidates_checked": self.candidates_checked,
            "exhaustive_completed": self.exhaustive_completed,
            "note": self.note,
        }


def _radical_elements(alg: ShortLocalAlgebra):
    for coeffs in itertools.product(range(alg.p), repeat=alg.e + alg.a):
        if any(coeffs):
            yield np.array((0,) + coeffs, dtype=np.int64)


def search_conca(alg: ShortLocalAlgebra, mode: str = "exhaustive", budget: int = 100_000,
                 max_gens: int = 1, seed: int = 0) -> SearchResult:
    """Look for a left Conca ideal generated by at most ``max_gens`` radical elements.

    Exhaustive mode enumerates J over the prime field and refuses to start when
    the candidate count exceeds ``budget``.  Random mode checks ``budget``
    seeded samples and never certifies absence.
    """
    if mode not in ("exhaustive", "random"):
        raise ValueError(f"unknown search mode {mode!r}")
    if max_gens not in (1, 2):
        raise ValueError("max_gens must be 1 or 2")
    size = alg.p ** (alg.e + alg.a)
    checked = 0
    seen: set = set()

    def check(gens) -> Optional[IdealSpec]:
        U = ideal_closure(alg, gens)
        key = U.closure.basis.tobytes()
        if key in seen:
            return None
        seen.add(key)
        return U if is_left_conca_ideal(alg, U).is_conca else None

    if mode == "exhaustive":
        total = (size - 1) + ((size - 1) * (size - 2) // 2 if max_gens == 2 else 0)
        if total > budget:
            raise BudgetExceeded(
                f"exhaustive search needs {total} candidates over GF({alg.p}), budget is {budget}"
            )
        elems = list(_radical_elements(alg))
        for x in elems:
            checked += 1
            U = check([x])
            if U is not None:
                return SearchResult(True, [x], U, mode, max_gens, checked, False, "witness found")
        if max_gens == 2:
            for x, y in itertools.combinations(elems, 2):
                checked += 1
                U = check([x, y])
                if U is not None:
                    return SearchResult(True, [x, y], U, mode, max_gens, checked, False, "witness found")
        what = "single-generator" if max_gens == 1 else "at-most-two-generator"
        return SearchResult(False, None, None, mode, max_gens, checked, True,
                            f"no {what} left Conca ideal over GF({alg.p}) (exhaustive)")

    # basis vectors and pairs of them first; structured witnesses are common
    rad = _radical_basis(alg)
    sparse = [[x] for x in rad]
    if max_gens == 2:
        sparse += [list(pair) for pair in itertools.combinations(rad, 2)]
    for gens in sparse[:budget]:
        checked += 1
        U = check(gens)
        if U is not None:
            return SearchResult(True, gens, U, mode, max_gens, checked, False, "witness found")
    rng = np.random.default_rng(seed)
    for _ in range(budget - checked):
        gens = []
        for _ in range(int(rng.integers(1, max_gens + 1))):
            v = np.zeros(alg.dim, dtype=np.int64)
            v[1:] = rng.integers(0, alg.p, size=alg.dim - 1)
            gens.append(v)
        checked += 1
        if not any(g.any() for g in gens):
            continue
        U = check(gens)
        if U is not None:
            return SearchResult(True, gens, U, mode, max_gens, checked, False, "witness found")
    return SearchResult(False, None, None, mode, max_gens, checked, False,
                        "none found within budget; this is not a nonexistence proof")
