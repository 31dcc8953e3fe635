"""Named algebras and modules, hand-translated from relations to structure constants.

Each entry lists the defining relations and the resulting nonzero products.
Basis of J^2 in the order given; every product not listed is zero.

==================  ===================================  =====================================
name                relations                            nonzero products of generators
==================  ===================================  =====================================
ex_3_6_2            x2 y2 z2 xy-yx xz zx yz zy           x.y = y.x = z1 (=xy)
ex_3_6_3            yx-xy zy-x2 zx y2 xz yz z2           x.x = z1 (=x2), x.y = y.x = z2 (=xy),
                                                         z.y = z1
ex_6_3              x2 yx zx zy y2-xz yz z2              x.y = z1 (=xy), x.z = y.y = z2 (=xz)
alg_8_2_A           (J^2 spanned by x2 and zy)           x.x = z1 (=x2), z.y = z2 (=zy)
alg_8_2_A_listed    yx zx y2 zy xz yz z2 (as listed)     x.x = z1 (=x2), x.y = z2 (=xy)
alg_8_2_Aprime      yx zx xy zy xz yz z2                 x.x = z1 (=x2), y.y = z2 (=y2)
rem_4_2             x2 xy y2                             y.x = z1 (=yx)
lambda_conca        x_i x_i', y_j y_j', x_i y_j (i>a(j))  x_i.y_j = y_j.x_i = z_(i,j), i <= a(j)
lambda_cd           x_i x_i', y_j y_j'                    x_i.y_j = y_j.x_i = z_(i,j)
lambda_prime_cd     x_i x_i', y_j y_j', y_j x_i           x_i.y_j = z_(i,j)
rsz_E               all products                         none (Hilbert type (E, 0))
==================  ===================================  =====================================

``alg_8_2_A`` follows the picture of its radical (x acts on x, z acts on y);
the literal relation list leaves xy instead of zy and is kept separately as
``alg_8_2_A_listed``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import exactla as la
from .algebra import ShortLocalAlgebra, algebra_from_products
from .amodule import (
    ModulePresentation,
    action_to_presentation,
    presentation_from_relations,
    presentation_to_action,
    quotient_by_left_ideal,
    simple_module,
    submodule_action,
)
from .exactla import DEFAULT_PRIME


class UnknownPreset(KeyError):
    pass


class OutOfRange(ValueError):
    pass


@dataclass
class Preset:
    name: str
    algebra: ShortLocalAlgebra
    modules: dict = field(default_factory=dict)
    ideals: dict = field(default_factory=dict)  # name -> list of generator elements
    claimed_type: Optional[tuple] = None
    claimed_commutative: Optional[bool] = None
    description: str = ""

    def module(self, key: str) -> ModulePresentation:
        if key == "S":
            return self.modules.get("S") or simple_module(self.algebra)
        if key not in self.modules:
            raise UnknownPreset(f"preset {self.name!r} has no module {key!r}; known: {sorted(self.modules)}")
        return self.modules[key]


def left_annihilator(alg: ShortLocalAlgebra, v) -> la.Subspace:
    """{u : u v = 0} as a subspace of A."""
    v = np.asarray(v, dtype=np.int64)
    # column b of R is b * v
    R = np.stack([alg.multiply(alg.basis_element(b), v) for b in range(alg.dim)], axis=1)
    return la.kernel_basis(R, alg.p)


def cyclic_module(alg: ShortLocalAlgebra, v, name: str = "") -> ModulePresentation:
    """A v presented as A / ann(v)."""
    ann = left_annihilator(alg, v)
    return quotient_by_left_ideal(alg, ann.basis, name)


def left_ideal_module(alg: ShortLocalAlgebra, gens, name: str = "") -> ModulePresentation:
    """The left ideal generated by gens, as a module in its own right."""
    sub = presentation_from_relations(alg, 1, np.asarray(gens, dtype=np.int64))
    reg = presentation_to_action(ModulePresentation(alg, 1, la.zero_space(alg.dim, alg.p)))
    act = submodule_action(reg, sub.relations)
    P = action_to_presentation(act)
    return ModulePresentation(alg, P.rank, P.relations, name)


def _elt(alg: ShortLocalAlgebra, **coeffs) -> np.ndarray:
    """Element from generator / J^2 names, e.g. _elt(A, y=1, z1=-1)."""
    names = ("1",) + alg.x_names + alg.z_names
    v = np.zeros(alg.dim, dtype=np.int64)
    for key, val in coeffs.items():
        v[names.index(key)] = val
    return v % alg.p


# -- families ---------------------------------------------------------------


def lambda_conca(c: int, a_list, p: int = DEFAULT_PRIME) -> ShortLocalAlgebra:
    a_list = [int(x) for x in a_list]
    if c < 0 or any(not 0 <= x <= c for x in a_list):
        raise OutOfRange(f"need 0 <= a(j) <= c = {c}, got {a_list}")
    d = len(a_list)
    pairs = [(i, j) for j in range(d) for i in range(a_list[j])]
    a = len(pairs)
    products = {}
    for m, (i, j) in enumerate(pairs):
        vec = [0] * a
        vec[m] = 1
        products[(i, c + j)] = vec
        products[(c + j, i)] = vec
    xn = [f"x{i + 1}" for i in range(c)] + [f"y{j + 1}" for j in range(d)]
    zn = [f"x{i + 1}y{j + 1}" for i, j in pairs]
    return algebra_from_products(c + d, a, products, p, xn, zn)


def _lambda(c: int, d: int, p: int, commutative: bool) -> tuple[ShortLocalAlgebra, ModulePresentation]:
    if c < 1 or d < 1:
        raise OutOfRange("c and d must be positive")
    pairs = [(i, j) for j in range(d) for i in range(c)]
    a = len(pairs)
    products = {}
    for m, (i, j) in enumerate(pairs):
        vec = [0] * a
        vec[m] = 1
        products[(i, c + j)] = vec
        if commutative:
            products[(c + j, i)] = vec
    xn = [f"x{i + 1}" for i in range(c)] + [f"y{j + 1}" for j in range(d)]
    zn = [f"x{i + 1}y{j + 1}" for i, j in pairs]
    alg = algebra_from_products(c + d, a, products, p, xn, zn)
    return alg, cyclic_module(alg, alg.x(c), "Ay1")


def lambda_cd(c: int, d: int, p: int = DEFAULT_PRIME):
    return _lambda(c, d, p, commutative=True)


def lambda_prime_cd(c: int, d: int, p: int = DEFAULT_PRIME):
    return _lambda(c, d, p, commutative=False)


def conca_ideal_generators(alg: ShortLocalAlgebra, c: int) -> list[np.ndarray]:
    """The y_j generators (indices c..e-1) of the ideal sum A y_j."""
    return [alg.x(k) for k in range(c, alg.e)]


# -- fixed presets ----------------------------------------------------------


def _ex_3_6_2(p):
    alg = algebra_from_products(3, 1, {(0, 1): [1], (1, 0): [1]}, p, "xyz", ["xy"])
    M = quotient_by_left_ideal(alg, [_elt(alg, y=1), _elt(alg, z=1)], "M")
    return Preset("ex_3_6_2", alg, {"S": simple_module(alg), "M": M}, {}, (3, 1), True,
                  "relations x2 y2 z2 xy-yx xz zx yz zy; M = Ay = A/(Ay+Az)")


def _ex_3_6_3(p):
    alg = algebra_from_products(
        3, 2, {(0, 0): [1, 0], (0, 1): [0, 1], (1, 0): [0, 1], (2, 1): [1, 0]}, p, "xyz", ["x2", "xy"]
    )
    n = alg.dim
    gens = np.zeros((3, 3 * n), dtype=np.int64)
    x, y, z = 1, 2, 3
    gens[0, 0 * n + x] = 1
    gens[0, 1 * n + y] = 1
    gens[1, 1 * n + x] = 1
    gens[1, 2 * n + y] = 1
    gens[2, 1 * n + z] = 1
    M = presentation_from_relations(alg, 3, gens, "M")
    return Preset("ex_3_6_3", alg, {"S": simple_module(alg), "M": M}, {}, (3, 2), False,
                  "relations yx-xy zy-x2 zx y2 xz yz z2; M = A^3/<(x,y,0),(0,x,y),(0,z,0)>")


def _ex_6_3(p):
    alg = algebra_from_products(
        3, 2, {(0, 1): [1, 0], (0, 2): [0, 1], (1, 1): [0, 1]}, p, "xyz", ["xy", "xz"]
    )
    W = left_ideal_module(alg, [_elt(alg, y=1), _elt(alg, z=1)], "W")
    return Preset("ex_6_3", alg, {"S": simple_module(alg), "W": W}, {"x": [_elt(alg, x=1)]}, (3, 2), False,
                  "relations x2 yx zx zy y2-xz yz z2; W = Ay+Az")


def _alg_8_2_A(p):
    alg = algebra_from_products(3, 2, {(0, 0): [1, 0], (2, 1): [0, 1]}, p, "xyz", ["x2", "zy"])
    X = cyclic_module(alg, _elt(alg, x=1), "X")
    Z = cyclic_module(alg, _elt(alg, y=1), "Z")
    return Preset("alg_8_2_A", alg, {"S": simple_module(alg), "X": X, "Z": Z}, {}, (3, 2), False,
                  "J^2 spanned by x2, zy; X = Ax, Z = Ay")


def _alg_8_2_A_listed(p):
    alg = algebra_from_products(3, 2, {(0, 0): [1, 0], (0, 1): [0, 1]}, p, "xyz", ["x2", "xy"])
    return Preset("alg_8_2_A_listed", alg, {"S": simple_module(alg)}, {}, (3, 2), False,
                  "relations yx zx y2 zy xz yz z2 read literally (nonzero x2, xy)")


def _alg_8_2_Aprime(p):
    alg = algebra_from_products(3, 2, {(0, 0): [1, 0], (1, 1): [0, 1]}, p, "xyz", ["x2", "y2"])
    X = cyclic_module(alg, _elt(alg, x=1), "X")
    Y = cyclic_module(alg, _elt(alg, y=1), "Y")
    return Preset("alg_8_2_Aprime", alg, {"S": simple_module(alg), "X": X, "Y": Y}, {}, (3, 2), True,
                  "relations yx zx xy zy xz yz z2; X = Ax, Y = Ay")


def _rem_4_2(p):
    alg = algebra_from_products(2, 1, {(1, 0): [1]}, p, "xy", ["yx"])
    I = quotient_by_left_ideal(alg, [_elt(alg, x=1)], "I")
    N = quotient_by_left_ideal(alg, [_elt(alg, y=1), _elt(alg, yx=1)], "nonkoszul")
    return Preset("rem_4_2", alg, {"S": simple_module(alg), "I": I, "nonkoszul": N}, {}, (2, 1), False,
                  "relations x2 xy y2; I = A/Ax, nonkoszul = A/span{y, yx}")


def length_two_module(alg: ShortLocalAlgebra, lam: int, mu: int) -> ModulePresentation:
    """A / (A(mu x - lam y) + k yx) over the rem_4_2 algebra; (lam, mu) != (0, 0)."""
    if lam % alg.p == 0 and mu % alg.p == 0:
        raise OutOfRange("(lam, mu) must not both vanish")
    g = _elt(alg, x=mu, y=-lam)
    return quotient_by_left_ideal(alg, [g, _elt(alg, yx=1)], f"N({lam}:{mu})")


_FIXED: dict[str, Callable[[int], Preset]] = {
    "ex_3_6_2": _ex_3_6_2,
    "ex_3_6_3": _ex_3_6_3,
    "ex_6_3": _ex_6_3,
    "alg_8_2_A": _alg_8_2_A,
    "alg_8_2_A_listed": _alg_8_2_A_listed,
    "alg_8_2_Aprime": _alg_8_2_Aprime,
    "rem_4_2": _rem_4_2,
}

# Parametric names accepted by preset(): lambda_cd:C,D  lambda_prime_cd:C,D
# lambda_conca:C;A1,A2,...  rsz:E
_PARAMETRIC_EXAMPLES = ["lambda_cd:2,1", "lambda_cd:3,2", "lambda_prime_cd:2,1", "lambda_conca:2;1,1", "rsz:2"]


def preset(name: str, p: int = DEFAULT_PRIME) -> Preset:
    if name in _FIXED:
        return _FIXED[name](p)
    m = re.fullmatch(r"(lambda_cd|lambda_prime_cd):(\d+),(\d+)", name)
    if m:
        c, d = int(m.group(2)), int(m.group(3))
        ctor = lambda_cd if m.group(1) == "lambda_cd" else lambda_prime_cd
        alg, M = ctor(c, d, p)
        ideals = {"U": conca_ideal_generators(alg, c)}
        return Preset(name, alg, {"S": simple_module(alg), "Ay1": M}, ideals, (c + d, c * d),
                      m.group(1) == "lambda_cd", f"c={c}, d={d}; Ay1 = A/ann(y1)")
    m = re.fullmatch(r"lambda_conca:(\d+);(\d+(?:,\d+)*)", name)
    if m:
        c = int(m.group(1))
        a_list = [int(x) for x in m.group(2).split(",")]
        alg = lambda_conca(c, a_list, p)
        ideals = {"U": conca_ideal_generators(alg, c)}
        return Preset(name, alg, {"S": simple_module(alg)}, ideals, (c + len(a_list), sum(a_list)), True,
                      f"c={c}, a={a_list}; U = sum A y_j")
    m = re.fullmatch(r"rsz:(\d+)", name)
    if m:
        e = int(m.group(1))
        alg = algebra_from_products(e, 0, {}, p)
        return Preset(name, alg, {"S": simple_module(alg)}, {}, (e, 0), True, "radical square zero")
    raise UnknownPreset(f"unknown preset {name!r}")


def preset_names() -> list[str]:
    return list(_FIXED) + _PARAMETRIC_EXAMPLES


def catalog(p: int = DEFAULT_PRIME) -> list[dict]:
    rows = []
    for name in preset_names():
        pr = preset(name, p)
        rows.append({
            "name": name,
            "hilbert_type": list(pr.algebra.hilbert_type),
            "commutative": pr.algebra.is_commutative(),
            "modules": sorted(pr.modules),
            "description": pr.description,
        })
    return rows
