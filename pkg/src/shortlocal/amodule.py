"""Finitely generated left modules over a short local algebra.

Two representations are used side by side:

* ``ModulePresentation``: M = F_t / U with F_t = A^t and U a submodule of
  J F_t.  Coordinates on F_t are block-major: block k holds the coefficients
  of the k-th summand in the algebra basis (unit, x, z).
* ``ActionModule``: a coordinate space with one action matrix per radical
  basis element (matrices act on column vectors).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, Union

import numpy as np

from . import exactla as la
from .algebra import ShortLocalAlgebra, algebra_from_json, load_algebra
from .exactla import Subspace


class ModuleError(ValueError):
    pass


class NotMinimal(ModuleError):
    """Relations not contained in J F_t."""


class NotSubmodule(ModuleError):
    pass


class NotLoewy2(ModuleError):
    pass


class GeneratorNotInRadical(ModuleError):
    pass


class BadAction(ModuleError):
    pass


class DimensionVector(NamedTuple):
    t: int
    j: int

    def __add__(self, other):
        return DimensionVector(self.t + other.t, self.j + other.j)

    @property
    def length(self) -> int:
        return self.t + self.j


# -- free modules ---------------------------------------------------------


def free_mult_rows(alg: ShortLocalAlgebra, rows: np.ndarray, u) -> np.ndarray:
    """Left-multiply each row vector of F_t (block-major) by the algebra element u."""
    rows = np.asarray(rows, dtype=np.int64)
    n = alg.dim
    if rows.shape[0] == 0:
        return rows.copy()
    t = rows.shape[1] // n
    L = alg.left_mult_matrix(u)
    blocks = rows.reshape(rows.shape[0], t, n)
    out = np.einsum("ij,rkj->rki", L, blocks) % alg.p
    return out.reshape(rows.shape[0], t * n)


def radical_coords(alg: ShortLocalAlgebra, t: int) -> np.ndarray:
    """Coordinate indices of J F_t."""
    n = alg.dim
    return np.array([k * n + b for k in range(t) for b in range(1, n)], dtype=np.int64)


def square_radical_coords(alg: ShortLocalAlgebra, t: int) -> np.ndarray:
    """Coordinate indices of J^2 F_t."""
    n = alg.dim
    return np.array([k * n + b for k in range(t) for b in range(1 + alg.e, n)], dtype=np.int64)


def x_layer_coords(alg: ShortLocalAlgebra, t: int) -> np.ndarray:
    n = alg.dim
    return np.array([k * n + b for k in range(t) for b in range(1, 1 + alg.e)], dtype=np.int64)


def coordinate_space(alg: ShortLocalAlgebra, t: int, coords) -> Subspace:
    rows = np.zeros((len(coords), t * alg.dim), dtype=np.int64)
    rows[np.arange(len(coords)), coords] = 1
    return la.span(rows, alg.p, t * alg.dim)


def radical_of_span(alg: ShortLocalAlgebra, rows: np.ndarray, t: int) -> Subspace:
    """J * span(rows) inside F_t (rows need not be closed)."""
    prods = [free_mult_rows(alg, rows, alg.basis_element(k)) for k in range(1, alg.dim)]
    stacked = np.vstack(prods) if prods else np.zeros((0, t * alg.dim), dtype=np.int64)
    return la.span(stacked, alg.p, t * alg.dim)


@dataclass(frozen=True, eq=False)
class SubmoduleOfFree:
    alg: ShortLocalAlgebra
    rank: int
    space: Subspace

    def __post_init__(self):
        if self.space.ambient_dim != self.rank * self.alg.dim:
            raise ModuleError("submodule ambient dimension does not match rank")

    @property
    def dim(self) -> int:
        return self.space.dim

    def is_closed(self) -> bool:
        for k in range(1, self.alg.dim):
            img = free_mult_rows(self.alg, self.space.basis, self.alg.basis_element(k))
            for v in img:
                if not self.space.contains(v):
                    return False
        return True

    def radical(self) -> Subspace:
        return radical_of_span(self.alg, self.space.basis, self.rank)


def close_submodule(alg: ShortLocalAlgebra, rank: int, gens) -> SubmoduleOfFree:
    """Smallest submodule of F_rank containing the given row vectors."""
    n = rank * alg.dim
    gens = np.asarray(gens, dtype=np.int64).reshape(-1, n) if np.size(gens) else np.zeros((0, n), dtype=np.int64)
    space = la.span(gens % alg.p, alg.p, n)
    # J^3 = 0: three rounds of radical multiplication always suffice.
    while True:
        grown = la.subspace_sum(space, radical_of_span(alg, space.basis, rank))
        if grown.dim == space.dim:
            return SubmoduleOfFree(alg, rank, space)
        space = grown


# -- presentations ----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ModulePresentation:
    """M = F_rank / relations, with relations inside J F_rank."""

    alg: ShortLocalAlgebra
    rank: int
    relations: Subspace
    name: str = ""

    def __post_init__(self):
        n = self.rank * self.alg.dim
        if self.relations.ambient_dim != n:
            raise ModuleError(f"relations live in dimension {self.relations.ambient_dim}, expected {n}")
        if self.relations.dim and self.relations.basis[:, np.arange(self.rank) * self.alg.dim].any():
            raise NotMinimal("relations must lie in J F_t (zero unit components); the cover would not be minimal")

    @property
    def ambient_dim(self) -> int:
        return self.rank * self.alg.dim

    @property
    def length(self) -> int:
        return self.ambient_dim - self.relations.dim

    @property
    def top_length(self) -> int:
        return self.rank

    def submodule(self) -> SubmoduleOfFree:
        return SubmoduleOfFree(self.alg, self.rank, self.relations)

    def is_loewy_le2(self) -> bool:
        coords = square_radical_coords(self.alg, self.rank)
        if len(coords) == 0:
            return True
        return la.subspace_sum(self.relations, coordinate_space(self.alg, self.rank, coords)).dim == self.relations.dim

    def radical_length(self) -> int:
        """|JM| = |J F_t| - |U|."""
        return self.rank * (self.alg.dim - 1) - self.relations.dim

    def dimension_vector(self) -> DimensionVector:
        if not self.is_loewy_le2():
            raise NotLoewy2("dimension vectors are defined for Loewy length <= 2 only")
        return DimensionVector(self.rank, self.radical_length())

    def is_projective(self) -> bool:
        return self.relations.dim == 0

    def to_json(self, algebra_ref=None) -> dict:
        n = self.alg.dim
        basis = self.relations.basis
        signed = np.where(basis > self.alg.p // 2, basis - self.alg.p, basis)
        return {
            "algebra": algebra_ref if algebra_ref is not None else self.alg.to_json(),
            "rank": self.rank,
            "relations": [row.reshape(self.rank, n).tolist() for row in signed],
        }

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"ModulePresentation{label}(rank={self.rank}, |M|={self.length}, p={self.alg.p})"


def presentation_from_relations(alg: ShortLocalAlgebra, rank: int, gens, name: str = "") -> ModulePresentation:
    """Close the given generators to a submodule and present F_rank modulo it."""
    sub = close_submodule(alg, rank, gens)
    return ModulePresentation(alg, rank, sub.space, name)


def simple_module(alg: ShortLocalAlgebra) -> ModulePresentation:
    return ModulePresentation(alg, 1, coordinate_space(alg, 1, radical_coords(alg, 1)), "S")


def free_module(alg: ShortLocalAlgebra, rank: int = 1) -> ModulePresentation:
    return ModulePresentation(alg, rank, la.zero_space(rank * alg.dim, alg.p), f"A^{rank}")


def zero_module(alg: ShortLocalAlgebra) -> ModulePresentation:
    return ModulePresentation(alg, 0, la.zero_space(0, alg.p), "0")


def quotient_by_left_ideal(alg: ShortLocalAlgebra, gens: Sequence, name: str = "") -> ModulePresentation:
    """Present A/V for the left ideal V generated by elements of J."""
    rows = np.asarray(gens, dtype=np.int64).reshape(-1, alg.dim) if len(gens) else np.zeros((0, alg.dim), dtype=np.int64)
    for g in rows:
        if not alg.in_radical(g):
            raise GeneratorNotInRadical(f"generator {g.tolist()} has a unit component")
    return presentation_from_relations(alg, 1, rows, name)


def direct_sum(m: ModulePresentation, n: ModulePresentation) -> ModulePresentation:
    if m.alg != n.alg:
        raise ModuleError("modules over different algebras")
    d1, d2 = m.ambient_dim, n.ambient_dim
    left = np.hstack([m.relations.basis, np.zeros((m.relations.dim, d2), dtype=np.int64)])
    right = np.hstack([np.zeros((n.relations.dim, d1), dtype=np.int64), n.relations.basis])
    rel = la.span(np.vstack([left, right]), m.alg.p, d1 + d2)
    name = f"{m.name}+{n.name}" if m.name and n.name else ""
    return ModulePresentation(m.alg, m.rank + n.rank, rel, name)


def direct_power(m: ModulePresentation, k: int) -> ModulePresentation:
    out = zero_module(m.alg)
    for _ in range(k):
        out = direct_sum(out, m)
    return out


# -- action modules ---------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ActionModule:
    alg: ShortLocalAlgebra
    dim: int
    X: tuple
    Z: tuple

    def __post_init__(self):
        p = self.alg.p
        X = tuple(np.asarray(m, dtype=np.int64).reshape(self.dim, self.dim) % p for m in self.X)
        Z = tuple(np.asarray(m, dtype=np.int64).reshape(self.dim, self.dim) % p for m in self.Z)
        if len(X) != self.alg.e or len(Z) != self.alg.a:
            raise BadAction("need one action matrix per radical generator")
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Z", Z)

    def validate(self) -> None:
        p, c = self.alg.p, self.alg.c
        for i, Xi in enumerate(self.X):
            for j, Xj in enumerate(self.X):
                expect = np.zeros((self.dim, self.dim), dtype=np.int64)
                for m, Zm in enumerate(self.Z):
                    expect += c[i, j, m] * Zm
                if not np.array_equal(la.matmul(Xi, Xj, p), expect % p):
                    raise BadAction(f"x{i + 1} x{j + 1} does not act as prescribed")
        for Zm in self.Z:
            for Y in self.X + self.Z:
                if la.matmul(Zm, Y, p).any() or la.matmul(Y, Zm, p).any():
                    raise BadAction("J^2 does not annihilate J M")

    @property
    def matrices(self) -> tuple:
        return self.X + self.Z

    def act(self, u, v) -> np.ndarray:
        """Action of algebra element u on the column vector v."""
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        out = u[0] * v
        for k, mat in enumerate(self.matrices):
            if u[k + 1]:
                out = out + u[k + 1] * la.matmul(mat, v, self.alg.p)
        return out % self.alg.p


AnyModule = Union[ModulePresentation, ActionModule]


def _as_action(m: AnyModule) -> ActionModule:
    return presentation_to_action(m) if isinstance(m, ModulePresentation) else m


def presentation_to_action(P: ModulePresentation) -> ActionModule:
    """Action matrices on the quotient F_t/U in the coordinates complementary to U's pivots."""
    alg = P.alg
    keep = P.relations.complement_coords()
    m = len(keep)
    units = np.zeros((m, P.ambient_dim), dtype=np.int64)
    units[np.arange(m), keep] = 1
    mats = []
    for k in range(1, alg.dim):
        img = P.relations.reduce(free_mult_rows(alg, units, alg.basis_element(k)))
        # row r = image of basis vector r; columns of the action matrix are images
        mats.append(img[:, keep].T.copy() if m else np.zeros((0, 0), dtype=np.int64))
    return ActionModule(alg, m, tuple(mats[: alg.e]), tuple(mats[alg.e:]))


def radical(M: AnyModule) -> Subspace:
    M = _as_action(M)
    if M.dim == 0:
        return la.zero_space(0, M.alg.p)
    cols = [mat.T for mat in M.matrices]
    rows = np.vstack(cols) if cols else np.zeros((0, M.dim), dtype=np.int64)
    return la.span(rows, M.alg.p, M.dim)


def socle(M: AnyModule) -> Subspace:
    M = _as_action(M)
    if not M.matrices:
        return la.full_space(M.dim, M.alg.p)
    return la.kernel_basis(np.vstack(M.matrices), M.alg.p)


def top_dim(M: AnyModule) -> int:
    if isinstance(M, ModulePresentation):
        return M.rank
    return M.dim - radical(M).dim


def action_to_presentation(M: ActionModule, name: str = "") -> ModulePresentation:
    """Projective cover on a lifted basis of the top; the kernel is the relation module."""
    alg = M.alg
    R = radical(M)
    lifts = R.complement_coords()
    t = len(lifts)
    n = alg.dim
    if t == 0:
        return zero_module(alg)
    phi = np.zeros((M.dim, t * n), dtype=np.int64)
    for k, c in enumerate(lifts):
        v = np.zeros(M.dim, dtype=np.int64)
        v[c] = 1
        phi[:, k * n] = v
        for b, mat in enumerate(M.matrices):
            phi[:, k * n + 1 + b] = mat[:, c]
    U = la.kernel_basis(phi, alg.p)
    return ModulePresentation(alg, t, U, name)


def loewy_length_le2(M: AnyModule) -> bool:
    if isinstance(M, ModulePresentation):
        return M.is_loewy_le2()
    p = M.alg.p
    if any(Zm.any() for Zm in M.Z):
        return False
    return not any(la.matmul(Xi, Xj, p).any() for Xi in M.X for Xj in M.X)


def radical_length(M: AnyModule) -> int:
    if isinstance(M, ModulePresentation):
        return M.radical_length()
    return radical(M).dim


def dimension_vector(M: AnyModule) -> DimensionVector:
    if isinstance(M, ModulePresentation):
        return M.dimension_vector()
    if not loewy_length_le2(M):
        raise NotLoewy2("dimension vectors are defined for Loewy length <= 2 only")
    j = radical(M).dim
    return DimensionVector(M.dim - j, j)


def _require_loewy2(M: AnyModule):
    if not loewy_length_le2(M):
        raise NotLoewy2("module has Loewy length > 2")


def is_bipartite(M: AnyModule) -> bool:
    _require_loewy2(M)
    A = _as_action(M)
    return socle(A) == radical(A)


def is_semisimple(M: AnyModule) -> bool:
    _require_loewy2(M)
    return radical_length(M) == 0


def simple_summand_count(M: AnyModule) -> int:
    """Multiplicity s in M = B + S^s with B bipartite: |soc M| - |JM|."""
    _require_loewy2(M)
    A = _as_action(M)
    return socle(A).dim - radical(A).dim


def is_submodule(M: ActionModule, W: Subspace) -> bool:
    for mat in M.matrices:
        for v in W.basis:
            if not W.contains(la.matmul(mat, v, M.alg.p)):
                return False
    return True


def submodule_action(M: ActionModule, W: Subspace) -> ActionModule:
    """W as a module, in the coordinates of its RREF basis."""
    if not is_submodule(M, W):
        raise NotSubmodule("subspace is not closed under the action")
    p = M.alg.p
    B = W.basis  # rows
    mats = []
    for mat in M.matrices:
        img = la.matmul(B, mat.T, p)  # row r = image of basis vector r
        coords = img[:, W.pivots] if W.dim else np.zeros((0, 0), dtype=np.int64)
        mats.append(coords.T.copy())
    return ActionModule(M.alg, W.dim, tuple(mats[: M.alg.e]), tuple(mats[M.alg.e:]))


def quotient_action(M: ActionModule, W: Subspace) -> ActionModule:
    """M/W on the pivot-complement coordinates of W."""
    if not is_submodule(M, W):
        raise NotSubmodule("subspace is not closed under the action")
    keep = W.complement_coords()
    k = len(keep)
    units = np.zeros((k, M.dim), dtype=np.int64)
    units[np.arange(k), keep] = 1
    mats = []
    for mat in M.matrices:
        img = W.reduce(la.matmul(units, mat.T, M.alg.p))
        mats.append(img[:, keep].T.copy() if k else np.zeros((0, 0), dtype=np.int64))
    return ActionModule(M.alg, k, tuple(mats[: M.alg.e]), tuple(mats[M.alg.e:]))


def t_submodule_check(M: AnyModule, W: Subspace) -> bool:
    """t(M) = t(W) + t(M/W) for a submodule W of the action realization of M."""
    A = _as_action(M)
    sub = submodule_action(A, W)
    quo = quotient_action(A, W)
    return top_dim(A) == top_dim(sub) + top_dim(quo)


# -- file format ------------------------------------------------------------


def module_from_json(obj: dict, alg: Optional[ShortLocalAlgebra] = None, base_dir: str = ".",
                     p: Optional[int] = None) -> ModulePresentation:
    """Parse ``{"algebra": path|inline, "rank": t, "relations": [[block, ...], ...]}``."""
    import os

    if alg is None:
        ref = obj.get("algebra")
        if isinstance(ref, str):
            alg = load_algebra(ref if os.path.isabs(ref) else os.path.join(base_dir, ref), p)
        elif isinstance(ref, dict):
            alg = algebra_from_json(ref, p)
        else:
            raise ModuleError("module file needs an 'algebra' path or inline object")
    t = int(obj["rank"])
    n = alg.dim
    rows = []
    for rel in obj.get("relations", []):
        arr = np.asarray(rel, dtype=np.int64)
        if arr.size != t * n:
            raise ModuleError(f"relation has {arr.size} coefficients, expected {t}x{n}")
        rows.append(arr.reshape(-1))
    gens = np.vstack(rows) if rows else np.zeros((0, t * n), dtype=np.int64)
    return presentation_from_relations(alg, t, gens % alg.p, obj.get("name", ""))


def load_module(path: str, alg: Optional[ShortLocalAlgebra] = None, p: Optional[int] = None) -> ModulePresentation:
    import os

    with open(path) as fh:
        return module_from_json(json.load(fh), alg, os.path.dirname(os.path.abspath(path)), p)
