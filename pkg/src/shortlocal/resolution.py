"""Minimal resolutions, Betti numbers and alignedness over short local algebras.

Two routes compute syzygies:

``syzygy``
    The literal construction: lift a basis of top U to generators, write the
    cover F_s -> F_t as a matrix and take its kernel.  Returns a full
    ``ModulePresentation`` and is used for the subspace-level checks.

``betti_sequence``
    Iterates on generator data only.  If g_1..g_s minimally generate
    U in J F_t, the kernel of F_s -> F_t is  K_x + J^2 F_s  where K_x is the
    set of x-layer vectors mu with  sum mu[k,i] x_i g_k = 0.  Only the
    x-layer parts of the g_k matter, so each step is one kernel of a
    (t*a) x (s*e) matrix plus one rank of a matrix landing in J^2 F_s.

    Generators whose x-parts use disjoint sets of coordinates of F_t make
    that matrix block diagonal, and each block evolves on its own.  The
    iteration therefore keeps a multiset of distinct blocks and computes the
    next layer once per distinct block.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import exactla as la
from .algebra import ShortLocalAlgebra
from .amodule import (
    DimensionVector,
    ModulePresentation,
    coordinate_space,
    direct_sum,
    free_mult_rows,
    radical_of_span,
    simple_summand_count,
    square_radical_coords,
)
from .spectral import omega_apply, spectral_data

DEFAULT_N = 8
DEFAULT_DIM_CAP = 200_000


class ResolutionError(RuntimeError):
    pass


class ShapeViolation(ResolutionError):
    """dim(Omega M) - omega(dim M) is not of the form (w, -w) with w >= 0."""


class ConditionDisagreement(ResolutionError):
    """Equivalent alignedness conditions returned different verdicts."""


# -- explicit route ---------------------------------------------------------


def minimal_generators(alg: ShortLocalAlgebra, rank: int, U: la.Subspace) -> np.ndarray:
    """Rows of U lifting a basis of U / JU."""
    JU = radical_of_span(alg, U.basis, rank)
    idx = la.independent_rows(U.basis, alg.p, modulo=JU)
    return U.basis[idx]


def syzygy(M: ModulePresentation) -> ModulePresentation:
    alg = M.alg
    n = alg.dim
    gens = minimal_generators(alg, M.rank, M.relations)
    s = gens.shape[0]
    if s == 0:
        return ModulePresentation(alg, 0, la.zero_space(0, alg.p), _omega_name(M.name))
    # column (k, b) of the cover matrix is b * g_k
    cols = np.zeros((s, n, M.ambient_dim), dtype=np.int64)
    for b in range(n):
        cols[:, b, :] = free_mult_rows(alg, gens, alg.basis_element(b))
    cover = cols.reshape(s * n, M.ambient_dim).T
    K = la.kernel_basis(cover, alg.p)
    # The constructor rejects K outside J F_s, which would mean the g_k were not minimal.
    return ModulePresentation(alg, s, K, _omega_name(M.name))


def _omega_name(name: str) -> str:
    return f"Omega({name})" if name else ""


def syzygy_power(M: ModulePresentation, n: int) -> ModulePresentation:
    for _ in range(n):
        M = syzygy(M)
    return M


# -- generator-data route -----------------------------------------------------


@dataclass
class _Layer:
    """Minimal generators of Omega^n M inside F_t, x-layer parts only."""

    ambient_rank: int
    xpart: np.ndarray  # shape (s, t, e)
    rad_dim: int  # |J Omega^n M|

    @property
    def top(self) -> int:
        return self.xpart.shape[0]


def _first_layer(M: ModulePresentation) -> _Layer:
    alg = M.alg
    gens = minimal_generators(alg, M.rank, M.relations)
    xpart = gens.reshape(gens.shape[0], M.rank, alg.dim)[:, :, 1:1 + alg.e]
    rad = M.relations.dim - gens.shape[0]
    return _Layer(M.rank, np.ascontiguousarray(xpart), rad)


def _next_layer(alg: ShortLocalAlgebra, layer: _Layer) -> _Layer:
    p, e, a = alg.p, alg.e, alg.a
    s, t = layer.top, layer.ambient_rank
    c = alg.c
    if a == 0:
        # J^2 = 0: every x-layer vector is a syzygy and Omega is semisimple.
        xpart = np.zeros((s * e, s, e), dtype=np.int64)
        xpart.reshape(s * e, s * e)[np.arange(s * e), np.arange(s * e)] = 1
        return _Layer(s, xpart, 0)
    # phi[(l, m), (k, i)] = sum_j c[i, j, m] * g_k[l, j]
    phi = np.einsum("ijm,klj->lmki", c, layer.xpart).reshape(t * a, s * e) % p
    kx = la._kernel_rows(phi, p)  # (r, s*e)
    r = kx.shape[0]
    if r:
        kx3 = kx.reshape(r, s, e)
        # (x_j kappa)[k, m] = sum_i c[j, i, m] kappa[k, i]
        jk = np.einsum("jim,rki->rjkm", c, kx3).reshape(r * e, s * a) % p
        rad = la.rank(jk, p)
    else:
        kx3 = np.zeros((0, s, e), dtype=np.int64)
        rad = 0
    pure = s * a - rad  # socle generators complementing JK inside J^2 F_s
    xpart = np.concatenate([kx3, np.zeros((pure, s, e), dtype=np.int64)], axis=0)
    return _Layer(s, xpart, rad)


@dataclass
class BettiReport:
    module: str
    N: int
    p: int
    hilbert_type: tuple
    t_seq: list
    dimvec_seq: list  # DimensionVector or None (index n)
    w_seq: list  # index n-1 holds w_n, or None
    lengths: list  # |Omega^n M|
    truncated: bool = False
    bounded_note: str = "finite-range computation; no asymptotic claim"

    def rows(self) -> list[dict]:
        out = []
        for n, t in enumerate(self.t_seq):
            dv = self.dimvec_seq[n]
            out.append({
                "n": n,
                "t_n": t,
                "top": dv.t if dv else None,
                "rad": dv.j if dv else None,
                "w": self.w_seq[n - 1] if n >= 1 else None,
            })
        return out

    def to_json(self) -> dict:
        return {
            "module": self.module,
            "N": self.N,
            "p": self.p,
            "hilbert_type": list(self.hilbert_type),
            "t": self.t_seq,
            "dimension_vectors": [list(d) if d else None for d in self.dimvec_seq],
            "w": self.w_seq,
            "lengths": self.lengths,
            "truncated": self.truncated,
            "note": self.bounded_note,
        }


def _main_lemma_defect(alg: ShortLocalAlgebra, prev: DimensionVector, cur: DimensionVector) -> int:
    pred = omega_apply(alg.e, alg.a, prev)
    w = cur.t - pred[0]
    if cur.j - pred[1] != -w or w < 0:
        raise ShapeViolation(
            f"dim Omega M = {tuple(cur)} vs omega(dim M) = {pred}: difference is not (w, -w) with w >= 0"
        )
    return w


def _split_blocks(layer: _Layer) -> list[_Layer]:
    """Split a layer into blocks of generators linked through shared F_t coordinates."""
    s, t = layer.top, layer.ambient_rank
    if s == 0:
        return []
    support = layer.xpart.any(axis=2)  # (s, t)
    parent = list(range(s + t))

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    for k, l in zip(*np.nonzero(support)):
        ru, rv = find(int(k)), find(s + int(l))
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, list[int]] = {}
    for k in range(s):
        groups.setdefault(find(k), []).append(k)
    blocks = []
    for gens in groups.values():
        rows = np.nonzero(support[gens].any(axis=0))[0]
        xpart = layer.xpart[np.ix_(gens, rows)] if len(rows) else np.zeros((len(gens), 0, layer.xpart.shape[2]), dtype=np.int64)
        blocks.append(_Layer(len(rows), np.ascontiguousarray(xpart), -1))
    return blocks


def _block_key(layer: _Layer) -> tuple:
    return (layer.xpart.shape, layer.xpart.tobytes())


def betti_sequence(M: ModulePresentation, N: int = DEFAULT_N, dim_cap: int = DEFAULT_DIM_CAP) -> BettiReport:
    """t_n(M) = t(Omega^n M) for n = 0..N, with dimension vectors and Main Lemma defects.

    ``dim_cap`` bounds the free module F_s materialized for any single block;
    when exceeded the sequence stops early and ``truncated`` is set.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    if dim_cap < 1:
        raise ValueError("dim_cap must be positive")
    alg = M.alg
    loewy2 = M.is_loewy_le2()
    report = BettiReport(
        module=M.name or "M", N=N, p=alg.p, hilbert_type=alg.hilbert_type,
        t_seq=[M.rank], dimvec_seq=[M.dimension_vector() if loewy2 else None],
        w_seq=[], lengths=[M.length],
    )
    cache: dict[tuple, tuple] = {}
    blocks: dict[tuple, list] = {}  # key -> [block, multiplicity]
    for n in range(1, N + 1):
        if n == 1:
            if M.rank * alg.dim > dim_cap:
                report.truncated = True
                break
            first = _first_layer(M)
            dv = DimensionVector(first.top, first.rad_dim)
            new_blocks: dict[tuple, list] = {}
            for b in _split_blocks(first):
                new_blocks.setdefault(_block_key(b), [b, 0])[1] += 1
        else:
            if any(b.top * alg.dim > dim_cap for b, _ in blocks.values()):
                report.truncated = True
                break
            top = rad = 0
            new_blocks = {}
            for key, (b, mult) in blocks.items():
                if key not in cache:
                    nxt = _next_layer(alg, b)
                    children: dict[tuple, list] = {}
                    for c in _split_blocks(nxt):
                        children.setdefault(_block_key(c), [c, 0])[1] += 1
                    cache[key] = (nxt.top, nxt.rad_dim, list(children.items()))
                t_b, r_b, children = cache[key]
                top += mult * t_b
                rad += mult * r_b
                for ckey, (c, cm) in children:
                    new_blocks.setdefault(ckey, [c, 0])[1] += mult * cm
            dv = DimensionVector(top, rad)
        blocks = new_blocks
        prev = report.dimvec_seq[-1]
        report.w_seq.append(_main_lemma_defect(alg, prev, dv) if prev is not None else None)
        report.t_seq.append(dv.t)
        report.dimvec_seq.append(dv)
        report.lengths.append(dv.length)
    return report


# -- Main Lemma and alignedness -------------------------------------------------


def _require_loewy2(M: ModulePresentation):
    from .amodule import NotLoewy2

    if not M.is_loewy_le2():
        raise NotLoewy2("module has Loewy length > 2")


def main_lemma_w(M: ModulePresentation) -> int:
    """The defect w with dim(Omega M) = omega(dim M) + (w, -w)."""
    _require_loewy2(M)
    om = syzygy(M)
    w = _main_lemma_defect(M.alg, M.dimension_vector(), om.dimension_vector())
    s = simple_summand_count(om)
    if w > s:
        raise ShapeViolation(f"w = {w} exceeds the simple summand count {s} of Omega M")
    return w


@dataclass
class AlignmentReport:
    aligned: bool
    conditions: dict
    dim: DimensionVector
    dim_omega: DimensionVector

    def to_json(self) -> dict:
        return {
            "aligned": self.aligned,
            "conditions": self.conditions,
            "dim": list(self.dim),
            "dim_omega": list(self.dim_omega),
        }


def is_aligned(M: ModulePresentation) -> AlignmentReport:
    """Evaluate four equivalent alignedness conditions independently and cross-check."""
    _require_loewy2(M)
    alg, t = M.alg, M.rank
    e, a = alg.e, alg.a
    U = M.relations
    JU = radical_of_span(alg, U.basis, t)
    top_omega = U.dim - JU.dim
    j = M.radical_length()
    J2F = coordinate_space(alg, t, square_radical_coords(alg, t))
    conds = {
        "t_omega_eq_e_t_minus_rad": top_omega == e * t - j,
        "rad_omega_eq_a_t": JU.dim == a * t,
        "rad_omega_eq_J2P": JU == J2F,
        "top_map_injective": top_omega == la.subspace_sum(U, J2F).dim - J2F.dim,
    }
    verdicts = set(conds.values())
    if len(verdicts) != 1:
        raise ConditionDisagreement(f"alignedness conditions disagree: {conds}")
    return AlignmentReport(verdicts.pop(), conds, M.dimension_vector(), DimensionVector(top_omega, JU.dim))


@dataclass
class KoszulReport:
    koszul_up_to_N: bool
    N: int
    first_failure: Optional[int]
    actual: list
    predicted: list
    truncated: bool
    note: str = "bounded certification: a true verdict does not prove the module is Koszul"

    def to_json(self) -> dict:
        return {
            "koszul_up_to_N": self.koszul_up_to_N,
            "N": self.N,
            "first_failure": self.first_failure,
            "actual": [list(d) for d in self.actual],
            "predicted": [list(d) for d in self.predicted],
            "truncated": self.truncated,
            "note": self.note,
        }


def is_koszul_up_to(M: ModulePresentation, N: int = DEFAULT_N, dim_cap: int = DEFAULT_DIM_CAP) -> KoszulReport:
    """dim Omega^n M = omega^n dim M for 0 <= n <= N."""
    _require_loewy2(M)
    alg = M.alg
    rep = betti_sequence(M, N, dim_cap)
    actual = rep.dimvec_seq
    predicted = [M.dimension_vector()]
    for _ in range(N):
        predicted.append(omega_apply(alg.e, alg.a, predicted[-1]))
    first = None
    for n, dv in enumerate(actual):
        if tuple(dv) != tuple(predicted[n]):
            first = n
            break
    ok = first is None and not rep.truncated
    return KoszulReport(ok, N, first, actual, [DimensionVector(*v) for v in predicted], rep.truncated)


def all_aligned_up_to(M: ModulePresentation, N: int) -> bool:
    """Omega^n M aligned for 0 <= n < N, via the explicit route."""
    cur = M
    for _ in range(N):
        if not is_aligned(cur).aligned:
            return False
        cur = syzygy(cur)
    return True


# -- growth ----------------------------------------------------------------------


@dataclass
class GrowthEstimate:
    t_seq: list
    root_seq: list  # (n, t_n ** (1/n))
    ratio_seq: list  # (n, t_{n+1} / t_n)
    gamma_low: Optional[float]
    gamma_high: Optional[float]
    rho: float
    dichotomy: tuple  # (rho, small eigenvalue) when real, else (rho,)
    eigenvector_eigenvalue: Optional[float]
    truncated: bool
    note: str = "finite-range evidence only; no limit is asserted"

    def to_json(self) -> dict:
        return {
            "t": self.t_seq,
            "roots": [[n, v] for n, v in self.root_seq],
            "ratios": [[n, v] for n, v in self.ratio_seq],
            "gamma_low": self.gamma_low,
            "gamma_high": self.gamma_high,
            "predicted_rho": self.rho,
            "dichotomy": list(self.dichotomy),
            "eigenvector_eigenvalue": self.eigenvector_eigenvalue,
            "truncated": self.truncated,
            "note": self.note,
        }


def gamma_estimate(M: ModulePresentation, N: int = DEFAULT_N, dim_cap: int = DEFAULT_DIM_CAP,
                   tail: int = 3) -> GrowthEstimate:
    alg = M.alg
    rep = betti_sequence(M, N, dim_cap)
    t = rep.t_seq
    roots = [(n, t[n] ** (1.0 / n)) for n in range(1, len(t))]
    ratios = [(n, t[n + 1] / t[n]) for n in range(len(t) - 1) if t[n] > 0]
    tail_vals = [v for _, v in ratios[-tail:]]
    sd = spectral_data(alg.e, alg.a)
    dich = (sd.rho, sd.small_real) if sd.small_real is not None else (sd.rho,)
    eig = None
    dv = rep.dimvec_seq[0]
    if dv is not None and (dv.t or dv.j):
        img = omega_apply(alg.e, alg.a, dv)
        for lam in sd.real_eigenvalues:
            if math.isclose(img[0], lam * dv.t, abs_tol=1e-9) and math.isclose(img[1], lam * dv.j, abs_tol=1e-9):
                eig = float(lam)
                break
    return GrowthEstimate(
        t_seq=t, root_seq=roots, ratio_seq=ratios,
        gamma_low=min(tail_vals) if tail_vals else None,
        gamma_high=max(tail_vals) if tail_vals else None,
        rho=sd.rho, dichotomy=dich, eigenvector_eigenvalue=eig, truncated=rep.truncated,
    )


@dataclass
class Theorem1Report:
    shift_identity: bool
    additivity: bool
    subadditivity: Optional[bool]
    length_bounds: bool
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(v is not False for v in (self.shift_identity, self.additivity, self.subadditivity, self.length_bounds))


def theorem1_checks(M: ModulePresentation, N: int = 4, other: Optional[ModulePresentation] = None,
                    submodule: Optional[la.Subspace] = None, dim_cap: int = DEFAULT_DIM_CAP) -> Theorem1Report:
    """Finite-range consequences of the growth bounds for local algebras.

    * shift: t_{n+1}(M) = t_n(Omega M)
    * additivity: t_n(M + other) = t_n(M) + t_n(other)  (other defaults to M)
    * subadditivity over 0 -> W -> M -> M/W -> 0 when a submodule W of the
      action realization of M is supplied
    * c t_n <= |Omega^{n+1} M| <= |J| t_n, with c = |J^m| for J of Loewy length m
    """
    from .amodule import action_to_presentation, presentation_to_action, quotient_action, submodule_action

    alg = M.alg
    base = betti_sequence(M, N + 1, dim_cap)
    shifted = betti_sequence(syzygy(M), N, dim_cap)
    k = min(len(shifted.t_seq), len(base.t_seq) - 1)
    shift_ok = base.t_seq[1:k + 1] == shifted.t_seq[:k]

    other = other if other is not None else M
    summed = betti_sequence(direct_sum(M, other), N, dim_cap)
    o = betti_sequence(other, N, dim_cap)
    k2 = min(len(summed.t_seq), len(o.t_seq), len(base.t_seq))
    add_ok = all(summed.t_seq[i] == base.t_seq[i] + o.t_seq[i] for i in range(k2))

    sub_ok = None
    details = {}
    if submodule is not None:
        act = presentation_to_action(M)
        W = action_to_presentation(submodule_action(act, submodule))
        Q = action_to_presentation(quotient_action(act, submodule))
        tw = betti_sequence(W, N, dim_cap).t_seq
        tq = betti_sequence(Q, N, dim_cap).t_seq
        k3 = min(len(tw), len(tq), len(base.t_seq))
        sub_ok = all(base.t_seq[i] <= tw[i] + tq[i] for i in range(k3))
        details["sub_t"] = tw
        details["quotient_t"] = tq

    d = alg.e + alg.a
    c = alg.a if alg.a else alg.e
    bounds_ok = True
    for n in range(len(base.t_seq) - 1):
        if n + 1 >= len(base.lengths):
            break
        length = base.lengths[n + 1]
        tn = base.t_seq[n]
        # the lower bound needs Omega^n M inside J P, i.e. n >= 1
        if length > d * tn or (n >= 1 and length < c * tn):
            bounds_ok = False
    details.update({"t": base.t_seq, "t_omega": shifted.t_seq, "t_sum": summed.t_seq})
    return Theorem1Report(shift_ok, add_ok, sub_ok, bounds_ok, details)
