"""Dense exact linear algebra over a prime field GF(p).

Matrices are numpy ``int64`` arrays with entries in ``[0, p)``.  Row
reduction picks the first nonzero entry of each column as pivot, so every
result is a deterministic function of the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import isqrt
from typing import Iterable, Optional, Sequence

import numpy as np

DEFAULT_PRIME = 32003
MAX_PRIME = 2**31 - 1

_INT64_HEADROOM = 2**62


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field GF(p) for a prime ``p < 2**31``."""

    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if not isinstance(self.p, (int, np.integer)) or not is_prime(int(self.p)):
            raise ValueError(f"modulus {self.p!r} is not a prime")
        if self.p > MAX_PRIME:
            raise ValueError(f"modulus {self.p} exceeds {MAX_PRIME}")
        object.__setattr__(self, "p", int(self.p))

    def inv(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(x, self.p - 2, self.p)

    def mat(self, entries) -> np.ndarray:
        a = np.array(entries, dtype=np.int64)
        if a.ndim == 1:
            a = a.reshape(1, -1) if a.size else a.reshape(0, 0)
        return a % self.p

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        return np.zeros((rows, cols), dtype=np.int64)

    def eye(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)


def _field_p(p) -> int:
    return p.p if isinstance(p, PrimeField) else int(p)


def matmul(a: np.ndarray, b: np.ndarray, p) -> np.ndarray:
    """Product ``a @ b`` reduced mod p, chunked so int64 never overflows."""
    p = _field_p(p)
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    inner = a.shape[-1]
    step = max(1, (2**63 - 1) // max(1, (p - 1) ** 2) - 1)
    if inner <= step:
        return (a @ b) % p
    out = np.zeros(a.shape[:-1] + b.shape[1:], dtype=np.int64)
    for s in range(0, inner, step):
        out = (out + a[..., s:s + step] @ b[s:s + step]) % p
    return out


def _eliminate(a: np.ndarray, p: int, reduced: bool) -> tuple[np.ndarray, list[int]]:
    # In-place Gauss-Jordan on a copy.  Updates are applied lazily: entries are
    # only reduced mod p when read as pivot column / pivot row, or when the
    # accumulated magnitude bound approaches int64 range.
    a = np.array(a, dtype=np.int64) % p
    rows, cols = a.shape
    budget = max(1, _INT64_HEADROOM // max(1, (p - 1) ** 2) - 1)
    pending = 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        col = a[r:, c] % p
        a[r:, c] = col
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] %= p
        a[r] = (a[r] * pow(int(a[r, c]), p - 2, p)) % p
        below = r + np.flatnonzero(a[r:, c] % p)
        below = below[below != r]
        if reduced and r:
            above = np.flatnonzero(a[:r, c] % p)
            targets = np.concatenate([above, below])
        else:
            targets = below
        if targets.size:
            f = a[targets, c] % p
            a[targets] -= f[:, None] * a[r][None, :]
            pending += 1
            if pending >= budget:
                a %= p
                pending = 0
        pivots.append(c)
        r += 1
    a %= p
    return a, pivots


def rref(m, p=DEFAULT_PRIME) -> tuple[np.ndarray, int, list[int]]:
    """Canonical reduced row-echelon form.

    Returns ``(R, rank, pivot_cols)`` where ``R`` has the same shape as ``m``
    with the zero rows at the bottom.
    """
    p = _field_p(p)
    m = np.asarray(m, dtype=np.int64)
    if m.ndim != 2:
        raise ValueError("rref expects a 2-d matrix")
    if m.size == 0:
        return m.copy(), 0, []
    r, piv = _eliminate(m, p, reduced=True)
    return r, len(piv), piv


def rank(m, p=DEFAULT_PRIME) -> int:
    p = _field_p(p)
    m = np.asarray(m, dtype=np.int64)
    if m.size == 0:
        return 0
    # Fewer rows means fewer pivots to chase.
    if m.shape[0] > m.shape[1]:
        m = m.T
    return len(_eliminate(m, p, reduced=False)[1])


def _kernel_rows(m: np.ndarray, p: int) -> np.ndarray:
    """Basis (not canonicalized) of the right kernel, one vector per free column."""
    rows, cols = m.shape
    if m.size == 0:
        return np.eye(cols, dtype=np.int64)
    r, piv = _eliminate(m, p, reduced=True)
    free = [c for c in range(cols) if c not in set(piv)]
    out = np.zeros((len(free), cols), dtype=np.int64)
    if not free:
        return out
    free_arr = np.array(free)
    out[np.arange(len(free)), free_arr] = 1
    if piv:
        # v[piv_k] = -R[k, f]
        out[:, piv] = (-r[: len(piv)][:, free_arr].T) % p
    return out


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of GF(p)^n stored by its canonical RREF basis (rows)."""

    ambient_dim: int
    basis: np.ndarray
    p: int = DEFAULT_PRIME

    @property
    def dim(self) -> int:
        return int(self.basis.shape[0])

    @cached_property
    def pivots(self) -> list[int]:
        return [int(np.flatnonzero(row)[0]) for row in self.basis]

    def contains(self, v) -> bool:
        v = np.asarray(v, dtype=np.int64).reshape(-1) % self.p
        if v.shape[0] != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        if self.dim == 0:
            return not v.any()
        # Reducing by an RREF basis: coefficient of row k is v[pivot_k].
        coeffs = v[self.pivots]
        return not ((v - coeffs @ self.basis) % self.p).any()

    def reduce(self, vectors) -> np.ndarray:
        """Normal form of each row modulo this subspace (pivot coordinates zeroed)."""
        v = np.asarray(vectors, dtype=np.int64) % self.p
        if self.dim == 0:
            return v
        return (v - matmul(v[:, self.pivots], self.basis, self.p)) % self.p

    def complement_coords(self) -> list[int]:
        """Non-pivot coordinates; their unit vectors span a complement."""
        piv = set(self.pivots)
        return [c for c in range(self.ambient_dim) if c not in piv]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.p == other.p
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.p, self.basis.tobytes()))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, p={self.p})"


def span(vectors, p=DEFAULT_PRIME, ambient_dim: Optional[int] = None) -> Subspace:
    p = _field_p(p)
    v = np.asarray(vectors, dtype=np.int64)
    if v.ndim == 1:
        v = v.reshape(1, -1) if v.size else v.reshape(0, ambient_dim or 0)
    if v.shape[0] == 0:
        n = ambient_dim if ambient_dim is not None else v.shape[1]
        return Subspace(n, np.zeros((0, n), dtype=np.int64), p)
    if ambient_dim is not None and v.shape[1] != ambient_dim:
        raise ValueError("ambient dimension mismatch")
    r, k, _ = rref(v, p)
    basis = r[:k].copy()
    basis.flags.writeable = False
    return Subspace(v.shape[1], basis, p)


def zero_space(n: int, p=DEFAULT_PRIME) -> Subspace:
    return span(np.zeros((0, n), dtype=np.int64), p, n)


def full_space(n: int, p=DEFAULT_PRIME) -> Subspace:
    return span(np.eye(n, dtype=np.int64), p, n)


def _check_compatible(a: Subspace, b: Subspace):
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(f"ambient dimension mismatch: {a.ambient_dim} vs {b.ambient_dim}")
    if a.p != b.p:
        raise ValueError("subspaces over different fields")


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    return span(np.vstack([a.basis, b.basis]), a.p, a.ambient_dim)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    p = a.p
    if a.dim == 0 or b.dim == 0:
        return zero_space(a.ambient_dim, p)
    # alpha*A + beta*B = 0  =>  alpha*A lies in both.
    stacked = np.vstack([a.basis, b.basis])
    left = _kernel_rows(stacked.T % p, p)
    return span(matmul(left[:, : a.dim], a.basis, p), p, a.ambient_dim)


def kernel_basis(m, p=DEFAULT_PRIME) -> Subspace:
    """Canonical basis of the right kernel ``{v : m v = 0}``."""
    p = _field_p(p)
    m = np.asarray(m, dtype=np.int64) % p
    return span(_kernel_rows(m, p), p, m.shape[1])


def image(m, p=DEFAULT_PRIME) -> Subspace:
    """Column space of ``m`` as a subspace of GF(p)^rows."""
    p = _field_p(p)
    m = np.asarray(m, dtype=np.int64)
    return span(m.T, p, m.shape[0])


def solve(m, rhs: Sequence[int], p=DEFAULT_PRIME) -> Optional[np.ndarray]:
    """One solution of ``m x = rhs`` with free variables set to 0, or None."""
    p = _field_p(p)
    m = np.asarray(m, dtype=np.int64) % p
    rhs = np.asarray(rhs, dtype=np.int64).reshape(-1) % p
    rows, cols = m.shape
    if rhs.shape[0] != rows:
        raise ValueError("right-hand side has wrong length")
    aug = np.hstack([m, rhs.reshape(-1, 1)])
    r, k, piv = rref(aug, p)
    if piv and piv[-1] == cols:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for i, c in enumerate(piv):
        x[c] = r[i, cols]
    return x


def independent_rows(m, p=DEFAULT_PRIME, modulo: Optional[Subspace] = None) -> list[int]:
    """Indices of a greedy (first-come) maximal set of rows independent modulo a subspace."""
    p = _field_p(p)
    m = np.asarray(m, dtype=np.int64) % p
    if m.shape[0] == 0:
        return []
    base = modulo.basis if modulo is not None else np.zeros((0, m.shape[1]), dtype=np.int64)
    # Row-reduce [m^T] with the subspace basis first: a row is picked iff it
    # raises the rank.  Done via elimination on the transposed block so that
    # pivot columns index the rows.
    stacked = np.vstack([base, m]).T
    _, piv = _eliminate(stacked, p, reduced=False)
    k = base.shape[0]
    return [c - k for c in piv if c >= k]


def stack(rows: Iterable[np.ndarray], cols: int) -> np.ndarray:
    rows = list(rows)
    if not rows:
        return np.zeros((0, cols), dtype=np.int64)
    return np.vstack(rows).astype(np.int64)
