"""Short local algebras given by structure constants.

An algebra of Hilbert type ``(e, a)`` has the basis ``1, x_1..x_e, z_1..z_a``
where the ``x_i`` span a complement of J^2 in J and the ``z_m`` span J^2.
The only nonzero products of radical basis elements are

    x_i * x_j = sum_m c[i, j, m] * z_m

so J^3 = 0 and associativity hold by construction.  Elements are coefficient
vectors in the order (unit, x-part, z-part).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .exactla import DEFAULT_PRIME, PrimeField, matmul, rank


class AlgebraError(ValueError):
    pass


class SpanDeficient(AlgebraError):
    """The products x_i x_j do not span the declared J^2."""


class BadShape(AlgebraError):
    pass


@dataclass(frozen=True, eq=False)
class ShortLocalAlgebra:
    e: int
    a: int
    c: np.ndarray
    field: PrimeField = field(default_factory=PrimeField)
    x_names: tuple = ()
    z_names: tuple = ()

    def __post_init__(self):
        c = np.asarray(self.c, dtype=np.int64)
        if self.e < 0 or self.a < 0:
            raise BadShape("e and a must be non-negative")
        if c.size == 0:
            c = np.zeros((self.e, self.e, self.a), dtype=np.int64)
        if c.shape != (self.e, self.e, self.a):
            raise BadShape(f"structure tensor has shape {c.shape}, expected {(self.e, self.e, self.a)}")
        c = c % self.field.p
        c.flags.writeable = False
        object.__setattr__(self, "c", c)
        r = rank(c.reshape(self.e * self.e, self.a), self.field.p) if self.a else 0
        if r != self.a:
            raise SpanDeficient(
                f"products x_i x_j span a space of dimension {r}, but a = {self.a}"
            )
        xn = tuple(self.x_names) or tuple(f"x{i + 1}" for i in range(self.e))
        zn = tuple(self.z_names) or tuple(f"z{m + 1}" for m in range(self.a))
        if len(xn) != self.e or len(zn) != self.a:
            raise BadShape("name lists do not match (e, a)")
        object.__setattr__(self, "x_names", xn)
        object.__setattr__(self, "z_names", zn)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def dim(self) -> int:
        return 1 + self.e + self.a

    @property
    def hilbert_type(self) -> tuple[int, int]:
        return (self.e, self.a)

    @property
    def x_slice(self) -> slice:
        return slice(1, 1 + self.e)

    @property
    def z_slice(self) -> slice:
        return slice(1 + self.e, self.dim)

    def __eq__(self, other):
        if not isinstance(other, ShortLocalAlgebra):
            return NotImplemented
        return (
            self.hilbert_type == other.hilbert_type
            and self.p == other.p
            and np.array_equal(self.c, other.c)
        )

    def __hash__(self):
        return hash((self.e, self.a, self.p, self.c.tobytes()))

    def __repr__(self):
        return f"ShortLocalAlgebra(e={self.e}, a={self.a}, p={self.p})"

    # -- elements -------------------------------------------------------

    def element(self, unit=0, x=None, z=None) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[0] = unit
        if x is not None:
            v[self.x_slice] = x
        if z is not None:
            v[self.z_slice] = z
        return v % self.p

    def one(self) -> np.ndarray:
        return self.basis_element(0)

    def basis_element(self, k: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[k] = 1
        return v

    def x(self, i: int) -> np.ndarray:
        """Radical generator x_i (0-based)."""
        return self.basis_element(1 + i)

    def z(self, m: int) -> np.ndarray:
        return self.basis_element(1 + self.e + m)

    def in_radical(self, u) -> bool:
        return int(np.asarray(u)[0]) % self.p == 0

    def multiply(self, u, v) -> np.ndarray:
        u = np.asarray(u, dtype=np.int64) % self.p
        v = np.asarray(v, dtype=np.int64) % self.p
        if u.shape != (self.dim,) or v.shape != (self.dim,):
            raise BadShape("element has wrong length")
        out = (u[0] * v + v[0] * u) % self.p
        out[0] = (u[0] * v[0]) % self.p
        if self.a:
            ux, vx = u[self.x_slice], v[self.x_slice]
            out[self.z_slice] += np.einsum("i,j,ijm->m", ux, vx, self.c)
        return out % self.p

    def left_mult_matrix(self, u) -> np.ndarray:
        """Matrix of ``v -> u v`` acting on column coefficient vectors."""
        u = np.asarray(u, dtype=np.int64) % self.p
        n = self.dim
        L = np.eye(n, dtype=np.int64) * u[0]
        L[:, 0] = u
        if self.a:
            # column 1+j gets sum_i u_i c[i, j, :] in the z rows
            L[self.z_slice, self.x_slice] += np.einsum("i,ijm->mj", u[self.x_slice], self.c)
        return L % self.p

    def right_mult_matrix(self, u) -> np.ndarray:
        """Matrix of ``v -> v u``."""
        return self.opposite().left_mult_matrix(u)

    def radical_mult_matrices(self) -> list[np.ndarray]:
        """Left multiplication by x_1..x_e then z_1..z_a."""
        return [self.left_mult_matrix(self.basis_element(k)) for k in range(1, self.dim)]

    # -- structure --------------------------------------------------------

    def opposite(self) -> "ShortLocalAlgebra":
        return ShortLocalAlgebra(
            self.e, self.a, np.transpose(self.c, (1, 0, 2)), self.field,
            self.x_names, self.z_names,
        )

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.c, np.transpose(self.c, (1, 0, 2))))

    def with_field(self, p: int) -> "ShortLocalAlgebra":
        """Same integer structure constants read over another prime field."""
        c = np.asarray(self.c, dtype=np.int64)
        # Constants are stored reduced; recover signed representatives.
        signed = np.where(c > self.p // 2, c - self.p, c)
        return ShortLocalAlgebra(self.e, self.a, signed, PrimeField(p), self.x_names, self.z_names)

    def recomputed_hilbert_type(self) -> tuple[int, int]:
        """(dim J/J^2, dim J^2) recomputed from multiplication matrices."""
        n, p = self.dim, self.p
        rad = [self.left_mult_matrix(self.basis_element(k)) for k in range(1, n)]
        # J = span of radical basis; J^2 = span of products of radical elements.
        j_basis = np.eye(n, dtype=np.int64)[1:]
        prods = [matmul(L, j_basis.T, p).T for L in rad]
        j2 = rank(np.vstack(prods), p) if prods else 0
        return (rank(j_basis, p) - j2, j2)

    def check_j_cubed_zero(self) -> bool:
        rad = self.radical_mult_matrices()
        p = self.p
        for A in rad:
            for B in rad:
                AB = matmul(A, B, p)
                for C in rad:
                    if matmul(AB, C, p).any():
                        return False
        return True

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        products = []
        signed = np.where(self.c > self.p // 2, self.c - self.p, self.c)
        for i in range(self.e):
            for j in range(self.e):
                if signed[i, j].any():
                    products.append({"i": i + 1, "j": j + 1, "z": [int(v) for v in signed[i, j]]})
        return {
            "p": self.p,
            "e": self.e,
            "a": self.a,
            "x_names": list(self.x_names),
            "z_names": list(self.z_names),
            "products": products,
        }


def new_algebra(e: int, a: int, c, field: Optional[PrimeField] = None, x_names=(), z_names=()) -> ShortLocalAlgebra:
    return ShortLocalAlgebra(e, a, np.asarray(c, dtype=np.int64) if c is not None else np.zeros((e, e, a)),
                             field or PrimeField(), tuple(x_names), tuple(z_names))


def algebra_from_products(e: int, a: int, products: dict, p: int = DEFAULT_PRIME,
                          x_names: Sequence[str] = (), z_names: Sequence[str] = ()) -> ShortLocalAlgebra:
    """Build from ``{(i, j): z_coefficients}`` with 0-based indices; unlisted products vanish."""
    c = np.zeros((e, e, a), dtype=np.int64)
    for (i, j), zs in products.items():
        if not (0 <= i < e and 0 <= j < e):
            raise BadShape(f"product index {(i, j)} out of range")
        if len(zs) != a:
            raise BadShape(f"product {(i, j)} has {len(zs)} coefficients, expected {a}")
        c[i, j] = zs
    return ShortLocalAlgebra(e, a, c, PrimeField(p), tuple(x_names), tuple(z_names))


def algebra_from_json(obj: dict, p: Optional[int] = None) -> ShortLocalAlgebra:
    """Parse the JSON algebra format (1-based product indices)."""
    try:
        e, a = int(obj["e"]), int(obj["a"])
    except (KeyError, TypeError, ValueError) as exc:
        raise BadShape(f"algebra file needs integer 'e' and 'a': {exc}") from None
    prime = p if p is not None else int(obj.get("p", DEFAULT_PRIME))
    products = {}
    for entry in obj.get("products", []):
        i, j = int(entry["i"]) - 1, int(entry["j"]) - 1
        products[(i, j)] = [int(v) for v in entry["z"]]
    return algebra_from_products(e, a, products, prime, obj.get("x_names", ()), obj.get("z_names", ()))


def load_algebra(path: str, p: Optional[int] = None) -> ShortLocalAlgebra:
    with open(path) as fh:
        return algebra_from_json(json.load(fh), p)
