"""The 2x2 matrix omega = [[e, -1], [a, 0]] acting on dimension vectors.

Sequences and matrix powers use Python integers; floats appear only in
eigenvalue display and ratio diagnostics.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt
from typing import NamedTuple, Optional, Sequence


class HypothesisViolated(ValueError):
    pass


def omega_matrix(e: int, a: int) -> list[list[int]]:
    return [[e, -1], [a, 0]]


def omega_apply(e: int, a: int, v: Sequence[int]) -> tuple[int, int]:
    t, j = int(v[0]), int(v[1])
    return (e * t - j, a * t)


def _mul2(x, y):
    return [
        [x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]],
        [x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]],
    ]


def omega_power(e: int, a: int, n: int) -> list[list[int]]:
    if n < 0:
        raise ValueError("n must be >= 0")
    result = [[1, 0], [0, 1]]
    base = omega_matrix(e, a)
    while n:
        if n & 1:
            result = _mul2(result, base)
        base = _mul2(base, base)
        n >>= 1
    return result


def perfect_square_root(n: int) -> Optional[int]:
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


@dataclass(frozen=True)
class SpectralData:
    e: int
    a: int
    discriminant: int
    eigenvalues: tuple  # Fractions when exact, else floats or complex
    rho: float
    rho_exact: Optional[Fraction]
    rho_is_eigenvalue: bool

    @property
    def real_eigenvalues(self) -> list[float]:
        return [float(x) for x in self.eigenvalues if not isinstance(x, complex)]

    @property
    def small_real(self) -> Optional[float]:
        """(e - sqrt(e^2 - 4a)) / 2 when the eigenvalues are real."""
        if self.discriminant < 0:
            return None
        return min(self.real_eigenvalues)

    def eigenvector(self, lam) -> Optional[tuple]:
        """(lam, a) is an eigenvector for any nonzero eigenvalue lam."""
        return None if lam == 0 else (lam, self.a)

    def to_json(self) -> dict:
        def fmt(x):
            if isinstance(x, Fraction):
                return int(x) if x.denominator == 1 else str(x)
            if isinstance(x, complex):
                return [x.real, x.imag]
            return x

        return {
            "e": self.e,
            "a": self.a,
            "discriminant": self.discriminant,
            "eigenvalues": [fmt(x) for x in self.eigenvalues],
            "rho": self.rho,
            "rho_exact": fmt(self.rho_exact) if self.rho_exact is not None else None,
            "rho_is_eigenvalue": self.rho_is_eigenvalue,
        }


def spectral_data(e: int, a: int) -> SpectralData:
    if e < 0 or a < 0:
        raise ValueError("e and a must be non-negative")
    disc = e * e - 4 * a
    root = perfect_square_root(disc)
    if root is not None:
        eig = (Fraction(e + root, 2), Fraction(e - root, 2))
        return SpectralData(e, a, disc, eig, float(eig[0]), eig[0], True)
    if disc > 0:
        s = math.sqrt(disc)
        eig = ((e + s) / 2, (e - s) / 2)
        return SpectralData(e, a, disc, eig, eig[0], None, True)
    s = cmath.sqrt(disc)
    eig = ((e + s) / 2, (e - s) / 2)
    rho_exact = None
    r = perfect_square_root(a)
    if r is not None:
        rho_exact = Fraction(r)
    return SpectralData(e, a, disc, eig, math.sqrt(a), rho_exact, False)


def spectral_radius(e: int, a: int) -> float:
    return spectral_data(e, a).rho


def b_sequence(e: int, a: int, N: int) -> list[int]:
    """b_0..b_N with b_{-1} = 0, b_0 = 1, b_{n+1} = e b_n - a b_{n-1}."""
    if N < 0:
        raise ValueError("N must be >= 0")
    prev, cur = 0, 1
    out = [cur]
    for _ in range(N):
        prev, cur = cur, e * cur - a * prev
        out.append(cur)
    return out


def b_closed_form(e: int, a: int, n: int) -> int:
    """Binomial-sum evaluation of b_n, valid when 4a < e^2."""
    if 4 * a >= e * e:
        raise HypothesisViolated(f"closed form needs 4a < e^2, got e={e}, a={a}")
    d = e * e - 4 * a
    total = sum(comb(n + 1, 2 * j + 1) * d**j * e ** (n - 2 * j) for j in range(n // 2 + 1))
    value = Fraction(total, 2**n)
    if value.denominator != 1:
        raise ArithmeticError(f"closed form gave non-integer {value}")
    return int(value)


def koszul_prediction(e: int, a: int, dimvec: Sequence[int], N: int) -> list[tuple[int, int]]:
    """omega^n applied to dimvec for n = 0..N."""
    out = [(int(dimvec[0]), int(dimvec[1]))]
    for _ in range(N):
        out.append(omega_apply(e, a, out[-1]))
    return out


class GammaPair(NamedTuple):
    small: int
    big: int

    @property
    def chain_holds(self) -> bool:
        """0 < small < e/2 < big < e (only meaningful when small < big)."""
        e = self.small + self.big
        return 0 < self.small and 2 * self.small < e < 2 * self.big and self.big < e


def theorem3_solve(e: int, a: int) -> Optional[GammaPair]:
    """Integers c <= d with c + d = e and c d = a, if they exist."""
    if e < 0 or a < 0:
        raise ValueError("e and a must be non-negative")
    root = perfect_square_root(e * e - 4 * a)
    if root is None:
        return None
    # root has the parity of e, so both halves are integers
    pair = GammaPair((e - root) // 2, (e + root) // 2)
    assert pair.small + pair.big == e and pair.small * pair.big == a
    return pair


def rho_sweep(e: int, a_max: Optional[int] = None) -> list[tuple[int, float]]:
    """(a, rho(omega^e_a)) for a = 0..a_max (default e^2)."""
    a_max = e * e if a_max is None else a_max
    return [(a, spectral_radius(e, a)) for a in range(a_max + 1)]


def theorem3_points(e: int) -> list[tuple[int, int, int]]:
    """(a, small, big) for every a admitting integers 0 < small < big with sum e."""
    out = []
    for small in range(1, (e + 1) // 2):
        big = e - small
        if small < big:
            out.append((small * big, small, big))
    return sorted(out)
