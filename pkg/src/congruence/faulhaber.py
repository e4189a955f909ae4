"""Sums of powers, Faulhaber coefficients c_i(l), Gessel-Viennot coefficients
A_k^{(m)} and Derby's Pascal-matrix coefficients."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import config, kernels, modops
from .arith import ResidueModPk, binom, det_bareiss
from .bernoulli import bernoulli_exact
from .errors import CapExceeded, IndexOutOfRange, PreconditionViolated

# Exact determinants stay small; larger orders go through the recurrence.
DETERMINANT_LIMIT = 25


def sum_powers_exact(n: int, m: int) -> int:
    """sum_{k=1}^{n} k^m, by direct summation."""
    if n < 0 or m < 0:
        raise PreconditionViolated(f"need n, m >= 0, got n={n}, m={m}")
    return sum(k**m for k in range(1, n + 1))


def sum_powers_mod(p: int, k: int, m: int) -> ResidueModPk:
    """S_{p-1,m} mod p^k via modular exponentiation."""
    if k > 4:
        raise PreconditionViolated(f"power {k} > 4")
    return ResidueModPk(p, k, modops.sum_powers(p - 1, m, p**k))


def gv_matrix(k: int, m: int) -> list[list[int]]:
    """The k x k banded matrix whose determinant gives A_k^{(m)} up to a rational factor."""
    return [[binom(m - k + i, 2 * (i - j) + 3) if j <= i + 1 else 0
             for j in range(1, k + 1)] for i in range(1, k + 1)]


@lru_cache(maxsize=None)
def gessel_viennot_A(k: int, m: int) -> Fraction:
    """A_k^{(m)} = det(gv_matrix) / ((1-m)(2-m)...(k-m)); A_0 = 1."""
    if not 0 <= k <= m - 1:
        raise IndexOutOfRange(f"need 0 <= k <= m-1, got k={k}, m={m}")
    if k == 0:
        return Fraction(1)
    scale = math.prod(i - m for i in range(1, k + 1))
    return det_bareiss(gv_matrix(k, m)) / scale


def gv_sequence(m: int, kmax: int | None = None) -> list[Fraction]:
    """A_0..A_kmax of order m by the recurrence sum_{j<=t} C(m-j, 2t+1-2j) A_j = 0 (t >= 1)."""
    kmax = m - 1 if kmax is None else kmax
    seq = [Fraction(1)]
    for t in range(1, kmax + 1):
        s = sum((binom(m - j, 2 * t + 1 - 2 * j) * seq[j] for j in range(t)), Fraction(0))
        seq.append(-s / (m - t))
    return seq


def gv_sequence_mod(m: int, kmax: int, p: int, power: int) -> list[int]:
    """A_0..A_kmax of order m reduced mod p^power; requires m < p so every divisor is a unit."""
    if m >= p:
        raise PreconditionViolated(f"order {m} must be below p = {p}")
    mod = p**power
    fact = [1] * (m + 1)
    for i in range(1, m + 1):
        fact[i] = fact[i - 1] * i % mod
    inv_fact = [pow(f, -1, mod) for f in fact]
    inv_small = [0] + [pow(i, -1, mod) for i in range(1, m + 1)]
    if mod < kernels.MAX_MODULUS:
        arr = kernels.gv_recurrence_mod(m, kmax, mod, np.array(fact, dtype=np.int64),
                                        np.array(inv_fact, dtype=np.int64),
                                        np.array(inv_small, dtype=np.int64))
        return [int(v) for v in arr]
    a = [1 % mod]
    for t in range(1, kmax + 1):
        s = 0
        for j in range(t):
            top, low = m - j, 2 * t + 1 - 2 * j
            if low <= top:
                s += fact[top] * inv_fact[low] * inv_fact[top - low] * a[j]
        a.append(-s * inv_small[m - t] % mod)
    return a


def _A(k: int, m: int) -> Fraction:
    if k <= DETERMINANT_LIMIT:
        return gessel_viennot_A(k, m)
    return gv_sequence(m, k)[k]


def faulhaber_coeff(i: int, l: int) -> Fraction:
    """c_i(l) = 2^{i+1} A_{l-i}^{(l+1)} / (2l + 2)."""
    if not 1 <= i <= l:
        raise IndexOutOfRange(f"need 1 <= i <= l, got i={i}, l={l}")
    return Fraction(2 ** (i + 1)) * _A(l - i, l + 1) / (2 * l + 2)


@dataclass(frozen=True)
class FaulhaberExpansion:
    """sum_{k<=n} k^{2l+1} = sum_i c_i(l) a^{i+1} with a = n(n+1)/2."""

    odd_power: int
    coefficients: tuple[Fraction, ...]

    @property
    def l(self) -> int:
        return (self.odd_power - 1) // 2

    def evaluate(self, n: int) -> Fraction:
        a = Fraction(n * (n + 1), 2)
        return sum((c * a ** (i + 2) for i, c in enumerate(self.coefficients)), Fraction(0))


def faulhaber_expansion(l: int) -> FaulhaberExpansion:
    if l < 1:
        raise IndexOutOfRange(f"need l >= 1, got {l}")
    return FaulhaberExpansion(2 * l + 1, tuple(faulhaber_coeff(i, l) for i in range(1, l + 1)))


def jacobi_sum(l: int, n: int) -> Fraction:
    """(1/(2l+2)) sum_j A_j^{(l+1)} u^{l+1-j} with u = n(n+1)."""
    u = n * (n + 1)
    return sum((_A(j, l + 1) * u ** (l + 1 - j) for j in range(l + 1)), Fraction(0)) / (2 * l + 2)


def faulhaber_even_sum(l: int, n: int) -> Fraction:
    """Even-power companion: ((n + 1/2)/(2l+1)) * sum_i (i+1) c_i(l) a^i, a = n(n+1)/2."""
    a = Fraction(n * (n + 1), 2)
    inner = sum(((i + 1) * faulhaber_coeff(i, l) * a**i for i in range(1, l + 1)), Fraction(0))
    return (n + Fraction(1, 2)) / (2 * l + 1) * inner


def derby_coefficients(p: int) -> list[Fraction]:
    """d_1..d_{p+1} with sum_{k<p} k^p = sum_i d_i (p-1)^i.

    The row vector d times the Pascal rows 1..p+1 (last 1 dropped) equals
    Pascal row p. Column j only meets rows i > j, so solving from the last
    column backwards is a triangular substitution with one division each.
    """
    cap = config.caps().derby
    if p < 3:
        raise PreconditionViolated(f"need p >= 3, got {p}")
    if p > cap:
        raise CapExceeded(f"p = {p} above derby cap {cap}")
    n = p + 1
    d = [Fraction(0)] * (n + 1)  # d[1..n]
    for j in range(p, -1, -1):
        acc = Fraction(math.comb(p, j))
        for i in range(j + 2, n + 1):
            acc -= d[i] * math.comb(i, j)
        d[j + 1] = acc / math.comb(j + 1, j)
    return d[1:]


def derby_bernoulli_form(p: int) -> list[Fraction]:
    """d_i read off Bernoulli's formula: d_i = C(p+1, i) B_{p+1-i} / (p+1)."""
    return [Fraction(math.comb(p + 1, i)) * bernoulli_exact(p + 1 - i) / (p + 1)
            for i in range(1, p + 2)]
