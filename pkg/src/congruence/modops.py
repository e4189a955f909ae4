"""Modular sums and products that dispatch to the compiled kernels when the
modulus fits, and to plain Python integers otherwise."""
from __future__ import annotations

import numpy as np

from . import kernels


def _fits(m: int) -> bool:
    return 1 <= m < kernels.MAX_MODULUS


def sum_powers(n: int, e: int, m: int) -> int:
    """sum_{j=1}^{n} j^e mod m."""
    if _fits(m):
        return kernels.sum_powers_mod(n, e, m)
    return sum(pow(j, e, m) for j in range(1, n + 1)) % m


def factorial(n: int, m: int) -> int:
    """n! mod m."""
    if _fits(m):
        return kernels.factorial_mod(n, m)
    r = 1 % m
    for j in range(2, n + 1):
        r = r * j % m
    return r


def harmonic(n: int, e: int, p: int, k: int) -> int:
    """sum_{j=1}^{n} j^{-e} mod p^k, for n < p (every j is a unit)."""
    m = p**k
    if n >= p:
        raise ValueError(f"harmonic sum up to {n} has non-units mod {p}")
    if _fits(m):
        return kernels.harmonic_mod(n, e, m, p ** (k - 1) * (p - 1))
    return sum(pow(pow(j, e, m), -1, m) for j in range(1, n + 1)) % m


def fermat_digits(p: int) -> tuple[np.ndarray, np.ndarray]:
    """Arrays (delta0, delta1) indexed by k-1 for k = 1..p-1."""
    if _fits(p**3):
        return kernels.fermat_digits(p)
    m = p**3
    x = [pow(k, p - 1, m) - 1 for k in range(1, p)]
    return (np.array([v // p % p for v in x], dtype=np.int64),
            np.array([v // (p * p) % p for v in x], dtype=np.int64))


def power_sums(n: int, emax: int, m: int) -> list[int]:
    """[sum_{j<=n} j^e mod m for e = 0..emax]."""
    if _fits(m):
        return [int(v) for v in kernels.power_sums_mod(n, emax, m)]
    cur, out = [1] * n, []
    for _ in range(emax + 1):
        out.append(sum(cur) % m)
        cur = [c * (j + 1) % m for j, c in enumerate(cur)]
    return out
