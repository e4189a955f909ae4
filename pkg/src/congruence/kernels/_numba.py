"""numba-compiled kernels mirroring :mod:`._numpy` one for one."""
from __future__ import annotations

import numpy as np
from numba import njit

MAX_MODULUS = 1 << 46
NAME = "numba"


@njit(cache=True)
def _mulmod(a, b, m):
    if m < 3037000499:
        return (a * b) % m
    r = 0
    for shift in (32, 16, 0):
        r = (r * 65536 + a * ((b >> shift) & 0xFFFF)) % m
    return r


@njit(cache=True)
def _powmod(b, e, m):
    r = 1 % m
    b %= m
    while e:
        if e & 1:
            r = _mulmod(r, b, m)
        b = _mulmod(b, b, m)
        e >>= 1
    return r


@njit(cache=True)
def _powmod_range(n, e, m):
    out = np.empty(n, dtype=np.int64)
    for j in range(1, n + 1):
        out[j - 1] = _powmod(j, e, m)
    return out


def powmod_range(n: int, e: int, m: int) -> np.ndarray:
    return _powmod_range(n, e, m)


@njit(cache=True)
def _sum_powers_mod(n, e, m):
    s = 0
    for j in range(1, n + 1):
        s += _powmod(j, e, m)
        if s >= m:
            s -= m
    return s


def sum_powers_mod(n: int, e: int, m: int) -> int:
    return int(_sum_powers_mod(n, e, m))


@njit(cache=True)
def _factorial_mod(n, m):
    r = 1 % m
    for j in range(2, n + 1):
        r = _mulmod(r, j % m, m)
    return r


def factorial_mod(n: int, m: int) -> int:
    return int(_factorial_mod(n, m))


@njit(cache=True)
def _harmonic_mod(n, e, m, phi):
    # batched inversion: one exponentiation, then prefix products walked backwards
    if n == 0:
        return 0
    pre = np.empty(n + 1, dtype=np.int64)
    pre[0] = 1 % m
    for j in range(1, n + 1):
        pre[j] = _mulmod(pre[j - 1], j % m, m)
    inv_all = _powmod(pre[n], phi - 1, m)
    s = 0
    for j in range(n, 0, -1):
        inv_j = _mulmod(inv_all, pre[j - 1], m)
        inv_all = _mulmod(inv_all, j % m, m)
        s += _powmod(inv_j, e, m)
        if s >= m:
            s -= m
    return s


def harmonic_mod(n: int, e: int, m: int, phi: int) -> int:
    return int(_harmonic_mod(n, e, m, phi))


@njit(cache=True)
def _fermat_digits(p):
    m = p * p * p
    d0 = np.empty(p - 1, dtype=np.int64)
    d1 = np.empty(p - 1, dtype=np.int64)
    for k in range(1, p):
        x = _powmod(k, p - 1, m) - 1
        d0[k - 1] = (x // p) % p
        d1[k - 1] = (x // (p * p)) % p
    return d0, d1


def fermat_digits(p: int) -> tuple[np.ndarray, np.ndarray]:
    return _fermat_digits(p)


@njit(cache=True)
def _power_sums_mod(n, emax, m):
    cur = np.empty(n, dtype=np.int64)
    for j in range(n):
        cur[j] = 1 % m
    out = np.empty(emax + 1, dtype=np.int64)
    for e in range(emax + 1):
        s = 0
        for j in range(n):
            s += cur[j]
            if s >= m:
                s -= m
            cur[j] = _mulmod(cur[j], (j + 1) % m, m)
        out[e] = s
    return out


def power_sums_mod(n: int, emax: int, m: int) -> np.ndarray:
    return _power_sums_mod(n, emax, m)


@njit(cache=True)
def _spf_sieve(n):
    spf = np.arange(n + 1, dtype=np.int64)
    i = 2
    while i * i <= n:
        if spf[i] == i:
            for j in range(i * i, n + 1, i):
                if spf[j] == j:
                    spf[j] = i
        i += 1
    return spf


def spf_sieve(n: int) -> np.ndarray:
    return _spf_sieve(n)


@njit(cache=True)
def _korselt_giuga_scan(limit):
    spf = _spf_sieve(limit)
    carm = np.zeros(limit + 1, dtype=np.bool_)
    giuga = np.zeros(limit + 1, dtype=np.bool_)
    for n in range(4, limit + 1):
        if spf[n] == n:
            continue
        c = True
        g = True
        rest = n
        last = 0
        while rest > 1:
            p = spf[rest]
            if p == last:
                c = False
                g = False
                break
            if (n - 1) % (p - 1) != 0:
                c = False
            if (n // p - 1) % p != 0:
                g = False
            last = p
            rest //= p
        carm[n] = c
        giuga[n] = g
    return carm, giuga


def korselt_giuga_scan(limit: int) -> tuple[np.ndarray, np.ndarray]:
    return _korselt_giuga_scan(limit)


@njit(cache=True)
def _gv_recurrence_mod(m, kmax, mod, fact, inv_fact, inv_small):
    a = np.zeros(kmax + 1, dtype=np.int64)
    a[0] = 1 % mod
    for t in range(1, kmax + 1):
        s = 0
        for j in range(t):
            top = m - j
            low = 2 * t + 1 - 2 * j
            if low > top:
                continue
            c = _mulmod(fact[top], inv_fact[low], mod)
            c = _mulmod(c, inv_fact[top - low], mod)
            s = (s + _mulmod(c, a[j], mod)) % mod
        a[t] = _mulmod((mod - s) % mod, inv_small[m - t], mod)
    return a


def gv_recurrence_mod(m: int, kmax: int, mod: int, fact: np.ndarray, inv_fact: np.ndarray,
                      inv_small: np.ndarray) -> np.ndarray:
    return _gv_recurrence_mod(m, kmax, mod, fact, inv_fact, inv_small)
