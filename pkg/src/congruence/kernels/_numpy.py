"""Pure-numpy kernels. Moduli must stay below 2**46 (see ``MAX_MODULUS``)."""
from __future__ import annotations

import numpy as np

MAX_MODULUS = 1 << 46
_DIRECT = 3037000499  # floor(sqrt(2**63 - 1)): products below this modulus fit int64
NAME = "numpy"


def mulmod(a: np.ndarray, b, m: int) -> np.ndarray:
    """Elementwise a*b mod m for 0 <= a, b < m < 2**46 without overflow."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if m < _DIRECT:
        return (a * b) % m
    # split b into 16-bit chunks, most significant first: r*65536 + a*chunk < 2**63
    r = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
    for shift in (32, 16, 0):
        r = (r * 65536 + a * ((b >> shift) & 0xFFFF)) % m
    return r


def powmod_array(base: np.ndarray, e: int, m: int) -> np.ndarray:
    base = np.asarray(base, dtype=np.int64) % m
    result = np.full(base.shape, 1 % m, dtype=np.int64)
    while e:
        if e & 1:
            result = mulmod(result, base, m)
        base = mulmod(base, base, m)
        e >>= 1
    return result


def powmod_range(n: int, e: int, m: int) -> np.ndarray:
    """[j^e mod m for j = 1..n]."""
    return powmod_array(np.arange(1, n + 1, dtype=np.int64), e, m)


def _summod(x: np.ndarray, m: int) -> int:
    # chunked so partial sums stay below 2**63
    total, step = 0, max(1, (1 << 62) // max(m, 1))
    for i in range(0, x.size, step):
        total = (total + int(x[i : i + step].sum())) % m
    return total


def sum_powers_mod(n: int, e: int, m: int) -> int:
    return _summod(powmod_range(n, e, m), m)


def _prodmod(x: np.ndarray, m: int) -> int:
    x = np.asarray(x, dtype=np.int64) % m
    while x.size > 1:
        if x.size & 1:
            x = np.append(x, 1 % m)
        x = mulmod(x[0::2], x[1::2], m)
    return int(x[0]) if x.size else 1 % m


def factorial_mod(n: int, m: int) -> int:
    return _prodmod(np.arange(1, n + 1, dtype=np.int64), m)


def harmonic_mod(n: int, e: int, m: int, phi: int) -> int:
    """sum_{j<=n} j^{-e} mod m, with j^{-1} = j^{phi-1} (every j prime to m, phi = phi(m))."""
    j = np.arange(1, n + 1, dtype=np.int64)
    inv = powmod_array(j, phi - 1, m)
    return _summod(powmod_array(inv, e, m), m)


def fermat_digits(p: int) -> tuple[np.ndarray, np.ndarray]:
    """delta0(k), delta1(k) for k = 1..p-1: k^{p-1} = 1 + p d0 + p^2 d1 mod p^3."""
    m = p**3
    x = powmod_range(p - 1, p - 1, m) - 1
    return (x // p) % p, (x // (p * p)) % p


def power_sums_mod(n: int, emax: int, m: int) -> np.ndarray:
    """out[e] = sum_{j<=n} j^e mod m for e = 0..emax."""
    j = np.arange(1, n + 1, dtype=np.int64) % m
    cur = np.full(n, 1 % m, dtype=np.int64)
    out = np.empty(emax + 1, dtype=np.int64)
    for e in range(emax + 1):
        out[e] = _summod(cur, m)
        cur = mulmod(cur, j, m)
    return out


def spf_sieve(n: int) -> np.ndarray:
    """Smallest prime factor of every integer in [0, n] (0 and 1 map to themselves)."""
    spf = np.arange(n + 1, dtype=np.int64)
    i = 2
    while i * i <= n:
        if spf[i] == i:
            block = spf[i * i :: i]
            mask = block == np.arange(i * i, n + 1, i)
            block[mask] = i
            spf[i * i :: i] = block
        i += 1
    return spf


def korselt_giuga_scan(limit: int) -> tuple[np.ndarray, np.ndarray]:
    """Boolean masks over [0, limit]: Carmichael (Korselt) and Giuga (per-prime form)."""
    spf = spf_sieve(limit)
    n = np.arange(limit + 1, dtype=np.int64)
    composite = (n >= 4) & (spf != n)
    carm = composite.copy()
    giuga = composite.copy()
    rest = np.where(composite, n, 1)
    last = np.zeros_like(n)
    while True:
        live = rest > 1
        if not live.any():
            break
        idx = np.flatnonzero(live)
        p = spf[rest[idx]]
        bad_square = p == last[idx]
        carm[idx[bad_square]] = False
        giuga[idx[bad_square]] = False
        nn = n[idx]
        carm[idx[(nn - 1) % (p - 1) != 0]] = False
        giuga[idx[(nn // p - 1) % p != 0]] = False
        last[idx] = p
        rest[idx] = rest[idx] // p
    return carm, giuga


def gv_recurrence_mod(m: int, kmax: int, mod: int, fact: np.ndarray, inv_fact: np.ndarray,
                      inv_small: np.ndarray) -> np.ndarray:
    """A_0..A_kmax of order m modulo ``mod`` via the binomial recurrence.

    sum_{j=0}^{t} C(m-j, 2t+1-2j) A_j = 0 for t >= 1, A_0 = 1. ``fact``/``inv_fact``
    cover 0..m, ``inv_small[i]`` is i^{-1} mod ``mod``.
    """
    a = np.zeros(kmax + 1, dtype=np.int64)
    a[0] = 1 % mod
    for t in range(1, kmax + 1):
        j = np.arange(t, dtype=np.int64)
        top = m - j
        low = 2 * t + 1 - 2 * j
        ok = low <= top
        c = mulmod(fact[top], inv_fact[np.where(ok, low, 0)], mod)
        c = mulmod(c, inv_fact[np.where(ok, top - low, 0)], mod)
        c = np.where(ok, c, 0)
        s = _summod(mulmod(c, a[:t], mod), mod)
        a[t] = int(mulmod(np.int64((mod - s) % mod), inv_small[m - t], mod))
    return a
