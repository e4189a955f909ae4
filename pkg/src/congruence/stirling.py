"""Unsigned Stirling numbers of the first kind, generalized harmonic numbers,
and their congruences modulo p^2 and p^3.

Index translation lives here and nowhere else: A_r = [p over p-r], i.e. A_r is
the r-th elementary symmetric function of 1, 2, ..., p-1.
"""
from __future__ import annotations

import math
import threading
from fractions import Fraction

from . import config, modops
from .arith import ResidueModPk, is_prime, rational_mod_pk, vp_rational
from .bernoulli import bernoulli_exact, bernoulli_mod, pB_residue
from .errors import (
    CapExceeded,
    IndexUnsupported,
    MethodUnsupported,
    PreconditionViolated,
    PrecisionUnsupported,
)
from .wilson import wilson_digits

STIRLING_METHODS = ("exact", "theorem3", "corollary2", "eq27_30", "glaisher_result2")
HARMONIC_METHODS = ("exact", "glaisher_thm4", "glaisher_thm5", "corollary3", "corollary4",
                    "corollary5", "sun_cor51", "modular")


class StirlingRows:
    """Rows [n over 0..n], grown on demand; extension is serialized by a lock."""

    def __init__(self) -> None:
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def row(self, n: int) -> tuple[int, ...]:
        cap = config.caps().stirling
        if n > cap:
            raise CapExceeded(f"n = {n} above stirling cap {cap}")
        rows = self._rows
        if n < len(rows):
            return rows[n]
        with self._lock:
            rows = list(self._rows)
            while len(rows) <= n:
                prev, i = rows[-1], len(rows) - 1
                new = [0] * (i + 2)
                for s, v in enumerate(prev):
                    new[s + 1] += v
                    new[s] += i * v
                rows.append(tuple(new))
            self._rows = rows
        return rows[n]


ROWS = StirlingRows()


def stirling_row(n: int) -> tuple[int, ...]:
    return ROWS.row(n)


def stirling_first(n: int, s: int) -> int:
    if not 0 <= s <= n:
        raise PreconditionViolated(f"need 0 <= s <= n, got n={n}, s={s}")
    return stirling_row(n)[s]


def glaisher_A(p: int, r: int) -> int:
    """A_r = [p over p-r]."""
    return stirling_first(p, p - r)


def harmonic_exact(n: int, m: int) -> Fraction:
    """H_{n,m} = sum_{j<=n} j^{-m}, over the common denominator lcm(1..n)^m."""
    if n < 1 or m < 1:
        raise PreconditionViolated(f"need n, m >= 1, got n={n}, m={m}")
    if n > config.caps().stirling:
        raise CapExceeded(f"n = {n} above cap {config.caps().stirling}")
    den = math.lcm(*range(1, n + 1)) ** m
    return Fraction(sum(den // j**m for j in range(1, n + 1)), den)


def _prime(p: int, least: int = 3) -> None:
    if p < least or not is_prime(p):
        raise PreconditionViolated(f"need a prime >= {least}, got {p}")


def _res(x, p: int, k: int) -> ResidueModPk:
    return rational_mod_pk(Fraction(x), p, k)


def _pB(n: int, p: int, k: int) -> ResidueModPk:
    """p * B_n mod p^k for p-integral B_n (only B_n mod p^{k-1} is needed)."""
    if k == 1:
        return ResidueModPk(p, 1, 0)
    if n <= config.caps().bernoulli_exact:
        return _res(p * bernoulli_exact(n), p, k)
    if k == 2:
        return ResidueModPk(p, 2, p * bernoulli_mod(n, p).value)
    raise PrecisionUnsupported(f"p B_{n} mod {p}^{k} needs the exact table")


# ---------------------------------------------------------------- Stirling routes


def stirling_mod(p: int, k: int, method: str, power: int) -> ResidueModPk:
    """[p over k] mod p^power by the chosen route."""
    _prime(p)
    if method not in STIRLING_METHODS:
        raise MethodUnsupported(f"unknown method {method!r}")
    if not 0 <= k <= p:
        raise IndexUnsupported(f"need 0 <= k <= p, got {k}")
    if method == "exact":
        return ResidueModPk(p, power, stirling_first(p, k))
    if method == "eq27_30":
        if power != 3:
            raise PrecisionUnsupported("eq27_30 is a mod p^3 route")
        return _stirling_p3(p, p - k)
    if power != 2:
        raise PrecisionUnsupported(f"{method} is a mod p^2 route")
    if method == "theorem3":
        if not 2 <= k <= p - 1:
            raise IndexUnsupported(f"theorem3 needs 2 <= k <= p-1, got {k}")
        s = modops.sum_powers(p - 1, p - k, p * p)
        h = modops.harmonic(p - 1, k - 1, p, 2)
        return ResidueModPk(p, 2, s - h)
    if method == "corollary2":
        return _corollary2(p, k)
    return _glaisher_result2(p, p - k)


def _corollary2(p: int, k: int) -> ResidueModPk:
    if k == 1:
        return pB_residue(1, p, 2) - p
    if k == p:
        return ResidueModPk(p, 2, 1)
    if k % 2 == 0:
        if k - 1 <= p - 4:
            return ResidueModPk(p, 2, 0)
        if k - 1 == p - 2:
            return _res(Fraction(-p, 2), p, 2)
        raise IndexUnsupported(f"even index {k} not covered")
    if 3 <= k < p:
        return _pB(p - k, p, 2) * _res(Fraction(1, k), p, 2)
    raise IndexUnsupported(f"index {k} not covered")


def _glaisher_result2(p: int, r: int) -> ResidueModPk:
    """A_r mod p^2 from A_1/p = -1/2, A_odd/p = 0, A_{2j}/p = -B_{2j}/(2j), all mod p."""
    if not 1 <= r <= p - 2:
        raise IndexUnsupported(f"Glaisher's A_r rows need 1 <= r <= p-2, got {r}")
    if r == 1:
        q = _res(Fraction(-1, 2), p, 1)
    elif r % 2:
        q = ResidueModPk(p, 1, 0)
    else:
        q = -bernoulli_mod(r, p) * _res(Fraction(1, r), p, 1)
    return ResidueModPk(p, 2, p * q.value)


def _stirling_p3(p: int, r: int) -> ResidueModPk:
    """A_r mod p^3 from the four displayed formulas (r = A-index)."""
    if p < 5:
        raise IndexUnsupported("the mod p^3 formulas need p >= 5")
    B = bernoulli_exact
    p2 = p * p
    if r == 1:
        return _res(Fraction(p * (p - 1), 2), p, 3)
    if r == 2:
        return _res(Fraction(1, 2) * (Fraction(-p, 6) + Fraction(3 * p2, 4)), p, 3)
    if r % 2 == 1:
        j = (r - 1) // 2
        if not 1 <= j <= (p - 3) // 2:
            raise IndexUnsupported(f"odd A-index {r} outside 3..p-2")
        return _res(Fraction(p2, 2) * Fraction(2 * j + 1, 2 * j) * B(2 * j), p, 3)
    j = r // 2
    if not 2 <= j <= (p - 1) // 2:
        raise IndexUnsupported(f"even A-index {r} outside 4..p-1")
    conv = sum((B(2 * i) * B(2 * j - 2 * i) / (2 * i) for i in range(1, j)), Fraction(0))
    return _res(-Fraction(1, 2 * j) * (p * B(2 * j) - p2 * conv), p, 3)


def stirling_p3_terms(p: int, r: int) -> dict[str, str]:
    """Forensic pieces of the mod p^3 route for A-index r."""
    j = r // 2
    out = {"A_index": str(r)}
    if r % 2 == 0 and j >= 2:
        conv = sum((bernoulli_exact(2 * i) * bernoulli_exact(2 * j - 2 * i) / (2 * i)
                    for i in range(1, j)), Fraction(0))
        out["convolution"] = str(conv)
    return out


# ---------------------------------------------------------------- harmonic routes


def harmonic_mod(p: int, m: int, method: str, power: int) -> ResidueModPk:
    """H_{p-1,m} mod p^power by the chosen route."""
    _prime(p)
    if method not in HARMONIC_METHODS:
        raise MethodUnsupported(f"unknown method {method!r}")
    if m < 1:
        raise PreconditionViolated(f"order m must be >= 1, got {m}")
    if method == "exact":
        return _res(harmonic_exact(p - 1, m), p, power)
    if method == "modular":
        return ResidueModPk(p, power, modops.harmonic(p - 1, m, p, power))
    row_power = harmonic_row_power(p, m, method)
    if power > row_power:
        raise PreconditionViolated(f"{method} at m={m} only holds mod p^{row_power}")
    return _harmonic_route(p, m, method).reduce(power)


def harmonic_row_power(p: int, m: int, method: str) -> int:
    """Modulus power at which the cited statement asserts the row."""
    if method == "glaisher_thm4":
        if m == p - 1:
            return 2
        if m == p - 2:
            return 3
        return 3 if m % 2 else 2
    if method == "glaisher_thm5":
        return 3 if m % 2 else 2
    return 2


def _harmonic_route(p: int, m: int, method: str) -> ResidueModPk:
    if method == "glaisher_thm4":
        if p < 7:
            raise PreconditionViolated("Glaisher's rows need p >= 7")
        if m == p - 1:
            J = wilson_digits(p).J
            return ResidueModPk(p, 2, -1 - (J - 1) * p)
        if m == p - 2:
            J = wilson_digits(p).J
            return _res(-p - (J - Fraction(3, 2)) * p * p, p, 3)
        if not 1 <= m <= p - 3:
            raise PreconditionViolated(f"need 1 <= m <= p-1, got {m}")
        k = harmonic_row_power(p, m, method)
        return ResidueModPk(p, k, (-1) ** m * m * glaisher_A(p, p - 1 - m))
    if method == "glaisher_thm5":
        if p < m + 3:
            raise PreconditionViolated(f"need p >= m + 3, got p={p}, m={m}")
        if m % 2 == 0:
            return _pB(p - 1 - m, p, 2) * _res(Fraction(m, m + 1), p, 2)
        b = bernoulli_mod(p - 2 - m, p).value
        coef = _res(-Fraction(m * (m + 1), 2 * (m + 2)), p, 3)
        return coef * ResidueModPk(p, 3, p * p * b)
    if method == "corollary4":
        if m % 2 == 0 or m > p - 2:
            raise PreconditionViolated(f"need odd m <= p-2, got {m}")
        return ResidueModPk(p, 2, 0)
    if not 1 <= m <= p - 2:
        raise PreconditionViolated(f"need 1 <= m <= p-2, got {m}")
    k = p - 1 - m
    factor = _res(1 + Fraction((-1) ** k, k), p, 2)
    if method == "corollary3":
        return factor * ResidueModPk(p, 2, modops.sum_powers(p - 1, k, p * p))
    if method == "corollary5":
        if k == 1:
            return factor * _res(Fraction(p, 2), p, 2)
        return factor * _pB(k, p, 2)
    # sun_cor51: H_{p-1,k-1} = ((k-1)/k) p B_{p-k} with k - 1 = m, so B_{p-1-m} needs m <= p-3
    if m > p - 3:
        raise PreconditionViolated(f"sun_cor51 needs m <= p-3, got {m}")
    return _res(Fraction(m, m + 1), p, 2) * _pB(p - 1 - m, p, 2)


# ---------------------------------------------------------------- assorted claims


def newton_sides(p: int) -> tuple[list[int], list[Fraction]]:
    """A_1..A_{p-1} from the Stirling row against Newton's recursion in the power sums
    A_k = ((-1)^{k-1}/k)(S_k + sum_{r<k} (-1)^r A_r S_{k-r}), exact over the rationals."""
    S = [sum(j**e for j in range(1, p)) for e in range(p)]
    rec: list[Fraction] = [Fraction(1)]
    for k in range(1, p):
        acc = S[k] + sum((-1) ** r * rec[r] * S[k - r] for r in range(1, k))
        rec.append(Fraction((-1) ** (k - 1), k) * acc)
    return [glaisher_A(p, k) for k in range(1, p)], rec[1:]


def newton_identity_holds(p: int) -> bool:
    lhs, rhs = newton_sides(p)
    return lhs == rhs


def sun_eq11_sides(p: int, k: int) -> tuple[ResidueModPk, ResidueModPk]:
    """A_k against ((-1)^{k-1}/k) S_k, mod p^2."""
    s = ResidueModPk(p, 2, modops.sum_powers(p - 1, k, p * p))
    return ResidueModPk(p, 2, glaisher_A(p, k)), s * _res(Fraction((-1) ** (k - 1), k), p, 2)


def sun_eq25_sides(p: int, k: int) -> tuple[ResidueModPk, ResidueModPk]:
    """A_k against ((-1)^{k-1}/k) p B_k, mod p^2 (B_1 = +1/2)."""
    pb = _res(Fraction(p, 2), p, 2) if k == 1 else _pB(k, p, 2)
    return ResidueModPk(p, 2, glaisher_A(p, k)), pb * _res(Fraction((-1) ** (k - 1), k), p, 2)


def result3_sides(p: int, r: int) -> tuple[ResidueModPk, ResidueModPk]:
    """A_r against (p(p-r)/2) A_{r-1}, mod p^3, odd r in 3..p-2."""
    return (ResidueModPk(p, 3, glaisher_A(p, r)),
            _res(Fraction(p * (p - r), 2) * glaisher_A(p, r - 1), p, 3))


def result4_sides(p: int, r: int) -> tuple[ResidueModPk, ResidueModPk]:
    """A_r against (p^2 r / (2(r-1))) B_{r-1}, mod p^3, odd r in 3..p-2."""
    return (ResidueModPk(p, 3, glaisher_A(p, r)),
            _res(Fraction(p * p * r, 2 * (r - 1)) * bernoulli_exact(r - 1), p, 3))


def eq23_sides(p: int, r: int) -> tuple[ResidueModPk, ResidueModPk]:
    """A_{p-1-r} against (p^2 (r+1)/(2(r+2))) B_{p-r-2}, mod p^3, odd r in 1..p-4."""
    return (ResidueModPk(p, 3, glaisher_A(p, p - 1 - r)),
            _res(Fraction(p * p * (r + 1), 2 * (r + 2)) * bernoulli_exact(p - r - 2), p, 3))


def eq58_59_sides(p: int, k: int) -> tuple[ResidueModPk, ResidueModPk]:
    """[p over k] against the signed difference S_{p-1,p-k} - H_{p-1,k-1}, mod p^2.

    Odd k keeps the sign, even k flips it; 2 <= k <= p-1.
    """
    if not 2 <= k <= p - 1:
        raise IndexUnsupported(f"need 2 <= k <= p-1, got {k}")
    s = modops.sum_powers(p - 1, p - k, p * p)
    h = modops.harmonic(p - 1, k - 1, p, 2)
    sign = 1 if k % 2 else -1
    return ResidueModPk(p, 2, stirling_first(p, k)), ResidueModPk(p, 2, sign * (s - h))


def bayat_holds(p: int, m: int) -> bool:
    """v_p(H_{p-1,m}) >= 1 for even m, >= 2 for odd m (p >= m + 3)."""
    v = vp_rational(harmonic_exact(p - 1, m), p)
    return v >= (2 if m % 2 else 1)


def wolstenholme_binomial_sides(p: int) -> tuple[ResidueModPk, ResidueModPk]:
    return ResidueModPk(p, 3, math.comb(2 * p - 1, p - 1)), ResidueModPk(p, 3, 1)


def wolstenholme_quotient_sides(p: int) -> tuple[ResidueModPk, ResidueModPk]:
    """W_p = (C(2p-1, p-1) - 1)/p^3 against -(2/3) B_{p-3}, mod p."""
    w = (math.comb(2 * p - 1, p - 1) - 1) // p**3
    return ResidueModPk(p, 1, w), bernoulli_mod(p - 3, p) * _res(Fraction(-2, 3), p, 1)


def is_wolstenholme_prime(p: int) -> bool:
    """H_{p-1,1} = 0 mod p^3, by the O(p) modular route."""
    _prime(p, 5)
    return modops.harmonic(p - 1, 1, p, 3) == 0


def wolstenholme_primes_upto(n: int) -> list[int]:
    from .arith import primes_between

    return [p for p in primes_between(5, n) if is_wolstenholme_prime(p)]


def wilson_theorem_j_sides(p: int) -> tuple[ResidueModPk, ResidueModPk]:
    """J from the factorial against -1 + B_{p-1} + 1/p, mod p."""
    return (ResidueModPk(p, 1, wilson_digits(p).J),
            _res(-1 + bernoulli_exact(p - 1) + Fraction(1, p), p, 1))
