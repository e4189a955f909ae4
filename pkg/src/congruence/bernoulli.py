"""Bernoulli numbers (convention B_1 = +1/2), exact and modulo primes.

Exact values come from the recurrence sum_{j=0}^{n} C(n+1, j) B_j = n + 1 and are
memoized in memory and in a line-oriented disk cache. Residues for large
indices go through power sums instead:

* S_{p-1,m} = p B_m mod p^2 for even 2 <= m <= p-3, so B_m = S/p mod p;
* S_{p-1,m} = p B_m mod p^3 when p-1 | m, m >= 4 and p >= 5 (every other term
  of Bernoulli's formula carries p^3 or a vanishing odd-index B).
"""
from __future__ import annotations

import logging
import math
import os
import tempfile
import threading
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import config, modops
from .arith import (
    PadicValue,
    ResidueModPk,
    binom,
    is_prime,
    padic_of_rational,
    primes_upto,
    rational_mod_pk,
    vp,
)
from .errors import (
    IndexOutOfRange,
    PrecisionUnsupported,
    PreconditionViolated,
    RangeExceeded,
)

log = logging.getLogger(__name__)


class BernoulliTable:
    """Growable table of exact B_0..B_maxIndex backed by an optional cache file.

    Readers never block each other; extension and persistence hold ``_lock``.
    """

    def __init__(self, path: Path | None = None) -> None:
        self._values: list[Fraction] = [Fraction(1), Fraction(1, 2)]
        self._lock = threading.Lock()
        self._path = path
        self._loaded = False

    @property
    def max_index(self) -> int:
        return len(self._values) - 1

    @property
    def path(self) -> Path:
        return self._path or config.cache_path()

    def get(self, n: int) -> Fraction:
        if n < 0:
            raise IndexOutOfRange(f"Bernoulli index must be >= 0, got {n}")
        values = self._values
        if n < len(values):
            return values[n]
        self.extend(n)
        return self._values[n]

    def extend(self, n: int) -> None:
        with self._lock:
            if not self._loaded:
                self._load()
            if n < len(self._values):
                return
            values = list(self._values)
            _extend(values, n)
            self._values = values
            self._save()

    def _load(self) -> None:
        self._loaded = True
        path = self.path
        try:
            text = path.read_text()
        except OSError:
            return
        values: list[Fraction] = []
        try:
            for expected, line in enumerate(text.splitlines()):
                idx, frac = line.split()
                if int(idx) != expected:
                    raise ValueError(f"index {idx} out of sequence")
                values.append(Fraction(frac))
        except ValueError as exc:
            log.warning("ignoring malformed Bernoulli cache %s: %s", path, exc)
            return
        if len(values) >= 2 and values[1] == Fraction(1, 2) and len(values) > len(self._values):
            self._values = values

    def _save(self) -> None:
        path = self.path
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".bernoulli.", suffix=".tmp")
            with os.fdopen(fd, "w") as fh:
                for i, b in enumerate(self._values):
                    fh.write(f"{i} {b.numerator}/{b.denominator}\n")
            os.replace(tmp, path)
        except OSError as exc:
            log.warning("could not write Bernoulli cache %s: %s", path, exc)

    def clear_memory(self) -> None:
        with self._lock:
            self._values = [Fraction(1), Fraction(1, 2)]
            self._loaded = False


def _extend(values: list[Fraction], n: int) -> None:
    """Append B_k for k = len(values)..n using integer arithmetic over a common denominator."""
    for k in range(len(values), n + 1):
        if k % 2 == 1:
            values.append(Fraction(0))
            continue
        # (k+1) B_k = (k+1) - sum_{j<k} C(k+1, j) B_j ; only j = 0, 1 and even j contribute
        evens = range(2, k, 2)
        lcm = 2
        for j in evens:
            lcm = lcm * values[j].denominator // math.gcd(lcm, values[j].denominator)
        total = lcm + (k + 1) * (lcm // 2)
        for j in evens:
            b = values[j]
            total += math.comb(k + 1, j) * b.numerator * (lcm // b.denominator)
        values.append(Fraction((k + 1) * lcm - total, (k + 1) * lcm))


TABLE = BernoulliTable()


def bernoulli_exact(n: int) -> Fraction:
    """Exact B_n with B_1 = +1/2."""
    return TABLE.get(n)


def divided_bernoulli(n: int) -> Fraction:
    """B_n / n (n >= 1)."""
    return bernoulli_exact(n) / n


def bernoulli_mod_p(m: int, p: int) -> ResidueModPk:
    """B_m mod p from S_{p-1,m} mod p^2, for even 2 <= m <= p-3; never builds B_m."""
    if m % 2 or not 2 <= m <= p - 3:
        raise IndexOutOfRange(f"need even m in [2, p-3], got m={m}, p={p}")
    s = modops.sum_powers(p - 1, m, p * p)
    if s % p:
        raise AssertionError(f"S_(p-1,{m}) not divisible by {p}")
    return ResidueModPk(p, 1, s // p)


def bernoulli_mod(n: int, p: int) -> ResidueModPk:
    """B_n mod p for p-integral B_n, choosing the exact or modular route by the cutoff."""
    if n <= config.caps().bernoulli_exact:
        return rational_mod_pk(bernoulli_exact(n), p, 1)
    if n % 2 == 1:
        return ResidueModPk(p, 1, 0)
    if n <= p - 3:
        return bernoulli_mod_p(n, p)
    # Kummer reduction keeps B_n/n mod p when p-1 does not divide n and p does not divide n
    b = n % (p - 1)
    if b and n % p:
        return bernoulli_mod_p(b, p) * rational_mod_pk(Fraction(n, b), p, 1)
    raise RangeExceeded(f"B_{n} mod {p} is outside the supported routes")


def padic_pB(k: int, p: int, precision: int) -> PadicValue:
    """p * B_{k(p-1)} as a p-adic value (valuation 0 for k >= 1)."""
    if precision > 3:
        raise PrecisionUnsupported(f"precision {precision} > 3")
    if p < 5 or not is_prime(p):
        raise PreconditionViolated(f"need a prime p >= 5, got {p}")
    if k < 0:
        raise IndexOutOfRange(f"k must be >= 0, got {k}")
    n = k * (p - 1)
    if k == 0 or n <= config.caps().bernoulli_exact:
        return padic_of_rational(p * bernoulli_exact(n), p, precision)
    s = modops.sum_powers(p - 1, n, p**3)
    return PadicValue(p, 0, ResidueModPk(p, precision, s), precision)


def pB_residue(k: int, p: int, power: int) -> ResidueModPk:
    """p * B_{k(p-1)} mod p^power."""
    return padic_pB(k, p, power).to_residue(power)


def second_coefficient(x: ResidueModPk) -> int:
    """c with x = -1 + p*c mod p^2, for x = -1 mod p.

    This is the offset reading of "second p-adic coefficient" used for pB_{p-1}
    and pB_{2p-2}; the plain base-p digit of such an x is c - 1 mod p.
    """
    p = x.prime
    v = x.reduce(2).value
    if (v + 1) % p:
        raise PreconditionViolated(f"{v} is not -1 mod {p}")
    return (v + 1) // p % p


# ---------------------------------------------------------------- structure


@dataclass(frozen=True)
class IrregularPair:
    prime: int
    index: int


def irregular_pairs(p: int) -> list[IrregularPair]:
    """All (p, m), m even in [2, p-3], with p | B_m."""
    if p < 5:
        raise PreconditionViolated(f"need p >= 5, got {p}")
    sums = modops.power_sums(p - 1, p - 3, p * p)
    return [IrregularPair(p, m) for m in range(2, p - 2, 2) if sums[m] % (p * p) == 0]


def is_irregular(p: int) -> bool:
    return bool(irregular_pairs(p))


def irregular_primes_below(n: int) -> list[int]:
    return [p for p in primes_upto(n - 1) if p >= 5 and is_irregular(p)]


def von_staudt_clausen(n: int) -> Fraction:
    """B_n + sum_{q prime, q-1 | n} 1/q; an integer for even n >= 2."""
    total = bernoulli_exact(n)
    for q in primes_upto(n + 1):
        if n % (q - 1) == 0:
            total += Fraction(1, q)
    return total


def miki_sides(n: int) -> tuple[Fraction, Fraction]:
    """Both sides of Miki's convolution identity for the divided numbers B_i / i."""
    bb = divided_bernoulli
    left = sum((bb(i) * bb(n - i) for i in range(2, n - 1)), Fraction(0))
    harmonic = sum((Fraction(1, j) for j in range(1, n + 1)), Fraction(0))
    right = sum((math.comb(n, i) * bb(i) * bb(n - i) for i in range(2, n - 1)), Fraction(0))
    return left, right + 2 * harmonic * bb(n)


def miki_identity_check(n: int) -> bool:
    if n <= 2:
        raise PreconditionViolated(f"Miki's identity needs n > 2, got {n}")
    left, right = miki_sides(n)
    return left == right


def adams_check(n: int, p: int, l: int) -> bool:
    """True iff p^l divides the numerator of B_n."""
    if p <= 3 or not is_prime(p):
        raise PreconditionViolated(f"need a prime p > 3, got {p}")
    if n % (p - 1) == 0:
        raise PreconditionViolated(f"p-1 = {p - 1} divides n = {n}")
    if n % p**l:
        raise PreconditionViolated(f"{p}^{l} does not divide {n}")
    if n % 2 or n > config.caps().bernoulli_exact:
        raise PreconditionViolated(f"n must be even and <= {config.caps().bernoulli_exact}")
    return bernoulli_exact(n).numerator % p**l == 0


def kummer_sides(p: int, b: int, k: int) -> tuple[ResidueModPk, ResidueModPk]:
    """(B_n/n, B_b/b) mod p with n = k(p-1) + b."""
    if b <= 0 or b % 2 or b % (p - 1) == 0:
        raise PreconditionViolated(f"b must be even, positive, not divisible by p-1; got {b}")
    n = k * (p - 1) + b
    if n > config.caps().bernoulli_exact:
        raise RangeExceeded(f"index {n} beyond exact cutoff")
    return (rational_mod_pk(divided_bernoulli(n), p, 1),
            rational_mod_pk(divided_bernoulli(b), p, 1))


def sun_result6_sides(k: int, p: int) -> tuple[ResidueModPk, ResidueModPk]:
    """p B_{k(p-1)} against -(k-1)(p-1) + k p B_{p-1}, both mod p^2."""
    lhs = pB_residue(k, p, 2)
    rhs = -(k - 1) * (p - 1) + k * pB_residue(1, p, 2)
    return lhs, rhs


def sun_delta(n: int, b: int, p: int) -> int:
    """1 when p-1 | b and B_n is not p-integral, else 0."""
    return int(b % (p - 1) == 0 and bernoulli_exact(n).denominator % p == 0)


def sun_result7_sides(k: int, b: int, n: int, p: int) -> tuple[ResidueModPk, ResidueModPk]:
    """Both sides of Sun's general congruence mod p^n, by exact rationals."""
    def term(r: int) -> Fraction:
        return (1 - Fraction(p) ** (r * (p - 1) + b - 1)) * p * bernoulli_exact(r * (p - 1) + b)

    lhs = term(k)
    rhs = Fraction(0)
    for r in range(n):
        rhs += (-1) ** (n - 1 - r) * binom(k - 1 - r, n - 1 - r) * math.comb(k, r) * term(r)
    rhs += (-1) ** n * sun_delta(n, b, p) * math.comb(k, n) * Fraction(p) ** (n - 1)
    return rational_mod_pk(lhs, p, n), rational_mod_pk(rhs, p, n)


def fact2_sides(p: int) -> tuple[int, int]:
    """((pB_{2(p-1)})_1, 2 (pB_{p-1})_1 - 1 mod p) with the offset coefficient reading."""
    a = second_coefficient(pB_residue(2, p, 2))
    b = second_coefficient(pB_residue(1, p, 2))
    return a, (2 * b - 1) % p


def numerator_factors(x: Fraction) -> dict[int, int]:
    """Prime factorization of |numerator| by trial division (small inputs only)."""
    n, out, d = abs(x.numerator), {}, 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class ThangaduraiFinding:
    n: int
    prime: int
    l: int
    beta: int

    @property
    def violates(self) -> bool:
        return self.beta > self.l + 1


def thangadurai_scan(n_max: int = 400, p_max: int = 50) -> list[ThangaduraiFinding]:
    """Every (n, p) with p^l || n (l >= 1), p > 3, p-1 not dividing n, n even; beta = v_p(N(B_n))."""
    out = []
    for p in primes_upto(p_max):
        if p <= 3:
            continue
        for n in range(p, n_max + 1, p):
            if n % 2 or n % (p - 1) == 0:
                continue
            l = vp(n, p)
            beta = vp(bernoulli_exact(n).numerator, p)
            out.append(ThangaduraiFinding(n, p, int(l), int(beta)))
    return out
