"""Carmichael and Giuga numbers, the Agoh-Giuga residue n B_{n-1} mod n,
and the Bernoulli-numerator facts that connect them."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import config, kernels
from .arith import is_prime, mod_m, primes_upto
from .bernoulli import bernoulli_exact, numerator_factors
from .errors import FactorizationFailed, NotSquarefree, PreconditionViolated, RangeExceeded

KINDS = ("carmichael", "giuga")


def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Trial division; refuses inputs above the factorization cap."""
    if n < 2:
        raise PreconditionViolated(f"need n >= 2, got {n}")
    cap = config.caps().factorization
    if n > cap:
        raise FactorizationFailed(f"n = {n} above factorization cap {cap}")
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@dataclass(frozen=True)
class CompositeProfile:
    n: int
    prime_factors: tuple[tuple[int, int], ...]
    is_squarefree: bool
    carmichael_at: tuple[int, ...]
    is_carmichael: bool
    is_giuga: bool

    @property
    def is_prime(self) -> bool:
        return len(self.prime_factors) == 1 and self.prime_factors[0][1] == 1


def classify(n: int) -> CompositeProfile:
    """Korselt and Giuga tests from the factorization of n."""
    fac = factorize(n)
    primes = [p for p, _ in fac]
    squarefree = all(e == 1 for _, e in fac)
    composite = not (len(fac) == 1 and fac[0][1] == 1)
    # n is Carmichael at p when p - 1 divides n/p - 1 (equivalently n - 1)
    at = tuple(p for p in primes if (n // p - 1) % (p - 1) == 0)
    carm = composite and squarefree and len(at) == len(primes)
    giuga = composite and squarefree and all((n // p - 1) % p == 0 for p in primes)
    return CompositeProfile(n, fac, squarefree, at, carm, giuga)


def giuga_sum(n: int) -> Fraction:
    """sum_{p | n} 1/p - 1/n; an integer exactly when n is Giuga."""
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        raise NotSquarefree(f"{n} is not squarefree")
    return sum((Fraction(1, p) for p, _ in fac), Fraction(0)) - Fraction(1, n)


def agoh_giuga_residue(n: int) -> int:
    """n B_{n-1} mod n, from the exact Bernoulli number."""
    if n < 2:
        raise PreconditionViolated(f"need n >= 2, got {n}")
    if n - 1 > config.caps().bernoulli_exact:
        raise RangeExceeded(f"B_{n - 1} beyond the exact table")
    return mod_m(n * bernoulli_exact(n - 1), n)


def agoh_giuga_counterexamples(limit: int) -> list[int]:
    """n <= limit where n B_{n-1} = -1 mod n disagrees with primality."""
    return [n for n in range(2, limit + 1)
            if (agoh_giuga_residue(n) == (n - 1) % n) != is_prime(n)]


def scan(kind: str, limit: int) -> list[int]:
    """All Carmichael or Giuga numbers up to limit, ascending."""
    if kind not in KINDS:
        raise PreconditionViolated(f"kind must be one of {KINDS}, got {kind!r}")
    if limit < 4:
        return []
    carm, giuga = kernels.korselt_giuga_scan(limit)
    mask = carm if kind == "carmichael" else giuga
    return [int(v) for v in mask.nonzero()[0]]


def scan_by_classify(kind: str, limit: int) -> list[int]:
    """Slow cross-check of ``scan`` through ``classify``."""
    attr = "is_carmichael" if kind == "carmichael" else "is_giuga"
    return [n for n in range(4, limit + 1) if getattr(classify(n), attr)]


def giuga_by_fraction(limit: int) -> list[int]:
    """Giuga numbers found by integrality of the defining fraction."""
    out = []
    for n in range(4, limit + 1):
        fac = factorize(n)
        if len(fac) > 1 and all(e == 1 for _, e in fac) and giuga_sum(n).denominator == 1:
            out.append(n)
    return out


def korselt_bases_hold(n: int, bases: range = range(2, 51)) -> bool:
    """a^n = a mod n for every base a."""
    return all(pow(a, n, n) == a % n for a in bases)


def equivalence_e(p: int, u: int) -> tuple[bool, bool]:
    """(p-1 | n-1, p-1 | u-1) for n = p u."""
    n = p * u
    return (n - 1) % (p - 1) == 0, (u - 1) % (p - 1) == 0


def lemma2_sides(p: int, n: int) -> tuple[int, int]:
    """p B_{n-1} mod p against the predicted 0 or -1."""
    lhs = mod_m(p * bernoulli_exact(n - 1), p)
    rhs = (p - 1) % p if (n - 1) % (p - 1) == 0 else 0
    return lhs, rhs


def prop1_sides(n: int) -> tuple[bool, bool]:
    """For squarefree composite n: (n B_{n-1} != 0 mod n, exists p | n with p-1 | n-1)."""
    prof = classify(n)
    if not prof.is_squarefree or prof.is_prime:
        raise PreconditionViolated(f"{n} is not a squarefree composite")
    return agoh_giuga_residue(n) != 0, bool(prof.carmichael_at)


def corollary7_holds(n: int) -> bool:
    """Some prime where n is Carmichael does not divide the numerator of B_{n-1}."""
    prof = classify(n)
    if not prof.is_squarefree or prof.is_prime or not prof.carmichael_at:
        raise PreconditionViolated(f"{n} must be squarefree composite and Carmichael at some p")
    num = bernoulli_exact(n - 1).numerator
    return any(num % p for p in prof.carmichael_at)


@dataclass(frozen=True)
class Fact1Case:
    p: int
    m: int
    divides_numerator: bool


def fact1_cases(limit: int) -> list[Fact1Case]:
    """Odd squarefree n = p m (p prime, p | m - 1, p - 1 not dividing m - 1, m - 1 in the
    exact range) together with whether p divides the numerator of B_{m-1}."""
    out = []
    cap = config.caps().bernoulli_exact
    for p in primes_upto(limit):
        if p < 3:
            continue
        for m in range(p + 1, min(limit, cap + 1) + 1, p):
            if m % 2 == 0 or (m - 1) % (p - 1) == 0 or m % p == 0:
                continue
            if any(e > 1 for _, e in factorize(m)):
                continue
            num = bernoulli_exact(m - 1).numerator
            out.append(Fact1Case(p, m, num % p == 0))
    return out


def random_composites(count: int, seed: int, bound: int = 10**4) -> list[tuple[int, int]]:
    """Pairs (p, u) with p prime and u >= 2, drawn deterministically."""
    rng = random.Random(seed)
    ps = [p for p in primes_upto(int(math.isqrt(bound)) + 50)]
    return [(rng.choice(ps), rng.randint(2, bound)) for _ in range(count)]


def numerator_primes(n: int) -> list[int]:
    return sorted(numerator_factors(bernoulli_exact(n)))
