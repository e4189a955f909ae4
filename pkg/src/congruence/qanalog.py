"""q-integers, Gaussian binomials, q-harmonic sums reduced modulo powers of
[p]_q, Dilcher's determinants, and the classical binomial congruences they refine."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import (
    RationalPolynomial,
    base_digits,
    binom,
    det_bareiss,
    is_prime,
    poly_inverse_mod,
    vp,
)
from .errors import PreconditionViolated, PrecisionUnsupported

Poly = RationalPolynomial


@dataclass(frozen=True)
class QCongruenceSide:
    """A polynomial reduced modulo [p]_q^power."""

    value: RationalPolynomial
    prime: int
    power: int

    def label(self) -> str:
        return f"[{self.prime}]_q^{self.power}"

    def __str__(self) -> str:
        return str(self.value)


def q_integer(k: int) -> RationalPolynomial:
    """[k]_q = 1 + q + ... + q^{k-1}."""
    if k < 1:
        raise PreconditionViolated(f"need k >= 1, got {k}")
    return Poly.of(*([1] * k))


@lru_cache(maxsize=None)
def _qbin_coeffs(n: int, m: int) -> tuple[int, ...]:
    # q-Pascal: C(n, m) = C(n-1, m-1) + q^m C(n-1, m); integer coefficients throughout
    if m == 0 or m == n:
        return (1,)
    a = _qbin_coeffs(n - 1, m - 1)
    b = _qbin_coeffs(n - 1, m)
    out = [0] * max(len(a), len(b) + m)
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i + m] += c
    return tuple(out)


def q_binomial(n: int, m: int) -> RationalPolynomial:
    """Gaussian binomial [n choose m]_q."""
    if not 0 <= m <= n:
        raise PreconditionViolated(f"need 0 <= m <= n, got n={n}, m={m}")
    m = min(m, n - m)
    # iterate the recurrence along m to keep the recursion depth small
    for j in range(m + 1):
        for i in range(j, n - m + j + 1):
            _qbin_coeffs(i, j)
    return Poly(tuple(Fraction(c) for c in _qbin_coeffs(n, m)))


def q_modulus(p: int, power: int) -> RationalPolynomial:
    return q_integer(p) ** power


def _check(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise PreconditionViolated(f"need a prime p >= 3, got {p}")


def q_harmonic_mod(p: int, order: int, twisted: bool, power: int) -> QCongruenceSide:
    """sum_{j<p} (q^j if twisted else 1) / [j]_q^order modulo [p]_q^power."""
    _check(p)
    if order < 1:
        raise PreconditionViolated(f"order must be >= 1, got {order}")
    if power < 1 or (power > 2 if order == 1 else power > 1):
        raise PrecisionUnsupported(f"power {power} not supported for order {order}")
    mod = q_modulus(p, power)
    total = Poly()
    for j in range(1, p):
        inv = poly_inverse_mod(q_integer(j) ** order % mod, mod)
        if twisted:
            inv = Poly.monomial(j) * inv
        total = total + inv
    return QCongruenceSide(total % mod, p, power)


def reduce_side(x: RationalPolynomial, p: int, power: int) -> QCongruenceSide:
    return QCongruenceSide(x % q_modulus(p, power), p, power)


def dilcher_matrix(k: int, P: int, twisted: bool) -> list[list[int]]:
    """Banded k x k matrices: C(P+1, i-j+2) below and on the diagonal with P above it,
    or C(P, i-j+2) for j <= i+1 when twisted."""
    rows = []
    for i in range(k):
        row = []
        for j in range(k):
            if twisted:
                row.append(binom(P, i - j + 2) if j <= i + 1 else 0)
            elif j <= i:
                row.append(binom(P + 1, i - j + 2))
            else:
                row.append(P if j == i + 1 else 0)
        rows.append(row)
    return rows


def dilcher_D(k: int, P: int, twisted: bool = False) -> Fraction:
    if k < 1:
        raise PreconditionViolated(f"need k >= 1, got {k}")
    return det_bareiss(dilcher_matrix(k, P, twisted))


_ONE_MINUS_Q = Poly.of(1, -1)


# ---------------------------------------------------------------- claim sides


def andrews_sides(p: int) -> tuple[QCongruenceSide, QCongruenceSide]:
    """H_{p-1}(q) against ((p-1)/2)(1-q), mod [p]_q."""
    return (q_harmonic_mod(p, 1, False, 1),
            reduce_side(_ONE_MINUS_Q.scale(Fraction(p - 1, 2)), p, 1))


def shipan_sides(p: int) -> tuple[tuple[QCongruenceSide, QCongruenceSide], ...]:
    """Both Shi-Pan congruences: order 1 mod [p]_q^2 and order 2 mod [p]_q."""
    rhs1 = (_ONE_MINUS_Q.scale(Fraction(p - 1, 2))
            + (_ONE_MINUS_Q**2 * q_integer(p)).scale(Fraction(p * p - 1, 24)))
    rhs2 = (_ONE_MINUS_Q**2).scale(-Fraction((p - 1) * (p - 5), 12))
    return ((q_harmonic_mod(p, 1, False, 2), reduce_side(rhs1, p, 2)),
            (q_harmonic_mod(p, 2, False, 1), reduce_side(rhs2, p, 1)))


def dilcher_sides(p: int, k: int, twisted: bool) -> tuple[QCongruenceSide, QCongruenceSide]:
    """H_{p-1,k}(q) against ((-1)^{k-1}/p^k) D_k(-p)(1-q)^k, or the twisted sum against
    -(1/p^k) D~_k(p)(1-q)^k, all mod [p]_q."""
    if twisted:
        c = -dilcher_D(k, p, True) / p**k
    else:
        c = Fraction((-1) ** (k - 1), p**k) * dilcher_D(k, -p, False)
    return q_harmonic_mod(p, k, twisted, 1), reduce_side((_ONE_MINUS_Q**k).scale(c), p, 1)


def clark_sides(p: int, n: int, m: int) -> tuple[QCongruenceSide, QCongruenceSide]:
    """C(np, mp)_q against C(n, m)_{q^{p^2}}, mod [p]_q^2."""
    lhs = q_binomial(n * p, m * p)
    rhs = q_binomial(n, m).compose_power(p * p)
    return reduce_side(lhs, p, 2), reduce_side(rhs, p, 2)


def straub_sides(p: int, n: int, m: int) -> tuple[QCongruenceSide, QCongruenceSide]:
    """C(np, mp)_q against C(n,m)_{q^{p^2}} - C(n,m+1)C(m+1,2)((p^2-1)/12)(q^p-1)^2, mod [p]_q^3."""
    lhs = q_binomial(n * p, m * p)
    corr = ((Poly.monomial(p) - 1) ** 2).scale(
        math.comb(n, m + 1) * math.comb(m + 1, 2) * Fraction(p * p - 1, 12))
    rhs = q_binomial(n, m).compose_power(p * p) - corr
    return reduce_side(lhs, p, 3), reduce_side(rhs, p, 3)


def andrews_binomial_sides(p: int) -> tuple[QCongruenceSide, QCongruenceSide]:
    """C(2p-1, p-1)_q against q^{p(p-1)/2}, mod [p]_q^2."""
    return (reduce_side(q_binomial(2 * p - 1, p - 1), p, 2),
            reduce_side(Poly.monomial(p * (p - 1) // 2), p, 2))


# ---------------------------------------------------------------- integer binomials


def lucas_product(n: int, m: int, p: int) -> int:
    """prod C(n_i, m_i) mod p over base-p digits."""
    dn, dm = base_digits(n, p), base_digits(m, p)
    dm += [0] * (len(dn) - len(dm))
    out = 1
    for a, b in zip(dn, dm):
        out = out * math.comb(a, b) % p
    return out


def kummer_carries(n: int, m: int, p: int) -> int:
    """Carries when adding m and n - m in base p."""
    a, b, carry, count = m, n - m, 0, 0
    while a or b or carry:
        s = a % p + b % p + carry
        carry = 1 if s >= p else 0
        count += carry
        a //= p
        b //= p
    return count


def random_pairs(p: int, count: int = 200, bound: int = 10**4) -> list[tuple[int, int]]:
    """Deterministic (n, m) pairs with 0 <= m <= n <= bound, seeded by p."""
    rng = random.Random(p)
    out = []
    for _ in range(count):
        n = rng.randint(0, bound)
        out.append((n, rng.randint(0, n)))
    return out


def helou_terjanian_s(p: int, n: int, m: int) -> int | float:
    """s = v_p(p^3 m (n-m) C(n, m)); infinite when m is 0 or n."""
    return vp(p**3 * m * (n - m) * math.comb(n, m), p)


def helou_terjanian_holds(p: int, n: int, m: int) -> bool:
    """C(np, mp) = C(n, m) mod p^s (exact equality when s is infinite)."""
    diff = math.comb(n * p, m * p) - math.comb(n, m)
    s = helou_terjanian_s(p, n, m)
    if s == math.inf:
        return diff == 0
    return diff % p**int(s) == 0
