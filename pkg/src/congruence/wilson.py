"""Roots of g(X) = X^{p-1} + (p-1)! lifted p-adically, Fermat-quotient digits,
and every route to (p-1)! mod p^2 and p^3."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import modops
from .arith import ResidueModPk, is_prime, rational_mod_pk
from .bernoulli import pB_residue
from .errors import MethodUnsupported, NonUnit, PreconditionViolated, PrecisionUnsupported
from .faulhaber import _A, DETERMINANT_LIMIT, gv_sequence_mod

METHOD_POWER = {
    "theorem1": 2,
    "theorem2": 2,
    "glaisher": 2,
    "lemma4": 3,
    "theorem6": 3,
    "corollary6": 3,
    "sun": 3,
    "eq36": 3,
}


def _check_prime(p: int, least: int = 3) -> None:
    if p < least or not is_prime(p):
        raise PreconditionViolated(f"need a prime >= {least}, got {p}")


def _check_k(k: int, p: int) -> None:
    if k % p == 0:
        raise NonUnit(f"{k} is divisible by {p}")
    if not 1 <= k <= p - 1:
        raise PreconditionViolated(f"need 1 <= k <= p-1, got {k}")


def delta0(k: int, p: int) -> int:
    """Digit with k^{p-1} = 1 + p delta0 mod p^2."""
    _check_k(k, p)
    return (pow(k, p - 1, p**3) - 1) // p % p


def delta1(k: int, p: int) -> int:
    """Third base-p digit of k^{p-1} mod p^3."""
    _check_k(k, p)
    return (pow(k, p - 1, p**3) - 1) // (p * p) % p


@lru_cache(maxsize=64)
def _digits(p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    d0, d1 = modops.fermat_digits(p)
    return tuple(int(x) for x in d0), tuple(int(x) for x in d1)


def factorial_mod_pk(p: int, k: int) -> ResidueModPk:
    """(p-1)! mod p^k by direct product."""
    if k > 4:
        raise PrecisionUnsupported(f"power {k} > 4")
    return ResidueModPk(p, k, modops.factorial(p - 1, p**k))


@dataclass(frozen=True)
class WilsonDigits:
    """(p-1)! = -1 + p J + p^2 third mod p^3 (offset digits relative to -1)."""

    prime: int
    J: int
    third: int


def wilson_digits(p: int) -> WilsonDigits:
    f = factorial_mod_pk(p, 3).value + 1
    return WilsonDigits(p, f // p % p, f // (p * p) % p)


# ---------------------------------------------------------------- Hensel lifts


@dataclass(frozen=True)
class RootLift:
    """x_k = digits[0] + digits[1] p + digits[2] p^2 + ..., a root of g mod p^precision."""

    prime: int
    base: int
    digits: tuple[int, ...]

    @property
    def precision(self) -> int:
        return len(self.digits)

    @property
    def value(self) -> int:
        return sum(d * self.prime**i for i, d in enumerate(self.digits))


def hensel_root(k: int, p: int, precision: int) -> RootLift:
    """Newton iteration for the root of g congruent to k mod p."""
    _check_prime(p, 2)
    _check_k(k, p)
    if not 1 <= precision <= 4:
        raise PrecisionUnsupported(f"precision must be in 1..4, got {precision}")
    m = p**precision
    f = modops.factorial(p - 1, m)
    x = k
    for _ in range(precision):
        g = (pow(x, p - 1, m) + f) % m
        dg = (p - 1) * pow(x, p - 2, m) % m
        x = (x - g * pow(dg, -1, m)) % m
    digits, v = [], x
    for _ in range(precision):
        v, r = divmod(v, p)
        digits.append(r)
    return RootLift(p, k, tuple(digits))


def lemma1_t0(k: int, p: int) -> int:
    """t_k^(0) from p t = k (1 + (p-1)! + p delta0(k)) mod p^2."""
    f = factorial_mod_pk(p, 2).value
    val = k * (1 + f + p * delta0(k, p)) % (p * p)
    return val // p


def lemma3_t1(k: int, p: int) -> int:
    """Closed form for t_k^(1) mod p in terms of Fermat-quotient digits."""
    d0, d1 = _digits(p)
    s0 = sum(d0)
    dk = d0[k - 1]
    return k * (dk + d1[k - 1] + s0 * s0 + (1 + dk) * s0) % p


def lemma3_lift_term(k: int, p: int) -> int:
    """(x_k - k - k(1 + (p-1)! + p delta0(k))) / p^2 mod p.

    The first-order correction is taken at full width (not reduced to a
    single digit), which is the quantity the closed form describes.
    """
    x = hensel_root(k, p, 3).value
    f3 = factorial_mod_pk(p, 3).value
    first = k * (1 + f3 + p * delta0(k, p))
    return (x - k - first) % p**3 // (p * p)


def root_product(p: int, precision: int) -> ResidueModPk:
    """prod_k x_k mod p^precision; equals the constant term of g for odd p."""
    m = p**precision
    prod = 1
    for k in range(1, p):
        prod = prod * hensel_root(k, p, precision).value % m
    return ResidueModPk(p, precision, prod)


# ---------------------------------------------------------------- predictions


def _half(p: int, k: int) -> int:
    return pow(2, -1, p**k)


def _theorem2_half_c1(p: int) -> ResidueModPk:
    """c_1(l)/2 mod p^2 with l = (p-1)/2; c_1(l) = 4 A_{l-1}^{(l+1)} / (2l+2)."""
    l = (p - 1) // 2
    if l - 1 <= DETERMINANT_LIMIT:
        a = rational_mod_pk(_A(l - 1, l + 1), p, 2)
    else:
        a = ResidueModPk(p, 2, gv_sequence_mod(l + 1, l - 1, p, 2)[l - 1])
    return a * rational_mod_pk(Fraction(2, p + 1), p, 2)


def wilson_terms(p: int, method: str) -> tuple[ResidueModPk, dict[str, str]]:
    """Prediction plus the named intermediate quantities used to build it."""
    if method not in METHOD_POWER:
        raise MethodUnsupported(f"unknown method {method!r}")
    _check_prime(p, 2)
    if p < 5:
        raise MethodUnsupported(f"method {method} needs p >= 5, got {p}")
    k = METHOD_POWER[method]
    m = p**k
    h = _half(p, k)
    detail: dict[str, str] = {}

    if method == "theorem1":
        s0 = sum(_digits(p)[0])
        detail["sum_delta0"] = str(s0)
        return ResidueModPk(p, 2, -1 + p * s0), detail

    if method == "theorem2":
        half_c1 = _theorem2_half_c1(p)
        detail["half_c1"] = str(half_c1)
        return half_c1 - p, detail

    if method == "glaisher":
        pb = pB_residue(1, p, 2)
        detail["pB_(p-1)"] = str(pb)
        return pb - p, detail

    if method == "lemma4":
        s = modops.sum_powers(p - 1, p - 1, m)
        s2 = modops.sum_powers(p - 1, 2 * p - 2, m)
        detail.update(S=str(s), S2=str(s2))
        val = -1 - h * (s * s + s2) + (2 * p + 1) * s - (p - 1) * (3 * p * h + 1)
        return ResidueModPk(p, 3, val), detail

    if method == "theorem6":
        # delta sums enter multiplied by p or p^2, so mod p^2 is enough for each
        d0, d1 = _digits(p)
        s0 = sum(d0) % (p * p)
        s1 = sum(d1) % (p * p)
        sq = sum(x * x for x in d0) % (p * p)
        detail.update(sum_delta0=str(s0), sum_delta1=str(s1), sum_delta0_sq=str(sq))
        val = -1 + p * s0 + p * p * (s0 + s1) - p * p * h * (s0 * s0 + sq)
        return ResidueModPk(p, 3, val), detail

    b1 = pB_residue(1, p, 3).value
    b2 = pB_residue(2, p, 3).value
    detail.update({"pB_(p-1)": str(b1), "pB_(2p-2)": str(b2)})

    if method == "corollary6":
        val = p * h - 3 * p * p * h + (2 * p + 1) * b1 - h * b2 - h * b1 * b1
        return ResidueModPk(p, 3, val), detail

    if method == "sun":
        inv = pow(p - 1, -1, m)
        x = b1 * inv
        val = -x + b2 * h * inv - h * x * x
        return ResidueModPk(p, 3, val), detail

    # eq36: -2p^2 - p(p+1)/2 B_{2p-2} + p(p+1) B_{p-1} - (2p+1)/2 p^2 B_{p-1}^2
    val = -2 * p * p - (p + 1) * h * b2 + (p + 1) * b1 - (2 * p + 1) * h * b1 * b1
    return ResidueModPk(p, 3, val), detail


def wilson_predict(p: int, method: str) -> ResidueModPk:
    return wilson_terms(p, method)[0]


def inverse_p_minus_1(p: int) -> tuple[ResidueModPk, ResidueModPk]:
    """((p-1)^{-1}, -p^2 - p - 1), both mod p^3."""
    return (ResidueModPk(p, 3, pow(p - 1, -1, p**3)),
            ResidueModPk(p, 3, -p * p - p - 1))


def sum_powers_route(p: int) -> tuple[ResidueModPk, ResidueModPk]:
    """((p-1)! , -p + sum k^{p-1}) mod p^2."""
    return (factorial_mod_pk(p, 2),
            ResidueModPk(p, 2, -p + modops.sum_powers(p - 1, p - 1, p * p)))


def lemma4_pieces(p: int) -> dict[str, tuple[int, int]]:
    """The two auxiliary sums of the mod p^3 derivation, from digits and in closed form.

    S3 = -1/2 sum_i (i^{p-1} - 1 - p^2 delta1)^2 and
    S4 = -1/2 (sum_i i^{p-1} - (p-1) - p^2 sum delta1)^2, each mod p^3.
    """
    m = p**3
    h = _half(p, 3)
    d0, d1 = _digits(p)
    pw = [pow(i, p - 1, m) for i in range(1, p)]
    s = sum(pw) % m
    s2 = sum(x * x for x in pw) % m
    sd1 = sum(d1)
    s3 = -h * sum((x - 1 - p * p * d) ** 2 for x, d in zip(pw, d1)) % m
    s4 = -h * (s - (p - 1) - p * p * sd1) ** 2 % m
    s3_closed = (-h * s2 + s - h * (p - 1)) % m
    s4_closed = (-h * s * s - h * (p - 1) ** 2 + (p - 1) * s) % m
    return {"S3": (s3, s3_closed), "S4": (s4, s4_closed)}
