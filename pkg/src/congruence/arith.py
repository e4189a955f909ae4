"""Exact arithmetic: rationals, residues mod p^k, p-adic values, rational polynomials.

``Rational`` is :class:`fractions.Fraction`; it is always stored reduced with a
positive denominator, which is exactly the invariant we need.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import DenominatorNotInvertible, ModulusMismatch, NotCoprime

Rational = Fraction
RationalLike = Union[int, Fraction]

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = False
    return np.flatnonzero(sieve).tolist()


def primes_between(lo: int, hi: int) -> list[int]:
    """Primes in the inclusive range [lo, hi]."""
    return [p for p in primes_upto(hi) if p >= lo]


def vp(n: int, p: int) -> int | float:
    """p-adic valuation of an integer; ``math.inf`` for zero."""
    if n == 0:
        return math.inf
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp_rational(x: RationalLike, p: int) -> int | float:
    x = Fraction(x)
    if x == 0:
        return math.inf
    return vp(x.numerator, p) - vp(x.denominator, p)


def base_digits(n: int, p: int) -> list[int]:
    """Little-endian base-p digits of a non-negative integer."""
    out = []
    while n:
        n, r = divmod(n, p)
        out.append(r)
    return out or [0]


def binom(a: int, b: int) -> int:
    """Generalized binomial: 0 for b < 0, falling factorial / b! otherwise (any integer a)."""
    if b < 0:
        return 0
    if a >= 0:
        return math.comb(a, b)
    # C(-n, b) = (-1)^b C(n + b - 1, b)
    return (-1) ** b * math.comb(-a + b - 1, b)


# ---------------------------------------------------------------- residues


@dataclass(frozen=True)
class ResidueModPk:
    """``value`` mod ``prime**power``; normalized into [0, p^k) at construction."""

    prime: int
    power: int
    value: int

    def __post_init__(self) -> None:
        if self.power < 1:
            raise ValueError(f"power must be >= 1, got {self.power}")
        if not _prime_cached(self.prime):
            raise ValueError(f"{self.prime} is not prime")
        object.__setattr__(self, "value", self.value % self.prime**self.power)

    @property
    def modulus(self) -> int:
        return self.prime**self.power

    def _coerce(self, other: object) -> int:
        if isinstance(other, ResidueModPk):
            if (other.prime, other.power) != (self.prime, self.power):
                raise ModulusMismatch(f"{self.label()} vs {other.label()}")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return rational_mod_pk(other, self.prime, self.power).value
        return NotImplemented  # type: ignore[return-value]

    def _new(self, v: int) -> "ResidueModPk":
        return ResidueModPk(self.prime, self.power, v)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.value)

    def __pow__(self, e: int):
        return self._new(pow(self.value, e, self.modulus))

    def inverse(self) -> "ResidueModPk":
        if self.value % self.prime == 0:
            raise DenominatorNotInvertible(f"{self.value} is not a unit mod {self.label()}")
        return self._new(pow(self.value, -1, self.modulus))

    def reduce(self, power: int) -> "ResidueModPk":
        """Image in the smaller ring Z/p^power."""
        if power > self.power:
            raise ModulusMismatch(f"cannot lift {self.label()} to power {power}")
        return ResidueModPk(self.prime, power, self.value)

    def digits(self) -> list[int]:
        """The ``power`` base-p digits of the value, little-endian."""
        v, out = self.value, []
        for _ in range(self.power):
            v, r = divmod(v, self.prime)
            out.append(r)
        return out

    def label(self) -> str:
        return f"{self.prime}^{self.power}"

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


@lru_cache(maxsize=4096)
def _prime_cached(p: int) -> bool:
    return is_prime(p)


def rational_mod_pk(x: RationalLike, p: int, k: int) -> ResidueModPk:
    """a * b^{-1} mod p^k for x = a/b; the denominator must be prime to p."""
    x = Fraction(x)
    m = p**k
    if x.denominator % p == 0:
        raise DenominatorNotInvertible(f"{p} divides the denominator of {x}")
    return ResidueModPk(p, k, x.numerator * pow(x.denominator, -1, m))


def mod_m(x: RationalLike, m: int) -> int:
    """Reduce a rational modulo an arbitrary modulus m (denominator coprime to m)."""
    x = Fraction(x)
    if math.gcd(x.denominator, m) != 1:
        raise DenominatorNotInvertible(f"denominator of {x} not invertible mod {m}")
    return x.numerator * pow(x.denominator, -1, m) % m


# ---------------------------------------------------------------- p-adic


@dataclass(frozen=True)
class PadicValue:
    """p^valuation * unit, with the unit known to ``precision`` digits.

    Exact zero has ``valuation = inf`` and ``unit = None``.
    """

    prime: int
    valuation: int | float
    unit: ResidueModPk | None
    precision: int

    @property
    def is_zero(self) -> bool:
        return self.unit is None

    @classmethod
    def zero(cls, p: int, precision: int) -> "PadicValue":
        return cls(p, math.inf, None, precision)

    def to_residue(self, k: int) -> ResidueModPk:
        """Reduce mod p^k. Needs valuation >= 0 and enough digits to cover p^k."""
        if self.is_zero or self.valuation >= k:
            return ResidueModPk(self.prime, k, 0)
        if self.valuation < 0:
            raise DenominatorNotInvertible(f"valuation {self.valuation} < 0")
        if self.valuation + self.precision < k:
            raise ValueError(
                f"only {self.valuation + self.precision} digits known, need {k}"
            )
        return ResidueModPk(self.prime, k, self.prime**self.valuation * self.unit.value)

    def coefficient(self, j: int) -> int:
        """(x)_j: the digit of p^j in the expansion (valuation >= 0 assumed)."""
        return self.to_residue(j + 1).digits()[j]


def padic_of_rational(x: RationalLike, p: int, precision: int) -> PadicValue:
    x = Fraction(x)
    if precision < 1:
        raise ValueError("precision must be >= 1")
    if x == 0:
        return PadicValue.zero(p, precision)
    v = vp(x.numerator, p) - vp(x.denominator, p)
    unit = x / Fraction(p) ** v
    return PadicValue(p, v, rational_mod_pk(unit, p, precision), precision)


# ---------------------------------------------------------------- polynomials


def _trim(c: Iterable[Fraction]) -> tuple[Fraction, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class RationalPolynomial:
    """Dense polynomial in q; ``coeffs[i]`` multiplies q^i. Zero is ``()``."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(Fraction(c) for c in self.coeffs))

    @classmethod
    def of(cls, *coeffs: RationalLike) -> "RationalPolynomial":
        return cls(tuple(Fraction(c) for c in coeffs))

    @classmethod
    def monomial(cls, degree: int, coeff: RationalLike = 1) -> "RationalPolynomial":
        return cls((Fraction(0),) * degree + (Fraction(coeff),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> Fraction:
        return self.coeffs[-1]

    def __add__(self, other):
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return RationalPolynomial(
            tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result, base = RationalPolynomial.of(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, m: "RationalPolynomial") -> tuple["RationalPolynomial", "RationalPolynomial"]:
        if m.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dm, lead = m.degree, m.lead()
        qc = [Fraction(0)] * max(len(r) - dm, 0)
        for i in range(len(r) - 1, dm - 1, -1):
            c = r[i]
            if c:
                c = c / lead
                qc[i - dm] = c
                for j, mc in enumerate(m.coeffs):
                    r[i - dm + j] -= c * mc
        return RationalPolynomial(tuple(qc)), RationalPolynomial(tuple(r[:dm]))

    def __mod__(self, m: "RationalPolynomial") -> "RationalPolynomial":
        return self.divmod(m)[1]

    def compose_power(self, e: int) -> "RationalPolynomial":
        """x(q) -> x(q^e)."""
        out = [Fraction(0)] * (e * max(self.degree, 0) + 1)
        for i, c in enumerate(self.coeffs):
            out[i * e] = c
        return RationalPolynomial(tuple(out))

    def __call__(self, x: RationalLike) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def scale(self, c: RationalLike) -> "RationalPolynomial":
        c = Fraction(c)
        return RationalPolynomial(tuple(a * c for a in self.coeffs))

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        return "[" + ",".join(self.to_strings()) + "]"


def _as_poly(x) -> RationalPolynomial:
    if isinstance(x, RationalPolynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalPolynomial.of(x)
    raise TypeError(f"cannot treat {type(x).__name__} as a polynomial")


def poly_inverse_mod(f: RationalPolynomial, m: RationalPolynomial) -> RationalPolynomial:
    """g with f*g = 1 mod m, deg g < deg m, via the extended Euclidean algorithm."""
    if m.degree < 1:
        raise ValueError("modulus must have degree >= 1")
    r0, r1 = m, f % m
    s0, s1 = RationalPolynomial(), RationalPolynomial.of(1)
    while not r1.is_zero():
        quo, rem = r0.divmod(r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
    if r0.degree != 0:
        raise NotCoprime(f"gcd has degree {r0.degree}")
    return (s0.scale(1 / r0.lead())) % m


# ---------------------------------------------------------------- determinants


def det_bareiss(rows: Sequence[Sequence[RationalLike]]) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination; exact for int or Fraction entries."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    a = [[Fraction(x) for x in row] for row in rows]
    sign, prev = 1, Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * piv - aik * row_k[j]) / prev
            row_i[k] = Fraction(0)
        prev = piv
    return sign * a[n - 1][n - 1]
