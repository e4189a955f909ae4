"""Registry of runnable congruence claims, per-prime reports and parallel sweeps.

Every claim produces its two sides by separate routes; a report holds exactly
when the canonical serializations of the sides are equal.
"""
from __future__ import annotations

import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from . import bernoulli as bern
from . import faulhaber as fh
from . import giuga as gg
from . import modops
from . import qanalog as qa
from . import stirling as st
from . import wilson as wl
from .arith import ResidueModPk, RationalPolynomial, is_prime, primes_between, rational_mod_pk, vp
from .errors import CongruenceError, IndexUnsupported, PreconditionViolated, UnknownClaim


@dataclass(frozen=True)
class Outcome:
    lhs: Any
    rhs: Any
    modulus: str
    detail: dict[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    power: int | str
    domain: str  # "primes" or "integers"
    precondition: str
    anchor: str
    lhs_route: str
    rhs_route: str
    admissible: Callable[[int], bool]
    evaluate: Callable[[int], Outcome]
    report_only: bool = False


@dataclass(frozen=True)
class CongruenceReport:
    claim: str
    p: int
    modulus: str
    lhs: str
    rhs: str
    holds: bool
    ns: int
    report_only: bool = False
    detail: dict[str, str] = field(default_factory=dict)

    def to_dict(self, with_detail: bool = False) -> dict[str, Any]:
        out: dict[str, Any] = {"claim": self.claim, "p": self.p, "modulus": self.modulus,
                               "lhs": self.lhs, "rhs": self.rhs, "holds": self.holds,
                               "ns": self.ns}
        if self.detail and (with_detail or not self.holds):
            out["detail"] = dict(sorted(self.detail.items()))
        return out


REGISTRY: dict[str, Claim] = {}


def _fmt(x: Any) -> str:
    if isinstance(x, (list, tuple)):
        return "[" + ",".join(_fmt(v) for v in x) + "]"
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, qa.QCongruenceSide):
        return str(x.value)
    return str(x)


def claim(id: str, description: str, power: int | str, anchor: str, lhs: str, rhs: str,
          precondition: str, admissible: Callable[[int], bool], domain: str = "primes",
          report_only: bool = False):
    def wrap(fn: Callable[[int], Outcome]) -> Callable[[int], Outcome]:
        if id in REGISTRY:
            raise ValueError(f"duplicate claim id {id}")
        REGISTRY[id] = Claim(id, description, power, domain, precondition, anchor, lhs, rhs,
                             admissible, fn, report_only)
        return fn
    return wrap


def _primes_from(least: int, most: int | None = None) -> Callable[[int], bool]:
    return lambda p: p >= least and (most is None or p <= most) and is_prime(p)


def _mod(p: int, k: int) -> str:
    return f"{p}^{k}"


def _pairwise(items: list[tuple[Any, Any, Any]], name: str) -> tuple[list, list, dict[str, str]]:
    """Split (index, lhs, rhs) triples into side lists plus a failure index summary."""
    lhs = [a for _, a, _ in items]
    rhs = [b for _, _, b in items]
    bad = [str(i) for i, a, b in items if _fmt(a) != _fmt(b)]
    return lhs, rhs, ({f"failing_{name}": ",".join(bad)} if bad else {})


# ---------------------------------------------------------------- wilson

_WILSON = {
    "wilson.theorem1": ("theorem1", "Fermat-quotient digit sum gives (p-1)! mod p^2",
                        "Wilson lift via roots of X^{p-1}+(p-1)!: (p-1)! = -1 + p sum delta0(k)"),
    "wilson.theorem2": ("theorem2", "Faulhaber coefficient c_1 gives (p-1)! mod p^2",
                        "Faulhaber/Gessel-Viennot route: (p-1)! = c_1(l)/2 - p, p = 2l+1"),
    "wilson.glaisher": ("glaisher", "(p-1)! = pB_{p-1} - p mod p^2",
                        "Glaisher 1900: (p-1)! = pB_{p-1} - p mod p^2"),
    "wilson.lemma4": ("lemma4", "(p-1)! mod p^3 from S_{p-1} and S_{2p-2}",
                      "sums-of-powers form of Wilson mod p^3 with S and S_2"),
    "wilson.theorem6": ("theorem6", "(p-1)! mod p^3 from delta0/delta1 digit sums",
                        "Wilson mod p^3 via sums of delta0, delta1 and delta0^2"),
    "wilson.corollary6": ("corollary6", "(p-1)! mod p^3 from pB_{p-1} and pB_{2p-2}",
                          "Wilson mod p^3 in Bernoulli form with 2p+1 weight"),
    "wilson.sun_eq34": ("sun", "(p-1)! mod p^3 in Sun's Bernoulli form",
                        "Sun 2000: Wilson mod p^3 with pB_{p-1}/(p-1) and pB_{2p-2}/(2(p-1))"),
    "wilson.eq36": ("eq36", "(p-1)! mod p^3 expanded form",
                    "expanded Bernoulli form: -2p^2 - p(p+1)/2 B_{2p-2} + p(p+1)B_{p-1} - ..."),
}


def _wilson_eval(method: str) -> Callable[[int], Outcome]:
    def run(p: int) -> Outcome:
        k = wl.METHOD_POWER[method]
        pred, detail = wl.wilson_terms(p, method)
        return Outcome(wl.factorial_mod_pk(p, k), pred, _mod(p, k), detail)
    return run


for _id, (_m, _desc, _anchor) in _WILSON.items():
    claim(_id, _desc, wl.METHOD_POWER[_m], _anchor, "direct factorial", f"wilson_terms:{_m}",
          "prime p >= 5", _primes_from(5))(_wilson_eval(_m))


@claim("wilson.eq35", "(p-1)^{-1} = -p^2 - p - 1 mod p^3", 3,
       "geometric series: 1/(p-1) = -(1 + p + p^2) mod p^3", "modular inverse", "closed form",
       "prime p >= 3", _primes_from(3))
def _(p: int) -> Outcome:
    a, b = wl.inverse_p_minus_1(p)
    return Outcome(a, b, _mod(p, 3))


@claim("wilson.eq48", "(p-1)! = -p + S_{p-1,p-1} mod p^2", 2,
       "Fermat-quotient sum: (p-1)! = -p + sum k^{p-1} mod p^2", "direct factorial",
       "power sum", "prime p >= 3", _primes_from(3))
def _(p: int) -> Outcome:
    a, b = wl.sum_powers_route(p)
    return Outcome(a, b, _mod(p, 2))


@claim("wilson.lemma1", "first Hensel digit t_k^(0) of each root of X^{p-1}+(p-1)!", 2,
       "Hensel: p t_k = k(1 + (p-1)! + p delta0(k)) mod p^2", "Newton iteration",
       "closed form", "prime p >= 3", _primes_from(3))
def _(p: int) -> Outcome:
    items = [(k, wl.hensel_root(k, p, 2).digits[1], wl.lemma1_t0(k, p)) for k in range(1, p)]
    lhs, rhs, d = _pairwise(items, "k")
    return Outcome(lhs, rhs, _mod(p, 2), d)


@claim("wilson.lemma3", "second-order Hensel term of each root", 3,
       "t_k^(1) = k(delta0 + delta1 + s^2 + (1+delta0) s) mod p, s = sum delta0",
       "Newton iteration", "digit closed form", "prime p >= 5", _primes_from(5))
def _(p: int) -> Outcome:
    items = [(k, wl.lemma3_lift_term(k, p), wl.lemma3_t1(k, p)) for k in range(1, p)]
    lhs, rhs, d = _pairwise(items, "k")
    return Outcome(lhs, rhs, _mod(p, 3), d)


@claim("wilson.roots", "product of lifted roots equals (p-1)! mod p^3", 3,
       "Vieta on X^{p-1} + (p-1)!", "root product", "direct factorial",
       "prime p >= 3", _primes_from(3))
def _(p: int) -> Outcome:
    return Outcome(wl.root_product(p, 3), wl.factorial_mod_pk(p, 3), _mod(p, 3))


# ---------------------------------------------------------------- bernoulli


@claim("bernoulli.eq4", "pB_{p-1} = -1 mod p", 1,
       "von Staudt-Clausen consequence: pB_{p-1} = -1 mod p", "pB residue", "constant -1",
       "prime p >= 5", _primes_from(5))
def _(p: int) -> Outcome:
    return Outcome(bern.pB_residue(1, p, 1), ResidueModPk(p, 1, -1), _mod(p, 1))


@claim("bernoulli.vsc", "B_n + sum_{q-1|n} 1/q is an integer", "exact",
       "von Staudt 1840, Clausen 1840", "summed denominator", "constant 1",
       "even n with 2 <= n <= exact cap", lambda n: n >= 2 and n % 2 == 0 and n <= 400,
       domain="integers")
def _(n: int) -> Outcome:
    return Outcome(bern.von_staudt_clausen(n).denominator, 1, "exact")


@claim("bernoulli.kummer", "B_n/n = B_b/b mod p for n = k(p-1)+b", 1,
       "Kummer 1850 congruences for divided Bernoulli numbers", "B_n/n at n = k(p-1)+b",
       "B_b/b", "prime p >= 5; even b <= p-3; k = 1..3 within the exact range",
       _primes_from(5))
def _(p: int) -> Outcome:
    items = []
    for b in range(2, p - 2, 2):
        for k in (1, 2, 3):
            if k * (p - 1) + b <= 400:
                a, c = bern.kummer_sides(p, b, k)
                items.append((f"b{b}k{k}", a, c))
    lhs, rhs, d = _pairwise(items, "bk")
    return Outcome(lhs, rhs, _mod(p, 1), d)


@claim("bernoulli.sun_result6", "pB_{k(p-1)} = -(k-1)(p-1) + k pB_{p-1} mod p^2", 2,
       "Sun 2000: pB_{k(p-1)} = k pB_{p-1} - (k-1)(p-1) mod p^2", "pB_{k(p-1)}",
       "linear in pB_{p-1}", "prime p >= 5; k = 1..3", _primes_from(5))
def _(p: int) -> Outcome:
    items = [(k, *bern.sun_result6_sides(k, p)) for k in (1, 2, 3)]
    lhs, rhs, d = _pairwise(items, "k")
    return Outcome(lhs, rhs, _mod(p, 2), d)


@claim("bernoulli.result7", "Sun's general pB congruence mod p^n", 3,
       "Sun 2000: alternating binomial sum of (1 - p^{r(p-1)+b-1}) pB_{r(p-1)+b}",
       "term at r = k", "alternating sum of lower terms",
       "prime 5 <= p <= 13; b in {0,2,4}; n in 1..3; k in 1..3", _primes_from(5, 13))
def _(p: int) -> Outcome:
    items = []
    for b in (0, 2, 4):
        for n in (1, 2, 3):
            for k in (1, 2, 3):
                if k * (p - 1) + b <= 400:
                    items.append((f"b{b}n{n}k{k}", *bern.sun_result7_sides(k, b, n, p)))
    lhs, rhs, d = _pairwise(items, "bnk")
    return Outcome(lhs, rhs, _mod(p, 3), d)


@claim("bernoulli.fact2", "second coefficients: (pB_{2p-2})_1 = 2(pB_{p-1})_1 - 1 mod p", 1,
       "second p-adic coefficients of pB_{2p-2} and pB_{p-1}", "coefficient of pB_{2p-2}",
       "coefficient of pB_{p-1}", "prime p >= 5", _primes_from(5))
def _(p: int) -> Outcome:
    a, b = bern.fact2_sides(p)
    return Outcome(a, b, _mod(p, 1))


@claim("bernoulli.miki", "Miki's convolution identity", "exact",
       "Miki 1978 identity for B_i/i convolutions", "plain convolution",
       "binomial convolution plus harmonic term", "even n >= 4",
       lambda n: n >= 4 and n % 2 == 0, domain="integers")
def _(n: int) -> Outcome:
    a, b = bern.miki_sides(n)
    return Outcome(a, b, "exact")


def _adams_cases(p: int) -> list[tuple[int, int]]:
    return [(n, int(vp(n, p))) for n in range(p, 401, p) if n % 2 == 0 and n % (p - 1)]


@claim("bernoulli.adams", "p^l | n and p-1 not dividing n imply p^l | N(B_n)", 1,
       "Adams 1878 theorem for primes p > 3", "min(v_p(N(B_n)), l)", "l",
       "prime p >= 5; even n <= 400", _primes_from(5))
def _(p: int) -> Outcome:
    items = [(n, min(int(vp(bern.bernoulli_exact(n).numerator, p)), l), l)
             for n, l in _adams_cases(p)]
    lhs, rhs, d = _pairwise(items, "n")
    return Outcome(lhs, rhs, _mod(p, 1), d)


@claim("bernoulli.thangadurai", "p^l || n, p-1 not dividing n imply v_p(N(B_n)) <= l+1", 1,
       "Thangadurai 2004 conjecture", "max(beta, l+1)", "l+1",
       "prime p >= 5; even n <= 400", _primes_from(5), report_only=True)
def _(p: int) -> Outcome:
    items = [(n, max(int(vp(bern.bernoulli_exact(n).numerator, p)), l + 1), l + 1)
             for n, l in _adams_cases(p)]
    lhs, rhs, d = _pairwise(items, "n")
    return Outcome(lhs, rhs, _mod(p, 1), d)


# ---------------------------------------------------------------- faulhaber


@claim("faulhaber.jacobi", "Jacobi's form of the odd power sums", "exact",
       "Jacobi: sum k^{2l+1} = (1/(2l+2)) sum_j A_j^{(l+1)} u^{l+1-j}, u = n(n+1)",
       "Gessel-Viennot evaluation", "direct power sum", "1 <= l; n = 1..10",
       lambda l: 1 <= l <= 12, domain="integers")
def _(l: int) -> Outcome:
    items = [(n, fh.jacobi_sum(l, n), fh.sum_powers_exact(n, 2 * l + 1)) for n in range(1, 11)]
    lhs, rhs, d = _pairwise(items, "n")
    return Outcome(lhs, rhs, "exact", d)


@claim("faulhaber.eq52", "A_l^{(l+1)} = 0", "exact",
       "vanishing top Gessel-Viennot coefficient A_l^{(l+1)}", "determinant", "constant 0",
       "1 <= l <= 24", lambda l: 1 <= l <= 24, domain="integers")
def _(l: int) -> Outcome:
    return Outcome(fh.gessel_viennot_A(l, l + 1), 0, "exact")


@claim("faulhaber.eq53", "c_1(l) = 2pB_{p-1} for p = 2l+1", "exact",
       "Faulhaber leading coefficient via Gessel-Viennot: c_1(l) = 2pB_{p-1}",
       "Gessel-Viennot coefficient", "Bernoulli value", "prime 3 <= p <= 53",
       _primes_from(3, 53))
def _(p: int) -> Outcome:
    return Outcome(fh.faulhaber_coeff(1, (p - 1) // 2), 2 * p * bern.bernoulli_exact(p - 1),
                   "exact")


@claim("faulhaber.trailing", "c_2(l) = -4 c_1(l)", "exact",
       "Faulhaber: the last two terms have the form 4 alpha a^3 - alpha a^2",
       "c_2 from determinant", "-4 c_1 from determinant", "2 <= l <= 24",
       lambda l: 2 <= l <= 24, domain="integers")
def _(l: int) -> Outcome:
    return Outcome(fh.faulhaber_coeff(2, l), -4 * fh.faulhaber_coeff(1, l), "exact")


@claim("faulhaber.derby", "Derby's Pascal-matrix coefficients", "exact",
       "Derby: d times Pascal rows reproduces the p-th row; d_2 = (p/2)B_{p-1}",
       "triangular solve", "Bernoulli's formula", "prime 3 <= p <= derby cap",
       _primes_from(3, 101))
def _(p: int) -> Outcome:
    d = fh.derby_coefficients(p)
    lhs = [sum(c * (p - 1) ** i for i, c in enumerate(d, start=1)), d[1], *d]
    rhs = [fh.sum_powers_exact(p - 1, p), Fraction(p, 2) * bern.bernoulli_exact(p - 1),
           *fh.derby_bernoulli_form(p)]
    return Outcome(lhs, rhs, "exact")


@claim("faulhaber.eq10", "S_{2l} = (1/2) p c_1(l)/(2l+1) mod p^2", 2,
       "even power sums from the leading Faulhaber coefficient", "modular power sum",
       "Faulhaber coefficient", "prime 5 <= p <= 53; 1 <= l <= (p-3)/2", _primes_from(5, 53))
def _(p: int) -> Outcome:
    items = []
    for l in range(1, (p - 3) // 2 + 1):
        s = ResidueModPk(p, 2, modops.sum_powers(p - 1, 2 * l, p * p))
        c = rational_mod_pk(Fraction(p, 2) * fh.faulhaber_coeff(1, l) / (2 * l + 1), p, 2)
        items.append((l, s, c))
    lhs, rhs, d = _pairwise(items, "l")
    return Outcome(lhs, rhs, _mod(p, 2), d)


@claim("faulhaber.eq56", "sum k^{p-1} = pB_{p-1} mod p^2", 2,
       "Bernoulli's formula reduced mod p^2", "modular power sum", "exact Bernoulli",
       "prime p >= 5", _primes_from(5))
def _(p: int) -> Outcome:
    return Outcome(ResidueModPk(p, 2, modops.sum_powers(p - 1, p - 1, p * p)),
                   bern.pB_residue(1, p, 2), _mod(p, 2))


# ---------------------------------------------------------------- stirling


def _stirling_vs_exact(method: str, power: int, ks: Callable[[int], range]):
    def run(p: int) -> Outcome:
        items = [(k, st.stirling_mod(p, k, "exact", power), st.stirling_mod(p, k, method, power))
                 for k in ks(p)]
        lhs, rhs, d = _pairwise(items, "k")
        return Outcome(lhs, rhs, _mod(p, power), d)
    return run


claim("stirling.theorem3", "[p over k] = S_{p-1,p-k} - H_{p-1,k-1} mod p^2", 2,
      "Stirling numbers from power sums minus harmonic sums", "exact Stirling row",
      "power sum minus harmonic sum", "prime p >= 5; 2 <= k <= p-1",
      _primes_from(5))(_stirling_vs_exact("theorem3", 2, lambda p: range(2, p)))
claim("stirling.corollary2", "[p over k] mod p^2 by parity cases", 2,
      "Glaisher 1900 / Sun 2000 case table for [p over k] mod p^2", "exact Stirling row",
      "Bernoulli case table", "prime p >= 5; 2 <= k <= p-1",
      _primes_from(5))(_stirling_vs_exact("corollary2", 2, lambda p: range(2, p)))


@claim("stirling.glaisher_result2", "A_1/p = -1/2, A_odd/p = 0, A_{2j}/p = -B_{2j}/(2j) mod p",
       2, "Glaisher 1900 elementary symmetric functions of 1..p-1", "exact Stirling row",
       "Bernoulli residues", "prime p >= 5; 1 <= r <= p-2", _primes_from(5))
def _(p: int) -> Outcome:
    items = [(r, ResidueModPk(p, 2, st.glaisher_A(p, r)),
              st.stirling_mod(p, p - r, "glaisher_result2", 2)) for r in range(1, p - 1)]
    lhs, rhs, d = _pairwise(items, "r")
    return Outcome(lhs, rhs, _mod(p, 2), d)


def _odd_sides(fn: Callable[[int, int], tuple], rs: Callable[[int], range], name: str):
    def run(p: int) -> Outcome:
        items = [(r, *fn(p, r)) for r in rs(p)]
        lhs, rhs, d = _pairwise(items, name)
        return Outcome(lhs, rhs, _mod(p, 3), d)
    return run


claim("stirling.result3", "A_r = (p(p-r)/2) A_{r-1} mod p^3, odd r", 3,
      "Glaisher 1900 lift of odd-index A_r", "exact A_r", "scaled A_{r-1}",
      "prime p >= 7; odd 3 <= r <= p-2",
      _primes_from(7))(_odd_sides(st.result3_sides, lambda p: range(3, p - 1, 2), "r"))
claim("stirling.result4", "A_r = (p^2 r/(2(r-1))) B_{r-1} mod p^3, odd r", 3,
      "Glaisher 1900 Bernoulli form of odd-index A_r", "exact A_r", "Bernoulli value",
      "prime p >= 7; odd 3 <= r <= p-2",
      _primes_from(7))(_odd_sides(st.result4_sides, lambda p: range(3, p - 1, 2), "r"))
claim("stirling.eq23", "A_{p-1-r} = (p^2(r+1)/(2(r+2))) B_{p-r-2} mod p^3, odd r", 3,
      "reflected odd-index Glaisher form", "exact A_{p-1-r}", "Bernoulli value",
      "prime p >= 7; odd 1 <= r <= p-4",
      _primes_from(7))(_odd_sides(st.eq23_sides, lambda p: range(1, p - 3, 2), "r"))


@claim("stirling.eq27_30", "A_r mod p^3 with the Bernoulli convolution", 3,
       "mod p^3 table: A_1, A_2, odd A_{2k+1}, even A_{2k} with sum B_{2r}B_{2k-2r}/(2r)",
       "exact Stirling row", "Bernoulli convolution formulas", "prime p >= 7",
       _primes_from(7))
def _(p: int) -> Outcome:
    items = []
    for r in range(1, p):
        try:
            route = st.stirling_mod(p, p - r, "eq27_30", 3)
        except IndexUnsupported:
            continue
        items.append((r, ResidueModPk(p, 3, st.glaisher_A(p, r)), route))
    lhs, rhs, d = _pairwise(items, "r")
    return Outcome(lhs, rhs, _mod(p, 3), d)


@claim("stirling.sun_eq25", "A_k = ((-1)^{k-1}/k) pB_k mod p^2", 2,
       "Sun 2000: Stirling numbers mod p^2 through pB_k", "exact A_k", "Bernoulli value",
       "prime p >= 5; 1 <= k <= p-1", _primes_from(5))
def _(p: int) -> Outcome:
    items = [(k, *st.sun_eq25_sides(p, k)) for k in range(1, p)]
    lhs, rhs, d = _pairwise(items, "k")
    return Outcome(lhs, rhs, _mod(p, 2), d)


@claim("stirling.eq11", "A_k = ((-1)^{k-1}/k) S_k mod p^2", 2,
       "Newton's identities truncated mod p^2", "exact A_k", "modular power sum",
       "prime p >= 5; 1 <= k <= p-1", _primes_from(5))
def _(p: int) -> Outcome:
    items = [(k, *st.sun_eq11_sides(p, k)) for k in range(1, p)]
    lhs, rhs, d = _pairwise(items, "k")
    return Outcome(lhs, rhs, _mod(p, 2), d)


@claim("stirling.newton_eq8", "Newton's identities tie A_k to power sums exactly", "exact",
       "Newton's identities for elementary symmetric functions of 1..p-1",
       "Stirling row", "recursion in power sums", "prime 3 <= p <= 61", _primes_from(3, 61))
def _(p: int) -> Outcome:
    lhs, rhs = st.newton_sides(p)
    return Outcome(lhs, rhs, "exact")


@claim("stirling.eq58_59", "[p over k] = +-(S_{p-1,p-k} - H_{p-1,k-1}) mod p^2", 2,
       "signed power-sum/harmonic difference, sign flipping with parity of k",
       "exact Stirling row", "signed difference", "prime p >= 5; 2 <= k <= p-1",
       _primes_from(5))
def _(p: int) -> Outcome:
    items = [(k, *st.eq58_59_sides(p, k)) for k in range(2, p)]
    lhs, rhs, d = _pairwise(items, "k")
    return Outcome(lhs, rhs, _mod(p, 2), d)


# ---------------------------------------------------------------- harmonic


def _harmonic_rows(method: str, ms: Callable[[int], range]):
    def run(p: int) -> Outcome:
        items, powers = [], set()
        for m in ms(p):
            k = st.harmonic_row_power(p, m, method)
            powers.add(k)
            items.append((m, st.harmonic_mod(p, m, "exact", k), st.harmonic_mod(p, m, method, k)))
        lhs, rhs, d = _pairwise(items, "m")
        return Outcome(lhs, rhs, "|".join(_mod(p, k) for k in sorted(powers, reverse=True)), d)
    return run


claim("harmonic.glaisher_thm4", "H_m = (-1)^m m A_{p-1-m}, alternating p^3/p^2; J rows", 3,
      "Glaisher 1900 table of H_1..H_{p-1} with J = -1 + B_{p-1} + 1/p",
      "exact harmonic", "Stirling/J rows", "prime p >= 7; 1 <= m <= p-1",
      _primes_from(7))(_harmonic_rows("glaisher_thm4", lambda p: range(1, p)))
claim("harmonic.glaisher_thm5", "H_{p-1,m} via pB_{p-1-m} (even m) or p^2 B_{p-2-m} (odd m)", 3,
      "Glaisher 1900 harmonic sums in Bernoulli form, p >= m + 3",
      "exact harmonic", "Bernoulli form", "prime p >= 5; 1 <= m <= min(20, p-3)",
      _primes_from(5))(_harmonic_rows("glaisher_thm5", lambda p: range(1, min(20, p - 3) + 1)))
claim("harmonic.corollary3", "H_{p-1,p-k-1} = (1 + (-1)^k/k) S_k mod p^2", 2,
      "harmonic sums through power sums S_k, 1 <= k <= p-2", "exact harmonic",
      "power sum", "prime p >= 5; 1 <= m <= p-2",
      _primes_from(5))(_harmonic_rows("corollary3", lambda p: range(1, p - 1)))
claim("harmonic.corollary4", "H_{p-1,k} = 0 mod p^2 for odd k <= p-2", 2,
      "odd-order harmonic sums vanish mod p^2", "exact harmonic", "constant 0",
      "prime p >= 5; odd 1 <= m <= p-2",
      _primes_from(5))(_harmonic_rows("corollary4", lambda p: range(1, p - 1, 2)))
claim("harmonic.corollary5", "H_{p-1,p-k-1} = (1 + (-1)^k/k) pB_k mod p^2", 2,
      "harmonic sums through pB_k, 1 <= k <= p-2", "exact harmonic", "Bernoulli value",
      "prime p >= 5; 1 <= m <= p-2",
      _primes_from(5))(_harmonic_rows("corollary5", lambda p: range(1, p - 1)))
claim("harmonic.sun_cor51", "H_{p-1,k-1} = ((k-1)/k) pB_{p-k} mod p^2", 2,
      "Sun 2000 harmonic sums mod p^2", "exact harmonic", "Bernoulli value",
      "prime p >= 5; 1 <= m <= p-3",
      _primes_from(5))(_harmonic_rows("sun_cor51", lambda p: range(1, p - 2)))


@claim("harmonic.eq13", "H_{p-1,p-2} = 0 mod p^2", 2,
       "boundary row of the power-sum harmonic formula at k = 1", "exact harmonic",
       "constant 0", "prime p >= 5", _primes_from(5))
def _(p: int) -> Outcome:
    return Outcome(st.harmonic_mod(p, p - 2, "exact", 2), ResidueModPk(p, 2, 0), _mod(p, 2))


@claim("harmonic.bayat", "v_p(H_{p-1,m}) >= 1 (even m) or >= 2 (odd m)", 2,
       "Bayat 1997 valuations of generalized harmonic numbers, p >= m + 3",
       "min(v_p(H), required)", "required valuation", "prime p >= 5; 1 <= m <= min(20, p-3)",
       _primes_from(5))
def _(p: int) -> Outcome:
    items = []
    for m in range(1, min(20, p - 3) + 1):
        need = 2 if m % 2 else 1
        items.append((m, min(int(vp(st.harmonic_exact(p - 1, m).numerator, p)), need), need))
    lhs, rhs, d = _pairwise(items, "m")
    return Outcome(lhs, rhs, _mod(p, 2), d)


@claim("harmonic.wolstenholme", "H_{p-1,1} = 0 mod p^2", 2,
       "Wolstenholme 1862", "modular harmonic sum", "constant 0", "prime p >= 5",
       _primes_from(5))
def _(p: int) -> Outcome:
    return Outcome(st.harmonic_mod(p, 1, "modular", 2), ResidueModPk(p, 2, 0), _mod(p, 2))


@claim("harmonic.wolstenholme_binomial", "C(2p-1, p-1) = 1 mod p^3", 3,
       "Wolstenholme 1862 binomial form", "exact binomial", "constant 1", "prime p >= 5",
       _primes_from(5))
def _(p: int) -> Outcome:
    a, b = st.wolstenholme_binomial_sides(p)
    return Outcome(a, b, _mod(p, 3))


@claim("harmonic.wolstenholme_quotient", "W_p = -(2/3) B_{p-3} mod p", 1,
       "Glaisher: Wolstenholme quotient in Bernoulli form", "exact quotient",
       "Bernoulli residue", "prime p >= 7", _primes_from(7))
def _(p: int) -> Outcome:
    a, b = st.wolstenholme_quotient_sides(p)
    return Outcome(a, b, _mod(p, 1))


def _binomial_mod_p4(p: int) -> int:
    m = p**4
    num = den = 1
    for j in range(1, p):
        num = num * (p + j) % m
        den = den * j % m
    return num * pow(den, -1, m) % m


@claim("harmonic.wolstenholme_prime", "H_{p-1,1} = 0 mod p^3 iff H_{p-1,2} = 0 mod p^2 iff "
       "C(2p-1,p-1) = 1 mod p^4", 3,
       "Wolstenholme primes: equivalent characterizations", "modular harmonic sums",
       "binomial mod p^4", "prime p >= 5", _primes_from(5))
def _(p: int) -> Outcome:
    h1 = modops.harmonic(p - 1, 1, p, 3) == 0
    h2 = modops.harmonic(p - 1, 2, p, 2) == 0
    b = _binomial_mod_p4(p) == 1
    return Outcome([h1, h2], [b, b], _mod(p, 3), {"wolstenholme_prime": _fmt(b)})


# ---------------------------------------------------------------- giuga


def _squarefree_composite(n: int) -> bool:
    if n < 4 or n > 400:
        return False
    prof = gg.classify(n)
    return prof.is_squarefree and not prof.is_prime


@claim("giuga.prop1", "n B_{n-1} != 0 mod n iff some p | n has p-1 | n-1", 1,
       "squarefree composite n: nonvanishing of n B_{n-1} mod n and Korselt at some prime",
       "residue test", "divisibility test", "squarefree composite n <= 400",
       _squarefree_composite, domain="integers")
def _(n: int) -> Outcome:
    a, b = gg.prop1_sides(n)
    return Outcome(a, b, f"{n}")


@claim("giuga.lemma2", "pB_{n-1} mod p is -1 or 0 by p-1 | n-1", 1,
       "von Staudt-Clausen split of pB_{n-1} mod p", "exact Bernoulli residue",
       "divisibility prediction", "prime p <= 50; 2 <= n <= 200", _primes_from(2, 50))
def _(p: int) -> Outcome:
    items = [(n, *gg.lemma2_sides(p, n)) for n in range(2, 201)]
    lhs, rhs, d = _pairwise(items, "n")
    return Outcome(lhs, rhs, _mod(p, 1), d)


@claim("giuga.corollary7", "some Carmichael-at prime does not divide N(B_{n-1})", 1,
       "squarefree composite n Carmichael at some prime", "numerator test", "constant true",
       "squarefree composite n <= 400 Carmichael at some prime",
       lambda n: _squarefree_composite(n) and bool(gg.classify(n).carmichael_at),
       domain="integers")
def _(n: int) -> Outcome:
    return Outcome(gg.corollary7_holds(n), True, f"{n}")


@claim("giuga.fact1", "p | N(B_{m-1}) for n = pm odd squarefree, p | m-1, p-1 not | m-1", 1,
       "Kummer congruence ingredient for odd Giuga candidates", "numerator divisibility",
       "constant true", "prime p >= 3; m <= 400", _primes_from(3, 400))
def _(p: int) -> Outcome:
    cases = [c for c in gg.fact1_cases(400) if c.p == p]
    items = [(c.m, c.divides_numerator, True) for c in cases]
    lhs, rhs, d = _pairwise(items, "m")
    return Outcome(lhs, rhs, _mod(p, 1), d)


@claim("giuga.equivalence_e", "p-1 | n-1 iff p-1 | n/p - 1", "exact",
       "Korselt at p: n - 1 = (n/p - 1) + (p - 1) n/p", "n - 1 test", "n/p - 1 test",
       "prime p >= 2", _primes_from(2))
def _(p: int) -> Outcome:
    rng = random.Random(p)
    pairs = [gg.equivalence_e(p, rng.randint(2, 10**6)) for _ in range(100)]
    return Outcome([a for a, _ in pairs], [b for _, b in pairs], "exact")


@claim("giuga.korselt", "a^n = a mod n for Carmichael n, bases 2..50", "exact",
       "Korselt 1899 criterion", "modular powers", "base itself",
       "Carmichael n", lambda n: 561 <= n <= 10**6 and gg.classify(n).is_carmichael,
       domain="integers")
def _(n: int) -> Outcome:
    bases = range(2, 51)
    return Outcome([pow(a, n, n) for a in bases], [a % n for a in bases], f"{n}")


@claim("giuga.conjecture1", "n B_{n-1} = -1 mod n iff n prime", 1,
       "Agoh 1990, Giuga 1950 conjecture", "exact residue test", "primality test",
       "2 <= n <= 400", lambda n: 2 <= n <= 400, domain="integers", report_only=True)
def _(n: int) -> Outcome:
    r = gg.agoh_giuga_residue(n)
    return Outcome(r == (n - 1) % n, is_prime(n), f"{n}", {"residue": str(r)})


# ---------------------------------------------------------------- q-analogs


# Exact polynomial reduction over the rationals grows quickly with p.
Q_PRIME_LIMIT = 31
def _q(p: int, j: int) -> str:
    return f"[{p}]_q^{j}"


def _q_items(pairs: list[tuple[Any, qa.QCongruenceSide, qa.QCongruenceSide]], name: str):
    items = [(i, a.value, b.value) for i, a, b in pairs]
    return _pairwise(items, name)


@claim("q.andrews", "H_{p-1}(q) = ((p-1)/2)(1-q) mod [p]_q", "q^1",
       "Andrews 1999 q-Wolstenholme", "reduced q-harmonic sum", "closed form",
       "prime 3 <= p <= 31", _primes_from(3, Q_PRIME_LIMIT))
def _(p: int) -> Outcome:
    a, b = qa.andrews_sides(p)
    return Outcome(a, b, _q(p, 1))


@claim("q.shipan", "Shi-Pan: H_{p-1}(q) mod [p]_q^2 and H_{p-1,2}(q) mod [p]_q", "q^2",
       "Shi and Pan 2007", "reduced q-harmonic sums", "closed forms", "prime 3 <= p <= 31",
       _primes_from(3, Q_PRIME_LIMIT))
def _(p: int) -> Outcome:
    (a1, b1), (a2, b2) = qa.shipan_sides(p)
    lhs, rhs, d = _q_items([("order1", a1, b1), ("order2", a2, b2)], "part")
    return Outcome(lhs, rhs, f"{_q(p, 2)}|{_q(p, 1)}", d)


@claim("q.dilcher", "q-harmonic sums of order k <= 4 via Dilcher determinants", "q^1",
       "Dilcher 2008 determinant formulas", "reduced q-harmonic sums",
       "determinant closed forms", "prime 3 <= p <= 31; 1 <= k <= 4", _primes_from(3, Q_PRIME_LIMIT))
def _(p: int) -> Outcome:
    pairs = []
    for tw in (False, True):
        for k in range(1, 5):
            pairs.append((f"{'t' if tw else ''}{k}", *qa.dilcher_sides(p, k, tw)))
    lhs, rhs, d = _q_items(pairs, "k")
    return Outcome(lhs, rhs, _q(p, 1), d)


_CLARK_PAIRS = ((2, 1), (3, 1), (3, 2))


@claim("q.clark", "C(np, mp)_q = C(n, m)_{q^{p^2}} mod [p]_q^2", "q^2",
       "Clark 1995 q-Lucas refinement", "Gaussian binomial", "substituted binomial",
       "prime 3 <= p <= 31; (n,m) in (2,1),(3,1),(3,2)", _primes_from(3, Q_PRIME_LIMIT))
def _(p: int) -> Outcome:
    lhs, rhs, d = _q_items([(f"{n}{m}", *qa.clark_sides(p, n, m)) for n, m in _CLARK_PAIRS],
                           "nm")
    return Outcome(lhs, rhs, _q(p, 2), d)


@claim("q.straub", "C(2p,p)_q = [2]_{q^{p^2}} - ((p^2-1)/12)(q^p-1)^2 mod [p]_q^3", "q^3",
       "Straub 2011 q-Wolstenholme", "Gaussian binomial", "closed form", "prime 5 <= p <= 31",
       _primes_from(5, Q_PRIME_LIMIT))
def _(p: int) -> Outcome:
    lhs = qa.reduce_side(qa.q_binomial(2 * p, p), p, 3)
    two = qa.q_integer(2).compose_power(p * p)
    corr = ((RationalPolynomial.monomial(p) - 1) ** 2).scale(Fraction(p * p - 1, 12))
    return Outcome(lhs, qa.reduce_side(two - corr, p, 3), _q(p, 3))


@claim("q.straub_general", "Straub's mod [p]_q^3 refinement of Clark for small (n, m)", "q^3",
       "Straub 2011 general pairs with C(n,m+1)C(m+1,2) correction", "Gaussian binomial",
       "corrected substituted binomial", "prime 5 <= p <= 31", _primes_from(5, Q_PRIME_LIMIT))
def _(p: int) -> Outcome:
    lhs, rhs, d = _q_items([(f"{n}{m}", *qa.straub_sides(p, n, m)) for n, m in _CLARK_PAIRS],
                           "nm")
    return Outcome(lhs, rhs, _q(p, 3), d)


@claim("q.andrews_binomial", "C(2p-1, p-1)_q = q^{p(p-1)/2} mod [p]_q^2", "q^2",
       "Andrews 1999 q-binomial", "Gaussian binomial", "monomial", "prime 3 <= p <= 31",
       _primes_from(3, Q_PRIME_LIMIT))
def _(p: int) -> Outcome:
    a, b = qa.andrews_binomial_sides(p)
    return Outcome(a, b, _q(p, 2))


@claim("q.lucas", "C(n,m) = prod C(n_i, m_i) mod p", 1,
       "Lucas 1878", "exact binomial", "digit product", "prime p >= 2", _primes_from(2))
def _(p: int) -> Outcome:
    pairs = qa.random_pairs(p)
    return Outcome([math.comb(n, m) % p for n, m in pairs],
                   [qa.lucas_product(n, m, p) for n, m in pairs], _mod(p, 1))


@claim("q.kummer_carry", "v_p(C(n,m)) equals the number of base-p carries", "exact",
       "Kummer 1852 carries", "valuation", "carry count", "prime p >= 2", _primes_from(2))
def _(p: int) -> Outcome:
    pairs = qa.random_pairs(p)
    return Outcome([int(vp(math.comb(n, m), p)) for n, m in pairs],
                   [qa.kummer_carries(n, m, p) for n, m in pairs], "exact")


@claim("q.helou_terjanian", "C(np, mp) = C(n, m) mod p^s, s = v_p(p^3 m(n-m)C(n,m))", "p^s",
       "Helou and Terjanian 2008", "exact binomial difference", "constant 0 mod p^s",
       "prime p >= 5; n <= 8", _primes_from(5))
def _(p: int) -> Outcome:
    lhs, rhs, bad = [], [], []
    for n in range(1, 9):
        for m in range(n + 1):
            s = qa.helou_terjanian_s(p, n, m)
            diff = math.comb(n * p, m * p) - math.comb(n, m)
            lhs.append(diff if s == math.inf else diff % p ** int(s))
            rhs.append(0)
            if lhs[-1]:
                bad.append(f"{n},{m}")
    return Outcome(lhs, rhs, f"{p}^s", {"failing_nm": ";".join(bad)} if bad else {})


# ---------------------------------------------------------------- running


def get_claim(id: str) -> Claim:
    try:
        return REGISTRY[id]
    except KeyError:
        raise UnknownClaim(f"unknown claim {id!r}") from None


def claim_ids(power: int | str | None = None) -> list[str]:
    return sorted(i for i, c in REGISTRY.items() if power is None or c.power == power)


def run_claim(id: str, p: int, deterministic: bool = False) -> CongruenceReport:
    c = get_claim(id)
    if not c.admissible(p):
        raise PreconditionViolated(f"{id} needs {c.precondition}; got {p}")
    t0 = time.perf_counter_ns()
    out = c.evaluate(p)
    ns = 0 if deterministic else time.perf_counter_ns() - t0
    lhs, rhs = _fmt(out.lhs), _fmt(out.rhs)
    return CongruenceReport(id, p, out.modulus, lhs, rhs, lhs == rhs, ns, c.report_only,
                            dict(out.detail))


def _safe_run(args: tuple[str, int, bool]) -> CongruenceReport:
    id, p, det = args
    try:
        return run_claim(id, p, det)
    except CongruenceError as exc:
        return CongruenceReport(id, p, "", "", "", False, 0, get_claim(id).report_only,
                                {"error": f"{type(exc).__name__}: {exc}"})


def admissible_values(id: str, lo: int, hi: int) -> list[int]:
    c = get_claim(id)
    values = primes_between(lo, hi) if c.domain == "primes" else range(max(lo, 0), hi + 1)
    return [v for v in values if c.admissible(v)]


def sweep(id: str, lo: int, hi: int, parallelism: int = 1,
          deterministic: bool = False) -> list[CongruenceReport]:
    """Reports for every admissible value in [lo, hi], in ascending order."""
    get_claim(id)
    jobs = [(id, v, deterministic) for v in admissible_values(id, lo, hi)]
    if parallelism <= 1 or len(jobs) <= 1:
        return [_safe_run(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=parallelism) as pool:
        return list(pool.map(_safe_run, jobs, chunksize=max(1, len(jobs) // (4 * parallelism))))


def self_test() -> list[str]:
    """Registry problems: duplicate anchors or a claim whose sides share a route."""
    problems = []
    seen: dict[str, str] = {}
    for c in REGISTRY.values():
        if c.anchor in seen:
            problems.append(f"{c.id} shares its anchor with {seen[c.anchor]}")
        seen[c.anchor] = c.id
        if c.lhs_route == c.rhs_route:
            problems.append(f"{c.id} uses the same route on both sides")
    return problems
