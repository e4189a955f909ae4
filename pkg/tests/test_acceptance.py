"""Acceptance criteria 1-13, one test each, exact equality throughout.

Every test prints a single ``ACCEPTANCE <n> PASS|FAIL`` line and then asserts
the same verdict, so ``pytest -v`` output carries both.
"""
from __future__ import annotations

import math
import random
import time
from fractions import Fraction

import pytest

from congruence import bernoulli as bn
from congruence import faulhaber as fh
from congruence import giuga as gg
from congruence import qanalog as qa
from congruence import stirling as sh
from congruence import wilson as wl
from congruence.arith import (
    RationalPolynomial,
    ResidueModPk,
    padic_of_rational,
    poly_inverse_mod,
    primes_between,
    rational_mod_pk,
)
from congruence.errors import IndexUnsupported, NotCoprime

import oracles


def verdict(capsys, n: int, title: str, checked: int, failures: list) -> None:
    status = "PASS" if not failures else "FAIL"
    line = f"ACCEPTANCE {n:2d} {status} {title}: {checked} checks, {len(failures)} failed"
    if failures:
        line += " (first: " + "; ".join(map(str, failures[:4])) + ")"
    with capsys.disabled():
        print("\n" + line)
    assert not failures, line


def factorial_direct(p: int, k: int) -> int:
    m, acc = p**k, 1
    for j in range(2, p):
        acc = acc * j % m
    return acc


# ---------------------------------------------------------------- 1


def test_criterion_01_glaisher_mod_p2(capsys):
    fails, n = [], 0
    for p in primes_between(5, 2000):
        lhs = (bn.pB_residue(1, p, 2) - p).value
        n += 1
        if lhs != factorial_direct(p, 2):
            fails.append(p)
    verdict(capsys, 1, "pB_{p-1} - p = (p-1)! mod p^2, 5 <= p <= 2000", n, fails)


# ---------------------------------------------------------------- 2


def test_criterion_02_wilson_mod_p3(capsys):
    fails, n = [], 0
    methods = ("theorem6", "corollary6", "lemma4", "sun")
    for p in primes_between(5, 500):
        truth = factorial_direct(p, 3)
        got = {m: wl.wilson_predict(p, m).value for m in methods}
        n += len(methods)
        fails += [(p, m) for m, v in got.items() if v != truth]
    spot = wl.wilson_predict(5, "corollary6")
    n += 1
    if (spot.value, spot.modulus) != (24, 125):
        fails.append(("spot p=5", spot.value))
    verdict(capsys, 2, "four mod p^3 Wilson routes = (p-1)! mod p^3, 5 <= p <= 500", n, fails)


# ---------------------------------------------------------------- 3


def test_criterion_03_theorem3_corollary2(capsys):
    fails, n = [], 0
    for p in primes_between(5, 200):
        row = sh.stirling_row(p)
        for k in range(2, p):
            truth = row[k] % (p * p)
            for method in ("theorem3", "corollary2"):
                n += 1
                if sh.stirling_mod(p, k, method, 2).value != truth:
                    fails.append((method, p, k))
    for method in ("exact", "theorem3", "corollary2"):
        n += 1
        if sh.stirling_mod(5, 3, method, 2).value != 10:
            fails.append(("spot [5 over 3]", method))
    verdict(capsys, 3, "Stirling [p over k] mod p^2 by theorem3 and corollary2, 5 <= p <= 200",
            n, fails)


# ---------------------------------------------------------------- 4


def test_criterion_04_glaisher_theorem4(capsys):
    fails, n = [], 0
    for p in primes_between(7, 100):
        for m in range(1, p):
            k = sh.harmonic_row_power(p, m, "glaisher_thm4")
            truth = rational_mod_pk(sh.harmonic_exact(p - 1, m), p, k)
            n += 1
            if sh.harmonic_mod(p, m, "glaisher_thm4", k) != truth:
                fails.append((p, m))
    verdict(capsys, 4, "H_{p-1,m} rows with alternating moduli and J rows, 7 <= p <= 100",
            n, fails)


# ---------------------------------------------------------------- 5


def test_criterion_05_theorem5_and_boundary(capsys):
    fails, n = [], 0
    for p in primes_between(5, 200):
        for m in range(1, min(20, p - 3) + 1):
            k = sh.harmonic_row_power(p, m, "glaisher_thm5")
            truth = rational_mod_pk(sh.harmonic_exact(p - 1, m), p, k)
            n += 1
            if sh.harmonic_mod(p, m, "glaisher_thm5", k) != truth:
                fails.append(("thm5", p, m))
        # boundary row: H_{p-1,p-2} = 0 mod p^2
        n += 1
        h = rational_mod_pk(sh.harmonic_exact(p - 1, p - 2), p, 2)
        if h.value != 0:
            fails.append(("H_{p-1,p-2}", p, h.value))
    verdict(capsys, 5, "harmonic sums via Bernoulli numbers, p <= 200, plus H_{p-1,p-2} = 0 mod p^2",
            n, fails)


# ---------------------------------------------------------------- 6


def test_criterion_06_stirling_mod_p3(capsys):
    fails, n = [], 0
    for p in primes_between(7, 60):
        row = sh.stirling_row(p)
        for k in range(1, p):
            try:
                got = sh.stirling_mod(p, k, "eq27_30", 3)
            except IndexUnsupported:
                continue
            n += 1
            if got.value != row[k] % p**3:
                fails.append((p, k))
    verdict(capsys, 6, "Stirling mod p^3 with the Bernoulli convolution, 7 <= p <= 60", n, fails)


# ---------------------------------------------------------------- 7


def test_criterion_07_kummer_sun_fact2(capsys):
    fails, n = [], 0
    for p in primes_between(5, 200):
        for b in range(2, p - 2, 2):
            for k in range(1, 400 // (p - 1) + 1):
                if k * (p - 1) + b > 400:
                    break
                n += 1
                a, c = bn.kummer_sides(p, b, k)
                if a != c:
                    fails.append(("kummer", p, b, k))
        for k in (1, 2, 3):
            n += 1
            a, c = bn.sun_result6_sides(k, p)
            if a != c:
                fails.append(("result6", p, k))
        n += 1
        a, c = bn.fact2_sides(p)
        if a != c:
            fails.append(("fact2", p))
    verdict(capsys, 7, "Kummer, Sun pB_{k(p-1)} mod p^2, second coefficients, 5 <= p <= 200", n, fails)


# ---------------------------------------------------------------- 8


def test_criterion_08_faulhaber_layer(capsys):
    fails, n = [], 0
    for l in range(1, 7):
        for m in range(1, 11):
            n += 1
            if fh.jacobi_sum(l, m) != fh.sum_powers_exact(m, 2 * l + 1):
                fails.append(("jacobi", l, m))
    for l in range(2, 13):
        n += 1
        if fh.faulhaber_coeff(2, l) != -4 * fh.faulhaber_coeff(1, l):
            fails.append(("trailing", l))
    for l in range(1, 13):
        n += 1
        if fh.gessel_viennot_A(l, l + 1) != 0:
            fails.append(("A_l^(l+1)", l))
    for p in primes_between(3, 50):
        n += 1
        if fh.faulhaber_coeff(1, (p - 1) // 2) != 2 * p * bn.bernoulli_exact(p - 1):
            fails.append(("c_1 = 2pB", p))
        d = fh.derby_coefficients(p)
        n += 2
        if sum(c * (p - 1) ** i for i, c in enumerate(d, start=1)) != fh.sum_powers_exact(p - 1, p):
            fails.append(("derby sum", p))
        if d[1] != Fraction(p, 2) * bn.bernoulli_exact(p - 1):
            fails.append(("derby d_2", p))
    verdict(capsys, 8, "Jacobi, trailing coefficients, A_l^(l+1) = 0, c_1 = 2pB, Derby", n, fails)


# ---------------------------------------------------------------- 9


def test_criterion_09_enumerations(capsys):
    fails = []
    carm = gg.scan("carmichael", 10**4)
    giu = gg.scan("giuga", 2000)
    irr = bn.irregular_primes_below(100)
    if carm != [561, 1105, 1729, 2465, 2821, 6601, 8911]:
        fails.append(("carmichael", carm))
    if giu != [30, 858, 1722]:
        fails.append(("giuga", giu))
    if irr != [37, 59, 67]:
        fails.append(("irregular", irr))
    verdict(capsys, 9, "Carmichael <= 10^4, Giuga <= 2000, irregular < 100", 3, fails)


# ---------------------------------------------------------------- 10


def test_criterion_10_wolstenholme(capsys):
    fails, n = [], 0
    for p in primes_between(5, 500):
        n += 1
        if math.comb(2 * p - 1, p - 1) % p**3 != 1:
            fails.append(("binomial", p))
    for p in primes_between(7, 200):
        n += 1
        a, b = sh.wolstenholme_quotient_sides(p)
        if a != b:
            fails.append(("quotient", p))
    t0 = time.perf_counter()
    certified = sh.is_wolstenholme_prime(16843)
    elapsed = time.perf_counter() - t0
    n += 1
    if not certified or elapsed > 10:
        fails.append(("16843", certified, f"{elapsed:.2f}s"))
    verdict(capsys, 10, f"Wolstenholme binomial, quotient, 16843 certified in {elapsed:.3f}s",
            n, fails)


# ---------------------------------------------------------------- 11


def test_criterion_11_agoh_giuga(capsys):
    bad = gg.agoh_giuga_counterexamples(400)
    verdict(capsys, 11, "n B_{n-1} = -1 mod n iff n prime, 2 <= n <= 400", 399, bad)


# ---------------------------------------------------------------- 12


def test_criterion_12_q_suite(capsys):
    fails, n = [], 0

    def check(tag, a, b):
        nonlocal n
        n += 1
        if a != b:
            fails.append(tag)

    for p in primes_between(3, 29):
        check(("andrews", p), *qa.andrews_sides(p))
    for p in primes_between(3, 19):
        for i, (a, b) in enumerate(qa.shipan_sides(p)):
            check(("shipan", p, i), a, b)
    for p in primes_between(3, 13):
        for k in range(1, 5):
            for tw in (False, True):
                check(("dilcher", p, k, tw), *qa.dilcher_sides(p, k, tw))
        # the untwisted k = 1 row is the same congruence as the Andrews one
        check(("dilcher k=1 vs andrews", p), qa.dilcher_sides(p, 1, False)[1],
              qa.andrews_sides(p)[1])
        check(("andrews binomial", p), *qa.andrews_binomial_sides(p))
    for p in primes_between(5, 13):
        lhs = qa.reduce_side(qa.q_binomial(2 * p, p), p, 3)
        rhs = (qa.q_integer(2).compose_power(p * p)
               - ((RationalPolynomial.monomial(p) - 1) ** 2).scale(Fraction(p * p - 1, 12)))
        check(("straub central", p), lhs, qa.reduce_side(rhs, p, 3))
        for nm in ((2, 1), (3, 1), (3, 2)):
            check(("clark", p, nm), *qa.clark_sides(p, *nm))
            check(("straub", p, nm), *qa.straub_sides(p, *nm))
    for p in primes_between(2, 31):
        for a, b in qa.random_pairs(p):
            c = math.comb(a, b)
            check(("lucas", p, a, b), qa.lucas_product(a, b, p), c % p)
            n_v = 0
            while c % p**(n_v + 1) == 0:
                n_v += 1
            check(("carries", p, a, b), qa.kummer_carries(a, b, p), n_v)
    verdict(capsys, 12, "Andrews, Shi-Pan, Dilcher, Straub, Clark, q-binomial, Lucas, carries",
            n, fails)


# ---------------------------------------------------------------- 13


def _arith_properties() -> list:
    rng = random.Random(20240101)
    bad = []
    for _ in range(1500):
        p = rng.choice([2, 3, 5, 7, 11, 13, 101])
        k = rng.randint(1, 4)

        def frac():
            d = rng.randint(1, 10**6)
            while d % p == 0:
                d = rng.randint(1, 10**6)
            return Fraction(rng.randint(-10**6, 10**6), d)

        x, y = frac(), frac()
        rx, ry = rational_mod_pk(x, p, k), rational_mod_pk(y, p, k)
        if rational_mod_pk(x + y, p, k) != rx + ry or rational_mod_pk(x * y, p, k) != rx * ry:
            bad.append(("ring", p, k, x, y))
        if x:
            v = padic_of_rational(x, p, k)
            if v.valuation < k and v.to_residue(k) != rational_mod_pk(x, p, k):
                bad.append(("padic", p, k, x))
    done = 0
    while done < 300:
        f = RationalPolynomial(tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                                     for _ in range(rng.randint(1, 9))))
        m = RationalPolynomial(tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                                     for _ in range(rng.randint(2, 9))))
        if m.degree < 1 or (f % m).is_zero():
            continue
        try:
            g = poly_inverse_mod(f, m)
        except NotCoprime:
            continue
        done += 1
        if (f * g) % m != RationalPolynomial.of(1):
            bad.append(("poly inverse", f, m))
    return bad


def _bernoulli_properties() -> list:
    bad = [("vsc", n) for n in range(2, 121, 2) if bn.von_staudt_clausen(n).denominator != 1]
    for p in (5, 7, 11, 13):
        for k in (1, 2, 3):
            a, b = bn.sun_result7_sides(k, 0, 2, p)
            if a != b or a != bn.sun_result6_sides(k, p)[0]:
                bad.append(("result7 -> result6", p, k))
    for n in (2, 4, 6, 8, 10, 14):
        if abs(bn.divided_bernoulli(n).numerator) != 1:
            bad.append(("fact4", n))
    if bn.numerator_factors(bn.divided_bernoulli(12)) != {691: 1} or not bn.irregular_pairs(691):
        bad.append(("fact4", 12))
    for m in range(2, 61, 2):
        for p in primes_between(m + 3, 101):
            if bn.bernoulli_mod_p(m, p) != rational_mod_pk(bn.bernoulli_exact(m), p, 1):
                bad.append(("mod_p", m, p))
    bad += [("miki", n) for n in range(4, 51, 2) if not bn.miki_identity_check(n)]
    return bad


def _faulhaber_properties() -> list:
    bad = []
    for l in range(1, 9):
        exp = fh.faulhaber_expansion(l)
        bad += [("expansion", l, n) for n in range(1, 13)
                if exp.evaluate(n) != fh.sum_powers_exact(n, 2 * l + 1)]
    for p in (5, 7, 11, 13, 17):
        l = (p - 1) // 2
        bad += [("p-integral", p, i) for i in range(1, l + 1)
                if fh.faulhaber_coeff(i, l).denominator % p == 0]
    for p in primes_between(5, 50):
        for l in range(1, (p - 3) // 2 + 1):
            s = fh.sum_powers_mod(p, 2, 2 * l)
            r = rational_mod_pk(Fraction(p, 2) * fh.faulhaber_coeff(1, l) / (2 * l + 1), p, 2)
            if s != r or s.value % p:
                bad.append(("S_2l", p, l))
    for p in primes_between(5, 200):
        if fh.sum_powers_mod(p, 2, p - 1) != bn.pB_residue(1, p, 2):
            bad.append(("sum k^{p-1}", p))
    for p in primes_between(2, 31):
        for m in range(0, 41):
            for k in (1, 2, 3):
                if fh.sum_powers_mod(p, k, m).value != fh.sum_powers_exact(p - 1, m) % p**k:
                    bad.append(("sum_powers_mod", p, m, k))
    return bad


def _wilson_properties() -> list:
    bad = []
    for p in primes_between(5, 2000):
        f2 = factorial_direct(p, 2)
        bad += [("mod p^2", p, m) for m in ("glaisher", "theorem1", "theorem2")
                if wl.wilson_predict(p, m).value != f2]
    for p in primes_between(2, 500):
        a, b = wl.inverse_p_minus_1(p)
        if a != b:
            bad.append(("(p-1)^-1", p))
    for p in primes_between(3, 100):
        if wl.root_product(p, 3) != wl.factorial_mod_pk(p, 3):
            bad.append(("root product", p))
    for p in primes_between(3, 31):
        for k in range(1, p):
            if wl.hensel_root(k, p, 3).value != oracles.brute_force_root(k, p, 3):
                bad.append(("hensel", p, k))
    # closed form against the lift's third digit, read literally
    for p in primes_between(5, 50):
        for k in range(1, p):
            if wl.lemma3_t1(k, p) != wl.hensel_root(k, p, 3).digits[2]:
                bad.append(("lemma3 digit", p, k))
    return bad


def _stirling_properties() -> list:
    bad = []
    for n in range(0, 60):
        row = sh.stirling_row(n)
        if list(row) != oracles.stirling_row_naive(n) or sum(row) != math.factorial(n):
            bad.append(("row", n))
    for p in primes_between(5, 200):
        row = sh.stirling_row(p)
        for r in range(1, p - 1):
            if sh.stirling_mod(p, p - r, "glaisher_result2", 2).value != row[p - r] % (p * p):
                bad.append(("result2", p, r))
        for k in range(1, p):
            a, b = sh.sun_eq25_sides(p, k)
            if a != b:
                bad.append(("result5", p, k))
        for m in range(1, p - 1):
            e = sh.harmonic_mod(p, m, "exact" if p <= 100 else "modular", 2)
            for method in ("corollary3", "corollary5") + (("corollary4",) if m % 2 else ()):
                if sh.harmonic_mod(p, m, method, 2) != e:
                    bad.append((method, p, m))
        bad += [("bayat", p, m) for m in range(1, min(20, p - 3) + 1) if not sh.bayat_holds(p, m)]
    for p in primes_between(7, 100):
        for r in range(3, p - 1, 2):
            if sh.result3_sides(p, r)[0] != sh.result3_sides(p, r)[1]:
                bad.append(("result3", p, r))
            if sh.result4_sides(p, r)[0] != sh.result4_sides(p, r)[1]:
                bad.append(("result4", p, r))
        for r in range(1, p - 3, 2):
            a, b = sh.eq23_sides(p, r)
            if a != b:
                bad.append(("eq23", p, r))
    bad += [("newton", p) for p in primes_between(3, 31) if not sh.newton_identity_holds(p)]
    return bad


def _giuga_properties() -> list:
    bad = [("korselt", n) for n in gg.scan("carmichael", 10**5) if not gg.korselt_bases_hold(n)]
    for p, u in gg.random_composites(1000, seed=1):
        a, b = gg.equivalence_e(p, u)
        if a != b:
            bad.append(("E", p, u))
    for p in primes_between(2, 50):
        for n in range(2, 201):
            a, b = gg.lemma2_sides(p, n)
            if a != b:
                bad.append(("lemma2", p, n))
    for n in range(4, 401):
        prof = gg.classify(n)
        if prof.is_squarefree and not prof.is_prime:
            a, b = gg.prop1_sides(n)
            if a != b:
                bad.append(("prop1", n))
    bad += [("conjecture1", n) for n in gg.agoh_giuga_counterexamples(400)]
    bad += [("fact1", c.p, c.m) for c in gg.fact1_cases(400) if not c.divides_numerator]
    return bad


def _qanalog_properties() -> list:
    bad = []
    for n in range(0, 14):
        for m in range(0, n + 1):
            got = [int(c) for c in qa.q_binomial(n, m).coeffs]
            if got != oracles.q_binomial_by_division(n, m):
                bad.append(("q_binomial", n, m))
    for p in primes_between(5, 13):
        for n in range(1, 9):
            for m in range(1, n + 1):
                if not qa.helou_terjanian_holds(p, n, m):
                    bad.append(("helou-terjanian", p, n, m))
    return bad


SUITES = {
    "arith": _arith_properties,
    "bernoulli": _bernoulli_properties,
    "faulhaber": _faulhaber_properties,
    "wilson": _wilson_properties,
    "stirling_harmonic": _stirling_properties,
    "giuga": _giuga_properties,
    "qanalog": _qanalog_properties,
}


def test_criterion_13_module_properties(capsys):
    fails, counts = [], []
    for name, suite in SUITES.items():
        bad = suite()
        counts.append(f"{name}={len(bad)}")
        fails += [(name, *b) for b in bad]
    kinds = sorted({f"{f[0]}:{f[1]}" for f in fails})
    verdict(capsys, 13, "module invariants read literally [" + " ".join(counts) + "]"
            + (f" failing kinds {kinds}" if kinds else ""), len(SUITES), fails)
