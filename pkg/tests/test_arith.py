from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from congruence.arith import (
    PadicValue,
    RationalPolynomial,
    ResidueModPk,
    base_digits,
    binom,
    det_bareiss,
    is_prime,
    mod_m,
    padic_of_rational,
    poly_inverse_mod,
    primes_between,
    primes_upto,
    rational_mod_pk,
    vp,
    vp_rational,
)
from congruence.errors import DenominatorNotInvertible, ModulusMismatch, NotCoprime

import oracles

SMALL_PRIMES = [2, 3, 5, 7, 11, 13]
primes = st.sampled_from(SMALL_PRIMES)
powers = st.integers(1, 4)


def coprime_fraction(p: int):
    return st.builds(Fraction, st.integers(-10**6, 10**6),
                     st.integers(1, 10**6).filter(lambda d: d % p))


# ---- examples


def test_rational_mod_pk_examples():
    assert rational_mod_pk(Fraction(-1, 6), 5, 2).value == 4
    assert oracles.rational_mod(Fraction(-1, 6), 25) == 4
    assert rational_mod_pk(Fraction(0), 7, 3).value == 0
    assert rational_mod_pk(Fraction(25, 12), 5, 2).value == 0


def test_rational_mod_pk_rejects_p_in_denominator():
    with pytest.raises(DenominatorNotInvertible):
        rational_mod_pk(Fraction(1, 10), 5, 1)


def test_padic_examples():
    v = padic_of_rational(Fraction(-1, 30), 5, 2)
    assert v.valuation == -1
    assert v.unit.value % 5 == 4
    w = padic_of_rational(Fraction(25, 12), 5, 2)
    assert w.valuation == 2 and w.unit == rational_mod_pk(Fraction(1, 12), 5, 2)
    one = padic_of_rational(1, 11, 3)
    assert one.valuation == 0 and one.unit.value == 1


def test_padic_zero_is_flagged():
    z = padic_of_rational(0, 7, 2)
    assert z.is_zero and z.valuation == math.inf
    assert z.to_residue(3).value == 0
    assert PadicValue.zero(7, 2) == z


def test_poly_inverse_examples():
    one_plus_q = RationalPolynomial.of(1, 1)
    m = RationalPolynomial.of(1, 1, 1)
    assert poly_inverse_mod(one_plus_q, m) == RationalPolynomial.of(0, -1)
    assert poly_inverse_mod(RationalPolynomial.of(1), m) == RationalPolynomial.of(1)
    m2 = m * m
    g = poly_inverse_mod(one_plus_q, m2)
    assert g.degree == 3
    assert (g * one_plus_q) % m2 == RationalPolynomial.of(1)


def test_poly_inverse_not_coprime():
    m = RationalPolynomial.of(-1, 0, 1)  # (q-1)(q+1)
    with pytest.raises(NotCoprime):
        poly_inverse_mod(RationalPolynomial.of(1, 1), m)


def test_residue_rejects_mixed_moduli_and_composites():
    a = ResidueModPk(5, 2, 3)
    with pytest.raises(ModulusMismatch):
        a + ResidueModPk(5, 3, 3)
    with pytest.raises(ValueError):
        ResidueModPk(6, 1, 1)
    assert ResidueModPk(5, 2, -1).value == 24
    assert ResidueModPk(5, 3, 124).digits() == [4, 4, 4]
    assert str(ResidueModPk(7, 2, 50)) == "1"


def test_residue_inverse_and_reduce():
    a = ResidueModPk(7, 3, 10)
    assert (a * a.inverse()).value == 1
    assert a.reduce(1).value == 3
    with pytest.raises(DenominatorNotInvertible):
        ResidueModPk(7, 2, 14).inverse()


def test_primality_against_trial_division():
    assert [n for n in range(200) if is_prime(n)] == [n for n in range(200)
                                                      if oracles.is_prime_naive(n)]
    assert primes_upto(100) == [n for n in range(101) if oracles.is_prime_naive(n)]
    assert primes_between(90, 110) == [97, 101, 103, 107, 109]
    assert is_prime(2**61 - 1) and not is_prime(3215031751)


def test_valuations_and_digits():
    assert vp(250, 5) == 3 and vp(0, 5) == math.inf
    assert vp_rational(Fraction(3, 50), 5) == -2
    assert base_digits(100, 7) == [2, 0, 2]


def test_generalized_binomial():
    assert binom(5, 2) == 10 and binom(5, 7) == 0 and binom(5, -1) == 0
    assert binom(-3, 2) == 6  # (-3)(-4)/2
    assert binom(-7 + 1, 2) == 21


def test_det_matches_cofactor():
    rows = [[2, -1, 0, 3], [1, 4, 2, 0], [0, 5, -2, 1], [3, 0, 1, 1]]
    assert det_bareiss(rows) == oracles.det_cofactor(rows)
    assert det_bareiss([[0, 1], [1, 0]]) == -1


# ---- properties


@given(primes, powers, st.data())
def test_reduction_is_a_ring_homomorphism(p, k, data):
    x = data.draw(coprime_fraction(p))
    y = data.draw(coprime_fraction(p))
    rx, ry = rational_mod_pk(x, p, k), rational_mod_pk(y, p, k)
    assert rational_mod_pk(x + y, p, k) == rx + ry
    assert rational_mod_pk(x * y, p, k) == rx * ry
    assert rational_mod_pk(x - y, p, k) == rx - ry


@given(primes, powers, st.data())
def test_padic_reconstruction_agrees(p, k, data):
    x = data.draw(coprime_fraction(p))
    assume(x != 0)
    v = padic_of_rational(x, p, k)
    assert v.valuation >= 0
    if v.valuation < k:
        assert v.to_residue(min(k, v.valuation + k)).reduce(k) == rational_mod_pk(x, p, k)


@given(st.integers(-10**9, 10**9), st.integers(2, 10**6))
def test_mod_m_matches_python(a, m):
    assert mod_m(Fraction(a), m) == a % m


small_poly = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6),
                      min_size=1, max_size=9)


@given(small_poly, small_poly)
def test_poly_inverse_round_trip(fc, mc):
    f, m = RationalPolynomial(tuple(fc)), RationalPolynomial(tuple(mc))
    assume(m.degree >= 1 and not (f % m).is_zero())
    try:
        g = poly_inverse_mod(f, m)
    except NotCoprime:
        return
    assert g.degree < m.degree
    assert (f * g) % m == RationalPolynomial.of(1)


@given(small_poly, small_poly)
def test_polynomial_division_identity(ac, bc):
    a, b = RationalPolynomial(tuple(ac)), RationalPolynomial(tuple(bc))
    assume(not b.is_zero())
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(small_poly, st.integers(1, 5), st.fractions(-3, 3, max_denominator=4))
def test_compose_power_evaluates(c, e, x):
    f = RationalPolynomial(tuple(c))
    assert f.compose_power(e)(x) == f(x**e)
