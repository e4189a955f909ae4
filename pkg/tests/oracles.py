"""Independent reference implementations used only by the tests.

None of these import from the package; each takes the slowest obvious route.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction


def bernoulli_akiyama_tanigawa(n: int) -> Fraction:
    """B_n with B_1 = +1/2 via the Akiyama-Tanigawa triangle."""
    a = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
    return a[0]


def inverse_exhaustive(b: int, m: int) -> int:
    """The unique x in [0, m) with b x = 1 mod m, by scanning."""
    hits = [x for x in range(m) if b * x % m == 1]
    assert len(hits) == 1
    return hits[0]


def rational_mod(x: Fraction, m: int) -> int:
    return x.numerator * inverse_exhaustive(x.denominator % m, m) % m


def brute_force_root(k: int, p: int, precision: int) -> int:
    """The x in [0, p^precision) with x = k mod p and x^{p-1} + (p-1)! = 0 mod p^precision."""
    assert p <= 31
    m = p**precision
    f = math.factorial(p - 1)
    hits = [x for x in range(k, m, p) if (x ** (p - 1) + f) % m == 0]
    assert len(hits) == 1
    return hits[0]


def stirling_row_naive(n: int) -> list[int]:
    """Coefficients of x(x+1)...(x+n-1), i.e. [n over s] for s = 0..n."""
    poly = [1]
    for i in range(n):
        new = [0] * (len(poly) + 1)
        for s, c in enumerate(poly):
            new[s + 1] += c
            new[s] += i * c
        poly = new
    return poly


def stirling_by_cycles(n: int, s: int) -> int:
    """Count permutations of n elements with s cycles (tiny n only)."""
    count = 0
    for perm in itertools.permutations(range(n)):
        seen, cycles = set(), 0
        for i in range(n):
            if i not in seen:
                cycles += 1
                j = i
                while j not in seen:
                    seen.add(j)
                    j = perm[j]
        count += cycles == s
    return count


def harmonic_naive(n: int, m: int) -> Fraction:
    return sum((Fraction(1, j**m) for j in range(1, n + 1)), Fraction(0))


def det_cofactor(rows: list[list]) -> Fraction:
    """Laplace expansion along the first row."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * Fraction(rows[0][j]) * det_cofactor(minor)
    return total


# ---- dense integer polynomial helpers (coefficient lists, index = degree)


def poly_mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_exact_div(a: list, b: list) -> list:
    """a / b for exact division over the integers (b monic up to sign)."""
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = Fraction(a[i + len(b) - 1], b[-1])
        assert c.denominator == 1
        q[i] = int(c)
        for j, y in enumerate(b):
            a[i + j] -= q[i] * y
    assert not any(a)
    return q


def q_factorial(n: int) -> list[int]:
    out = [1]
    for k in range(1, n + 1):
        out = poly_mul(out, [1] * k)
    return out


def q_binomial_by_division(n: int, m: int) -> list[int]:
    den = poly_mul(q_factorial(m), q_factorial(n - m))
    return poly_exact_div(q_factorial(n), den)


def faulhaber_fit(l: int) -> list[Fraction]:
    """c_1..c_l with sum_{k<=n} k^{2l+1} = sum_i c_i a^{i+1}, a = n(n+1)/2, by solving
    the linear system from n = 1..l."""
    rows, rhs = [], []
    for n in range(1, l + 1):
        a = Fraction(n * (n + 1), 2)
        rows.append([a ** (i + 1) for i in range(1, l + 1)])
        rhs.append(Fraction(sum(k ** (2 * l + 1) for k in range(1, n + 1))))
    return solve(rows, rhs)


def solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gauss-Jordan over the rationals."""
    n = len(rows)
    a = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(rows, rhs)]
    for c in range(n):
        piv = next(i for i in range(c, n) if a[i][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [a[i][n] / a[i][i] for i in range(n)]


def is_prime_naive(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


def prime_factors_naive(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while n > 1:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    return out
