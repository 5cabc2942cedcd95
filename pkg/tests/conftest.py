"""Shared independent oracles for the test suite.

Everything here is deliberately written from scratch against the textbook
definitions (no imports from the package under test) so the tests compare
two genuinely different computations.
"""

from fractions import Fraction
from math import gcd


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    num = list(num)
    q = [0] * max(1, len(num) - len(den) + 1)
    while len(num) >= len(den) and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) < len(den):
            break
        shift = len(num) - len(den)
        c, lead = num[-1], den[-1]
        assert c % lead == 0, "oracle division must stay integral"
        f = c // lead
        q[shift] = f
        for i, x in enumerate(den):
            num[shift + i] -= f * x
    while num and num[-1] == 0:
        num.pop()
    return q, num


def mobius(m: int) -> int:
    if m == 1:
        return 1
    result, p = 1, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def mobius_cyclotomic(n: int) -> list[int]:
    """Phi_n by the Moebius product: prod over d | n of (x^(n/d) - 1)^mu(d)."""
    num, den = [1], [1]
    for d in range(1, n + 1):
        if n % d:
            continue
        mu = mobius(d)
        factor = [-1] + [0] * (n // d - 1) + [1]       # x^(n/d) - 1
        if mu == 1:
            num = poly_mul(num, factor)
        elif mu == -1:
            den = poly_mul(den, factor)
    q, r = poly_divmod(num, den)
    assert not r, "Moebius product must divide exactly"
    return q


def brute_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def cofactor_det(rows) -> Fraction:
    """Textbook Laplace expansion; fine up to 5x5."""
    m = len(rows)
    assert all(len(r) == m for r in rows)
    if m == 0:
        return Fraction(1)
    if m == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    sign = 1
    for j in range(m):
        if rows[0][j] != 0:
            minor = [[rows[i][k] for k in range(m) if k != j] for i in range(1, m)]
            total += sign * Fraction(rows[0][j]) * cofactor_det(minor)
        sign = -sign
    return total
