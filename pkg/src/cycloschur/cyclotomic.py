"""Cyclotomic polynomials and exact arithmetic in cyclotomic fields.

The n-th cyclotomic polynomial Phi_n is computed by exact division of
x^n - 1 by the lower-level cyclotomic factors, so every coefficient is an
exact integer.  Elements of Q(zeta_n) are stored as rational coordinate
vectors over the power basis 1, zeta, ..., zeta^(phi(n)-1), reduced
modulo Phi_n.

>>> cyclotomic_poly(12).coeffs
(1, 0, -1, 0, 1)
>>> euler_phi(105)
48
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd


def euler_phi(n: int) -> int:
    """Euler totient.

    >>> [euler_phi(n) for n in (1, 2, 12, 105)]
    [1, 1, 4, 48]
    """
    if n < 1:
        raise ValueError("euler_phi requires n >= 1")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            result -= result // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        result -= result // m
    return result


def distinct_prime_factors(n: int) -> tuple[int, ...]:
    """Prime divisors of n in increasing order (empty for n = 1)."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return tuple(out)


def divisors(n: int) -> tuple[int, ...]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def primitive_exponents(n: int) -> tuple[int, ...]:
    """Exponents a with 1 <= a <= n and gcd(a, n) = 1, in increasing order.

    zeta_n^a for a in this list runs over the primitive n-th roots of unity.

    >>> primitive_exponents(8)
    (1, 3, 5, 7)
    >>> primitive_exponents(1)
    (1,)
    """
    if n < 1:
        raise ValueError("primitive_exponents requires n >= 1")
    return tuple(a for a in range(1, n + 1) if gcd(a, n) == 1)


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; coeffs[k] is the coefficient of x^k.

    Trailing zeros are trimmed so the representation is canonical; the zero
    polynomial has an empty coefficient tuple.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs) -> None:
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def x_power_minus_one(cls, n: int) -> "IntPolynomial":
        return cls((-1,) + (0,) * (n - 1) + (1,))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPolynomial(out)

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        """Quotient self / other when the division is exact over Z.

        Raises ArithmeticError if other does not divide self exactly.
        """
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return IntPolynomial(())
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dd = other.degree
        qdeg = self.degree - dd
        if qdeg < 0:
            raise ArithmeticError("division is not exact")
        quot = [0] * (qdeg + 1)
        for k in range(qdeg, -1, -1):
            c = rem[k + dd]
            if c % lead:
                raise ArithmeticError("division is not exact")
            q = c // lead
            quot[k] = q
            if q:
                for j, oc in enumerate(other.coeffs):
                    rem[k + j] -= q * oc
        if any(rem):
            raise ArithmeticError("division is not exact")
        return IntPolynomial(quot)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"IntPolynomial({self.coeffs!r})"


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial, monic of degree phi(n).

    Computed by the divisor chain: divide x^n - 1 exactly by Phi_d for
    every proper divisor d of n.  All arithmetic is exact integer work.

    >>> cyclotomic_poly(1).coeffs
    (-1, 1)
    >>> cyclotomic_poly(6).coeffs
    (1, -1, 1)
    """
    if n < 1:
        raise ValueError("cyclotomic_poly requires n >= 1")
    poly = IntPolynomial.x_power_minus_one(n)
    for d in divisors(n):
        if d != n:
            poly = poly.exact_div(cyclotomic_poly(d))
    return poly


def inverse_cyclotomic_series(n: int, order: int) -> list[int]:
    """Coefficients of the formal power series 1/Phi_n up to degree ``order``.

    For n >= 2 the constant term of Phi_n is 1, so the series is an integer
    sequence starting with 1; its k-th coefficient is the complete homogeneous
    symmetric polynomial h_k evaluated at the primitive n-th roots of unity.
    For n = 1 the plain formal series of 1/(x - 1) is returned, which starts
    at -1 and stays there; that sign is an artifact of Phi_1(0) = -1 and is
    why the h_k reading only applies from n = 2 on.

    >>> inverse_cyclotomic_series(3, 4)
    [1, -1, 0, 1, -1]
    >>> inverse_cyclotomic_series(1, 3)
    [-1, -1, -1, -1]
    """
    if n < 1:
        raise ValueError("inverse_cyclotomic_series requires n >= 1")
    if order < 0:
        raise ValueError("series order must be nonnegative")
    phi = cyclotomic_poly(n).coeffs
    c0 = phi[0]
    # c0 is 1 for n >= 2 and -1 for n = 1, so the recurrence stays integral
    out = [0] * (order + 1)
    out[0] = 1 // c0 if c0 == 1 else -1
    for k in range(1, order + 1):
        acc = 0
        for i in range(1, min(k, len(phi) - 1) + 1):
            acc += phi[i] * out[k - i]
        out[k] = -acc * c0  # 1/c0 == c0 for c0 in {1, -1}
    return out


@functools.lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Integer coordinates of x^e mod Phi_n for e = 0 .. max(n, 2*phi(n)) - 1.

    Row e is the power-basis coordinate vector of zeta_n^e.  The table covers
    every exponent needed both for reducing products of field elements and
    for listing all n-th roots of unity.
    """
    d = euler_phi(n)
    phi = cyclotomic_poly(n).coeffs
    count = max(n, 2 * d)
    rows: list[tuple[int, ...]] = []
    cur = [0] * d
    if d > 0:
        cur[0] = 1
    for _ in range(count):
        rows.append(tuple(cur))
        # multiply by x, then reduce the overflow coefficient using
        # x^d = -(phi[0] + phi[1] x + ... + phi[d-1] x^(d-1))
        top = cur[d - 1]
        nxt = [0] + cur[:-1]
        if top:
            for j in range(d):
                nxt[j] -= top * phi[j]
        cur = nxt
    return tuple(rows)


def power_coord_bound(n: int) -> int:
    """Max absolute power-basis coordinate over all n-th roots of unity."""
    return max(abs(c) for row in _power_table(n) for c in row)


class CycloElement:
    """An element of Q(zeta_n) in power-basis coordinates.

    Immutable; ``coeffs`` has length phi(n) and holds Fractions.

    >>> z = CycloElement.zeta(3)
    >>> (z * z).coeffs
    (Fraction(-1, 1), Fraction(-1, 1))
    >>> z ** 3 == CycloElement.one(3)
    True
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs) -> None:
        if n < 1:
            raise ValueError("conductor must be positive")
        d = euler_phi(n)
        cs = tuple(Fraction(c) for c in coeffs)
        if len(cs) != d:
            raise ValueError(f"expected {d} coordinates for conductor {n}, got {len(cs)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, *_):
        raise AttributeError("CycloElement is immutable")

    @classmethod
    def zero(cls, n: int) -> "CycloElement":
        return cls(n, (0,) * euler_phi(n))

    @classmethod
    def one(cls, n: int) -> "CycloElement":
        return cls.from_rational(n, 1)

    @classmethod
    def from_rational(cls, n: int, value) -> "CycloElement":
        d = euler_phi(n)
        return cls(n, (Fraction(value),) + (Fraction(0),) * (d - 1))

    @classmethod
    def zeta(cls, n: int) -> "CycloElement":
        return cls.zeta_power(n, 1)

    @classmethod
    def zeta_power(cls, n: int, e: int) -> "CycloElement":
        """zeta_n^e as a field element, any integer exponent."""
        return cls(n, _power_table(n)[e % n])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check_same_field(self, other: "CycloElement") -> None:
        if self.n != other.n:
            raise ValueError(f"conductor mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "CycloElement") -> "CycloElement":
        self._check_same_field(other)
        return CycloElement(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycloElement":
        return CycloElement(self.n, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "CycloElement") -> "CycloElement":
        return self + (-other)

    def scale(self, value) -> "CycloElement":
        f = Fraction(value)
        return CycloElement(self.n, tuple(a * f for a in self.coeffs))

    def __mul__(self, other: "CycloElement") -> "CycloElement":
        self._check_same_field(other)
        d = len(self.coeffs)
        a, b = self.coeffs, other.coeffs
        prod = [Fraction(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        table = _power_table(self.n)
        out = list(prod[:d])
        for e in range(d, 2 * d - 1):
            c = prod[e]
            if c:
                row = table[e]
                for j in range(d):
                    if row[j]:
                        out[j] += c * row[j]
        return CycloElement(self.n, out)

    def __pow__(self, exponent: int) -> "CycloElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycloElement.one(self.n)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "CycloElement":
        """Multiplicative inverse via the extended Euclidean algorithm
        on the coordinate polynomial and Phi_n over Q[x]."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        phi = [Fraction(c) for c in cyclotomic_poly(self.n).coeffs]
        a = list(self.coeffs)
        # extended Euclid: maintain u with u*self == r (mod Phi_n)
        r0, r1 = phi, _trim(a)
        u0: list[Fraction] = []
        u1: list[Fraction] = [Fraction(1)]
        while r1:
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, rem
            u0, u1 = u1, _poly_sub(u0, _poly_mul(q, u1))
        # r0 is a nonzero constant: gcd(self, Phi_n) up to scaling
        if len(r0) != 1:
            raise ArithmeticError("element shares a factor with Phi_n")
        c = r0[0]
        inv = [x / c for x in u0]
        inv = _poly_mod(inv, phi)
        inv += [Fraction(0)] * (len(self.coeffs) - len(inv))
        return CycloElement(self.n, inv[: len(self.coeffs)])

    def __truediv__(self, other: "CycloElement") -> "CycloElement":
        self._check_same_field(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero in cyclotomic field")
        # fast path: constant quotient (coordinatewise proportionality)
        for i, b in enumerate(other.coeffs):
            if b != 0:
                q = self.coeffs[i] / b
                if all(self.coeffs[j] == q * other.coeffs[j] for j in range(len(self.coeffs))):
                    return CycloElement.from_rational(self.n, q)
                break
        return self * other.inverse()

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycloElement):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.n, self.coeffs))

    def __repr__(self) -> str:
        return f"CycloElement(n={self.n}, coeffs={tuple(str(c) for c in self.coeffs)})"


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    rem = list(a)
    lead = b[-1]
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], rem
    quot = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - db - 1, -1, -1):
        q = rem[k + db] / lead
        quot[k] = q
        if q:
            for j in range(db + 1):
                rem[k + j] -= q * b[j]
    return _trim(quot), _trim(rem)


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = list(a) + [Fraction(0)] * max(0, len(b) - len(a))
    for i, bi in enumerate(b):
        out[i] -= bi
    return _trim(out)


def _poly_mod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    _, r = _poly_divmod(list(a), b)
    return r


def cyclo_add(a: CycloElement, b: CycloElement) -> CycloElement:
    """Sum in Q(zeta_n); conductors must match."""
    return a + b


def cyclo_mul(a: CycloElement, b: CycloElement) -> CycloElement:
    """Product in Q(zeta_n), reduced modulo Phi_n."""
    return a * b


def cyclo_neg(a: CycloElement) -> CycloElement:
    return -a


def cyclo_div(a: CycloElement, b: CycloElement) -> CycloElement:
    """Exact quotient a / b in Q(zeta_n); b must be nonzero."""
    return a / b


def cyclo_is_rational_integer(a: CycloElement):
    """Return the value as a plain int when a is a rational integer, else None.

    >>> cyclo_is_rational_integer(CycloElement.from_rational(5, 7))
    7
    >>> cyclo_is_rational_integer(CycloElement.zeta(5)) is None
    True
    """
    if any(c != 0 for c in a.coeffs[1:]):
        return None
    c0 = a.coeffs[0] if a.coeffs else Fraction(0)
    if c0.denominator != 1:
        return None
    return int(c0)
