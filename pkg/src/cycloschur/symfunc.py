"""Exact evaluation of symmetric polynomials at primitive roots of unity.

With omega_1, ..., omega_d the primitive n-th roots of unity (d = phi(n)):

* ``elementary_at_roots``   e_k(omega) read off the coefficients of Phi_n,
* ``complete_at_roots``     h_k(omega) read off the power series of 1/Phi_n,
* ``schur_at_roots``        s_lambda(omega) as a determinant in the h_k,
* ``alternant_at_roots``    det(omega_i^(mu_j)) as a field element,
* ``schur_at_roots_bialternant``  the independent quotient-of-alternants route.

Every value is exact: determinants are computed fraction-free over Z, and
the alternant engine reconstructs integer coordinates from modular images
under a rigorous coefficient bound (no floating point anywhere).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from math import comb, factorial

from .cyclotomic import (
    CycloElement,
    cyclotomic_poly,
    cyclo_is_rational_integer,
    distinct_prime_factors,
    euler_phi,
    inverse_cyclotomic_series,
    power_coord_bound,
    primitive_exponents,
)
from . import linalg


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive parts; trailing zeros are trimmed.

    >>> Partition((3, 1, 0)).parts
    (3, 1)
    >>> Partition((2, 2, 1)).conjugate().parts
    (3, 2)
    """

    parts: tuple[int, ...]

    def __init__(self, parts=()) -> None:
        ps = [int(p) for p in parts]
        while ps and ps[-1] == 0:
            ps.pop()
        for a, b in zip(ps, ps[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing, got {tuple(parts)}")
        if ps and ps[-1] < 0:
            raise ValueError("parts must be nonnegative")
        object.__setattr__(self, "parts", tuple(ps))

    @classmethod
    def coerce(cls, value) -> "Partition":
        if isinstance(value, Partition):
            return value
        return cls(tuple(value))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def weight(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        cols = [0] * self.parts[0]
        for p in self.parts:
            for c in range(p):
                cols[c] += 1
        return Partition(cols)


def partitions_in_box(max_length: int, max_part: int):
    """Iterate over all partitions with at most ``max_length`` parts, each at
    most ``max_part``, graded by number of parts and lexicographic within a
    grade.  The count is C(max_length + max_part, max_length).

    >>> [p.parts for p in partitions_in_box(2, 2)]
    [(), (1,), (2,), (1, 1), (2, 1), (2, 2)]
    """
    if max_length < 0 or max_part < 0:
        raise ValueError("box dimensions must be nonnegative")

    def fixed_length(length: int, cap: int):
        if length == 0:
            yield ()
            return
        for first in range(1, cap + 1):
            for rest in fixed_length(length - 1, first):
                yield (first,) + rest

    for length in range(max_length + 1):
        for parts in fixed_length(length, max_part):
            yield Partition(parts)


def elementary_at_roots(n: int, k: int) -> int:
    """e_k at the primitive n-th roots: (-1)^k times a coefficient of Phi_n.

    Zero for k > phi(n); exact integer always.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 0:
        raise ValueError("k must be nonnegative")
    d = euler_phi(n)
    if k > d:
        return 0
    coeff = cyclotomic_poly(n).coefficient(d - k)
    return coeff if k % 2 == 0 else -coeff


def complete_at_roots(n: int, k: int) -> int:
    """h_k at the primitive n-th roots, via the power series of 1/Phi_n.

    Requires n >= 2: for n = 1 the series of 1/Phi_1 carries a global minus
    sign (see inverse_cyclotomic_series) and does not equal h_k(1) = 1.
    """
    if n < 2:
        raise ValueError("complete_at_roots requires n >= 2 (the n = 1 series "
                         "has the opposite sign; see inverse_cyclotomic_series)")
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _h_sequence(n, k)[k]


@functools.lru_cache(maxsize=None)
def _h_sequence(n: int, upto: int) -> tuple[int, ...]:
    return tuple(inverse_cyclotomic_series(n, upto))


def schur_at_roots(n: int, partition) -> int:
    """s_lambda at the primitive n-th roots of unity, exactly.

    Computed as the l x l determinant det(h_{lambda_i - i + j}) with
    l = len(lambda), entries from complete_at_roots, evaluated fraction-free
    over Z.  The empty partition gives 1.

    >>> schur_at_roots(3, Partition((1,)))
    -1
    """
    lam = Partition.coerce(partition)
    if n < 2:
        raise ValueError("schur_at_roots requires n >= 2")
    d = euler_phi(n)
    ell = len(lam)
    if ell > d:
        raise ValueError(f"partition has {ell} parts but only phi({n}) = {d} variables")
    if ell == 0:
        return 1
    top = lam.parts[0] + ell - 1
    h = _h_sequence(n, top)

    def h_at(idx: int) -> int:
        return h[idx] if idx >= 0 else 0

    rows = [[h_at(lam.parts[i] - i + j) for j in range(ell)] for i in range(ell)]
    return linalg.bareiss_det_int(rows)


# ---------------------------------------------------------------------------
# alternant engine
#
# The alternant det(omega_i^(mu_j)) is an algebraic integer whose power-basis
# coordinates are bounded by d! * power_coord_bound(n): the determinant is a
# signed sum of at most d! roots of unity, and each root of unity has
# coordinates bounded by the table maximum.  We therefore compute the exact
# coordinates from images modulo enough primes p = 1 (mod n): in GF(p) the
# field embeds via an element g of multiplicative order n, each embedding
# turns the alternant into an ordinary determinant over GF(p), and the
# coordinates are recovered by solving the (invertible Vandermonde) linear
# system tying coordinates to embedding values.

_PRIME_FLOOR = 1 << 30  # keeps p < 2^31 so numpy int64 products cannot overflow


def _order_n_element(n: int, p: int) -> int:
    qs = distinct_prime_factors(n)
    for r in range(2, p):
        g = pow(r, (p - 1) // n, p)
        if g == 1:
            continue
        if all(pow(g, n // q, p) != 1 for q in qs):
            return g
    raise ArithmeticError(f"no element of order {n} mod {p}")  # unreachable for p = 1 mod n


@functools.lru_cache(maxsize=None)
def _embedding_data(n: int):
    """Per-conductor modular embedding pack: tuples (p, gpowers, Winv_rows).

    gpowers[e] = g^e mod p for an order-n element g; Winv_rows is the inverse
    mod p of the matrix W[t][k] = g^(t*k) over primitive exponents t and
    basis powers k.  Enough primes are included that their product exceeds
    twice the coordinate bound of any conductor-n alternant.
    """
    d = euler_phi(n)
    bound = 2 * factorial(d) * power_coord_bound(n) + 1
    exps = primitive_exponents(n)
    packs = []
    prod = 1
    for p in linalg.primes_one_mod(n, _PRIME_FLOOR):
        g = _order_n_element(n, p)
        gp = [1] * n
        for e in range(1, n):
            gp[e] = gp[e - 1] * g % p
        w = [[gp[(t * k) % n] for k in range(d)] for t in exps]
        unit = [[1 if r == j else 0 for r in range(d)] for j in range(d)]
        winv_cols = linalg.solve_mod(w, unit, p)
        winv_rows = [[winv_cols[c][r] for c in range(d)] for r in range(d)]
        packs.append((p, tuple(gp), tuple(tuple(row) for row in winv_rows)))
        prod *= p
        if prod > bound:
            break
    return tuple(packs), factorial(d) * power_coord_bound(n)


def alternant_at_roots(n: int, mu) -> CycloElement:
    """det(omega_i^(mu_j)) with rows over the primitive roots in ascending
    exponent order and columns in the order mu is given.

    ``mu`` must be a length-phi(n) sequence of nonnegative integers; repeats
    are allowed (the determinant is then zero).

    >>> alternant_at_roots(3, (1, 0)).coeffs
    (Fraction(1, 1), Fraction(2, 1))
    """
    if n < 2:
        raise ValueError("alternant_at_roots requires n >= 2")
    d = euler_phi(n)
    mu = tuple(int(m) for m in mu)
    if len(mu) != d:
        raise ValueError(f"mu must have length phi({n}) = {d}, got {len(mu)}")
    if any(m < 0 for m in mu):
        raise ValueError("mu entries must be nonnegative")
    exps = primitive_exponents(n)
    emat = [[(a * m) % n for m in mu] for a in exps]
    packs, bound = _embedding_data(n)
    residues: list[list[int]] = []
    moduli: list[int] = []
    use_numpy = d > 16
    if use_numpy:
        import numpy as np

        e_arr = np.array(emat, dtype=np.int64)
    for p, gp, winv in packs:
        vals = []
        if use_numpy:
            gp_arr = np.array(gp, dtype=np.int64)
            for t in exps:
                mat = gp_arr[(t * e_arr) % n]
                vals.append(linalg.det_mod_numpy(mat, p))
        else:
            for t in exps:
                mat = [[gp[(t * emat[i][j]) % n] for j in range(d)] for i in range(d)]
                vals.append(linalg.det_mod(mat, p))
        coords_p = [sum(winv[r][c] * vals[c] for c in range(d)) % p for r in range(d)]
        residues.append(coords_p)
        moduli.append(p)
    coords = []
    for r in range(d):
        c = linalg.crt_symmetric([res[r] for res in residues], moduli)
        if abs(c) > bound:
            raise ArithmeticError("alternant coordinate exceeded its certified bound")
        coords.append(c)
    return CycloElement(n, coords)


@functools.lru_cache(maxsize=None)
def _staircase_alternant(n: int) -> CycloElement:
    d = euler_phi(n)
    return alternant_at_roots(n, tuple(range(d - 1, -1, -1)))


def schur_at_roots_bialternant(n: int, partition) -> int:
    """s_lambda at the primitive n-th roots via the quotient of alternants.

    Computes a_(delta+lambda) and a_delta as field elements, divides exactly
    in Q(zeta_n), and extracts a rational integer.  This route shares no code
    with the determinant in schur_at_roots, which makes it a genuinely
    independent cross-check.  Raises ArithmeticError if the quotient fails to
    be a rational integer (that would signal an arithmetic bug).
    """
    lam = Partition.coerce(partition)
    if n < 2:
        raise ValueError("schur_at_roots_bialternant requires n >= 2")
    d = euler_phi(n)
    if len(lam) > d:
        raise ValueError(f"partition has {len(lam)} parts but only phi({n}) = {d} variables")
    padded = list(lam.parts) + [0] * (d - len(lam))
    mu = tuple(padded[i] + (d - 1 - i) for i in range(d))
    numerator = alternant_at_roots(n, mu)
    quotient = numerator / _staircase_alternant(n)
    value = cyclo_is_rational_integer(quotient)
    if value is None:
        raise ArithmeticError(
            f"alternant quotient for n={n}, lambda={lam.parts} is not a rational integer")
    return value


# ---------------------------------------------------------------------------
# box sweeps
#
# Exhaustive |s_lambda| <= 1 checks over a box need tens of millions of
# evaluations, so the sweep works through the conjugate partition: for
# mu = lambda' the value equals det(e_{mu_i - i + j}) of size len(mu) <=
# max_part, a tiny integer determinant.  A compiled kernel enumerates the
# conjugates in the same graded-lex order as partitions_in_box and tallies
# the determinants; a pure Python twin of the same loop serves as its
# reference implementation and as a fallback.


@dataclass
class BoxScanReport:
    n: int
    max_part: int
    total: int
    counts: dict[int, int]          # tallies for the values -1, 0, 1
    violations: int                 # evaluations outside {-1, 0, 1}
    first_violation: tuple[Partition, int] | None
    engine: str                     # "compiled" or "python"

    @property
    def all_bounded(self) -> bool:
        return self.violations == 0


def _elementary_padded(n: int, max_part: int) -> list[int]:
    d = euler_phi(n)
    # epad[k + max_part] = e_k for 0 <= k <= d, zero outside
    epad = [0] * (d + 2 * max_part + 1)
    for k in range(d + 1):
        epad[k + max_part] = elementary_at_roots(n, k)
    return epad


def _scan_python(n: int, max_part: int, stop_at_first_violation: bool) -> BoxScanReport:
    d = euler_phi(n)
    epad = _elementary_padded(n, max_part)
    off = max_part
    counts = {-1: 0, 0: 0, 1: 0}
    total = 0
    violations = 0
    first: tuple[Partition, int] | None = None
    for mu in partitions_in_box(max_part, d):
        ell = len(mu)
        if ell == 0:
            val = 1
        else:
            rows = [[epad[mu.parts[i] - i + j + off] for j in range(ell)] for i in range(ell)]
            val = linalg.bareiss_det_int(rows)
        total += 1
        if -1 <= val <= 1:
            counts[val] += 1
        else:
            violations += 1
            if first is None:
                first = (mu.conjugate(), val)
            if stop_at_first_violation:
                break
    return BoxScanReport(n, max_part, total, counts, violations, first, "python")


_compiled_kernel = None


def _get_compiled_kernel():
    global _compiled_kernel
    if _compiled_kernel is None:
        import numba
        import numpy as np

        @numba.njit(cache=True)
        def kernel(epad, d, max_part, early_exit):
            off = max_part
            mu = np.zeros(max_part + 1, dtype=np.int64)
            mat = np.zeros((max_part, max_part), dtype=np.int64)
            counts = np.zeros(3, dtype=np.int64)
            total = np.int64(0)
            violations = np.int64(0)
            first_mu = np.zeros(max_part + 1, dtype=np.int64)
            first_val = np.int64(0)
            stop = False
            for length in range(max_part + 1):
                if stop:
                    break
                # first partition of this length: all ones
                for i in range(length):
                    mu[i] = 1
                while True:
                    # evaluate det(e_{mu_i - i + j}) of size length x length
                    if length == 0:
                        val = np.int64(1)
                    else:
                        for i in range(length):
                            base = mu[i] - i + off
                            for j in range(length):
                                mat[i, j] = epad[base + j]
                        # Bareiss elimination, exact integer division
                        sign = np.int64(1)
                        prev = np.int64(1)
                        val = np.int64(0)
                        singular = False
                        for k in range(length - 1):
                            if mat[k, k] == 0:
                                found = False
                                for r in range(k + 1, length):
                                    if mat[r, k] != 0:
                                        for c in range(k, length):
                                            tmp = mat[k, c]
                                            mat[k, c] = mat[r, c]
                                            mat[r, c] = tmp
                                        sign = -sign
                                        found = True
                                        break
                                if not found:
                                    singular = True
                                    break
                            piv = mat[k, k]
                            for i in range(k + 1, length):
                                f = mat[i, k]
                                for j in range(k + 1, length):
                                    mat[i, j] = (piv * mat[i, j] - f * mat[k, j]) // prev
                                mat[i, k] = 0
                            prev = piv
                        if not singular:
                            val = sign * mat[length - 1, length - 1]
                    total += 1
                    if val == -1:
                        counts[0] += 1
                    elif val == 0:
                        counts[1] += 1
                    elif val == 1:
                        counts[2] += 1
                    else:
                        violations += 1
                        if violations == 1:
                            first_mu[max_part] = length
                            for i in range(length):
                                first_mu[i] = mu[i]
                            first_val = val
                        if early_exit:
                            stop = True
                            break
                    if length == 0:
                        break
                    # advance within fixed length: graded-lex
                    pos = length - 1
                    advanced = False
                    while pos >= 0:
                        cap = d if pos == 0 else mu[pos - 1]
                        if mu[pos] < cap:
                            mu[pos] += 1
                            for j in range(pos + 1, length):
                                mu[j] = 1
                            advanced = True
                            break
                        pos -= 1
                    if not advanced:
                        break
            return total, counts, violations, first_mu, first_val

        _compiled_kernel = kernel
    return _compiled_kernel


def _kernel_is_safe(n: int, max_part: int) -> bool:
    """int64 headroom check for the compiled sweep.

    Bareiss intermediates are minors, so the Hadamard bound caps them; the
    update multiplies two such values before its exact division, hence the
    bound must stay below 2^31 to keep the products inside int64.
    """
    d = euler_phi(n)
    max_e = max(abs(elementary_at_roots(n, k)) for k in range(d + 1))
    if max_e == 0:
        return True
    bound = (max_part * max_e * max_e) ** ((max_part + 1) // 2) * max_e
    return bound < 2 ** 31


def schur_box_scan(n: int, max_part: int, *, stop_at_first_violation: bool = False,
                   force_python: bool = False) -> BoxScanReport:
    """Evaluate s_lambda at the primitive n-th roots for every lambda with
    at most phi(n) parts, each at most ``max_part``, and tally the values.

    Partitions are scanned through their conjugates in graded-lex order, so
    the single-column partitions (1^k) come first; the first value outside
    {-1, 0, 1}, if any, is reported as (lambda, value).
    """
    if n < 2:
        raise ValueError("schur_box_scan requires n >= 2")
    if max_part < 0:
        raise ValueError("max_part must be nonnegative")
    if force_python or not _kernel_is_safe(n, max_part) or max_part == 0:
        return _scan_python(n, max_part, stop_at_first_violation)
    try:
        kernel = _get_compiled_kernel()
    except ImportError:
        return _scan_python(n, max_part, stop_at_first_violation)
    import numpy as np

    d = euler_phi(n)
    epad = np.array(_elementary_padded(n, max_part), dtype=np.int64)
    total, counts, violations, first_mu, first_val = kernel(epad, d, max_part,
                                                            stop_at_first_violation)
    first = None
    if violations > 0:
        length = int(first_mu[max_part])
        mu = Partition(tuple(int(first_mu[i]) for i in range(length)))
        first = (mu.conjugate(), int(first_val))
    return BoxScanReport(n, max_part, int(total),
                         {-1: int(counts[0]), 0: int(counts[1]), 1: int(counts[2])},
                         int(violations), first, "compiled")


def box_size(max_length: int, max_part: int) -> int:
    """Number of partitions in the box, C(max_length + max_part, max_length)."""
    return comb(max_length + max_part, max_length)
