"""Exact linear algebra primitives shared across the package.

Everything here is integer or rational arithmetic with no floating point:
fraction-free (Bareiss) determinants, an integer-preserving Gauss-Jordan
used for basis-exchange tables, and modular elimination helpers used by
the cyclotomic determinant engine.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def bareiss_det_int(rows: list[list[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination.

    Mutates ``rows``; callers pass a scratch copy.  All intermediate values
    are minors of the input, so every division below is exact.
    """
    m = len(rows)
    if m == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(m - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, m):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        row_k = rows[k]
        for i in range(k + 1, m):
            row_i = rows[i]
            f = row_i[k]
            for j in range(k + 1, m):
                row_i[j] = (pivot * row_i[j] - f * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * rows[m - 1][m - 1]


def det_fraction(rows: list[list[Fraction | int]]) -> Fraction:
    """Exact determinant of a square rational matrix.

    Each row is scaled to integers first (the scale is divided back out),
    then the integer Bareiss routine does the elimination.
    """
    m = len(rows)
    if m == 0:
        return Fraction(1)
    scale = 1
    int_rows: list[list[int]] = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        den = lcm(*(f.denominator for f in fr)) if fr else 1
        scale *= den
        int_rows.append([int(f * den) for f in fr])
    return Fraction(bareiss_det_int(int_rows), scale)


def rank_exact(rows: list[list[Fraction | int]]) -> int:
    """Rank of a rational matrix via fraction-based Gaussian elimination."""
    mat = [[Fraction(x) for x in row] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    rank = 0
    col = 0
    while rank < nrows and col < ncols:
        pivot_row = None
        for r in range(rank, nrows):
            if mat[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            col += 1
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        pv = mat[rank][col]
        for r in range(rank + 1, nrows):
            f = mat[r][col] / pv
            if f:
                for c in range(col, ncols):
                    mat[r][c] -= f * mat[rank][c]
        rank += 1
        col += 1
    return rank


def exchange_table_int(basis_cols: list[list[int]], all_cols: list[list[int]]) -> tuple[int, list[list[int]]]:
    """Signed determinant of the basis plus all single-exchange determinants.

    ``basis_cols`` holds d integer columns forming a basis of Z^d inside QQ^d;
    ``all_cols`` holds N candidate columns.  Returns ``(det, D)`` where ``det``
    is det(basis) and ``D[i][j]`` equals the determinant of the basis with
    column i replaced by candidate j (up to one global sign shared with
    ``det``, which is all the |det| bookkeeping needs).

    Uses integer-preserving Gauss-Jordan elimination: after step k every
    entry is a bordered minor of the input, so the divisions are exact.
    """
    d = len(basis_cols)
    n_extra = len(all_cols)
    # rows of [B | X]
    mat = [[basis_cols[c][r] for c in range(d)] + [all_cols[c][r] for c in range(n_extra)]
           for r in range(d)]
    width = d + n_extra
    sign = 1
    prev = 1
    for k in range(d):
        if mat[k][k] == 0:
            for r in range(k + 1, d):
                if mat[r][k] != 0:
                    mat[k], mat[r] = mat[r], mat[k]
                    sign = -sign
                    break
            else:
                raise ValueError("basis columns are singular")
        pivot = mat[k][k]
        row_k = mat[k]
        for i in range(d):
            if i == k:
                continue
            row_i = mat[i]
            f = row_i[k]
            for j in range(k + 1, width):
                num = pivot * row_i[j] - f * row_k[j]
                q, r = divmod(num, prev)
                if r:
                    raise ArithmeticError("inexact division in Jordan elimination")
                row_i[j] = q
            row_i[k] = 0
            if i < k:
                # earlier pivot rows carry prev on the diagonal; rescale so the
                # invariant "diagonal == current pivot" holds after this step
                row_i[i] = pivot
        prev = pivot
    det = sign * prev
    table = [[mat[i][d + j] * sign for j in range(n_extra)] for i in range(d)]
    return det, table


def det_mod(rows: list[list[int]], p: int) -> int:
    """Determinant of a square matrix over GF(p), entries already reduced."""
    m = len(rows)
    det = 1
    for k in range(m):
        pivot_row = None
        for r in range(k, m):
            if rows[r][k] % p != 0:
                pivot_row = r
                break
        if pivot_row is None:
            return 0
        if pivot_row != k:
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            det = -det
        pv = rows[k][k] % p
        det = det * pv % p
        inv = pow(pv, p - 2, p)
        row_k = rows[k]
        for i in range(k + 1, m):
            f = rows[i][k] * inv % p
            if f:
                row_i = rows[i]
                for j in range(k, m):
                    row_i[j] = (row_i[j] - f * row_k[j]) % p
    return det % p


def det_mod_numpy(mat, p: int) -> int:
    """Same as det_mod but with numpy row operations; for larger dimensions."""
    import numpy as np

    m = mat.shape[0]
    work = mat.astype(np.int64) % p
    det = 1
    for k in range(m):
        col = work[k:, k]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            return 0
        r = k + int(nz[0])
        if r != k:
            work[[k, r]] = work[[r, k]]
            det = -det
        pv = int(work[k, k])
        det = det * pv % p
        inv = pow(pv, p - 2, p)
        if k + 1 < m:
            factors = (work[k + 1:, k] * inv) % p
            # int64 safe: entries < p < 2**31, factors < p
            work[k + 1:, k:] = (work[k + 1:, k:] - factors[:, None] * work[k, k:][None, :]) % p
    return det % p


def solve_mod(matrix: list[list[int]], rhs_vectors: list[list[int]], p: int) -> list[list[int]]:
    """Solve M x = v over GF(p) for several right-hand sides.

    Returns one solution column per rhs.  Raises if M is singular mod p.
    """
    m = len(matrix)
    k_rhs = len(rhs_vectors)
    aug = [[matrix[r][c] % p for c in range(m)] + [rhs_vectors[j][r] % p for j in range(k_rhs)]
           for r in range(m)]
    width = m + k_rhs
    for k in range(m):
        pivot_row = None
        for r in range(k, m):
            if aug[r][k] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            raise ValueError("matrix singular modulo p")
        aug[k], aug[pivot_row] = aug[pivot_row], aug[k]
        inv = pow(aug[k][k], p - 2, p)
        row_k = aug[k]
        for j in range(k, width):
            row_k[j] = row_k[j] * inv % p
        for i in range(m):
            if i == k:
                continue
            f = aug[i][k]
            if f:
                row_i = aug[i]
                for j in range(k, width):
                    row_i[j] = (row_i[j] - f * row_k[j]) % p
    return [[aug[r][m + j] for r in range(m)] for j in range(k_rhs)]


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond 64-bit inputs used here."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    s = 0
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


def primes_one_mod(n: int, floor: int):
    """Yield primes p = k*n + 1 with p > floor, in increasing order."""
    k = floor // n + 1
    while True:
        p = k * n + 1
        if p > floor and is_prime(p):
            yield p
        k += 1


def crt_symmetric(residues: list[int], moduli: list[int]) -> int:
    """Chinese remainder combination lifted to the symmetric range."""
    x = 0
    m = 1
    for r, p in zip(residues, moduli):
        # solve x' = x mod m, x' = r mod p
        t = (r - x) * pow(m % p, p - 2, p) % p
        x = x + m * t
        m *= p
    x %= m
    if 2 * x > m:
        x -= m
    return x
