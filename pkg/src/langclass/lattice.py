"""Exact integer and rational linear algebra on small dense matrices.

Matrices are tuples of row tuples. Integer routines never leave ``int``;
rational ones use :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vector = tuple
Matrix = tuple


def as_matrix(rows) -> Matrix:
    return tuple(tuple(r) for r in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(m: Matrix, ncols: int | None = None) -> Matrix:
    if not m:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*m))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(a: Matrix, v: Sequence) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def dot(u: Sequence, v: Sequence):
    return sum(x * y for x, y in zip(u, v))


def bilinear(u: Sequence, gram: Matrix, v: Sequence):
    return dot(u, matvec(gram, v))


def rational_rank(rows: Sequence[Sequence]) -> int:
    """Rank over the rationals, by fraction-exact Gaussian elimination."""
    work = [[Fraction(x) for x in r] for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        p = work[rank][col]
        for i in range(rank + 1, len(work)):
            f = work[i][col] / p
            if f:
                work[i] = [x - f * y for x, y in zip(work[i], work[rank])]
        rank += 1
    return rank


def inverse(m: Matrix) -> Matrix:
    """Exact inverse of a square matrix, entries returned as Fractions.

    Raises ZeroDivisionError when ``m`` is singular.
    """
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def integer_inverse(m: Matrix) -> Matrix:
    """Inverse of a unimodular integer matrix; ValueError if not unimodular."""
    inv = inverse(m)
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not invertible over the integers")
    return tuple(tuple(int(x) for x in row) for row in inv)


def _hermite_in_place(rows: list[list[int]], ncols: int) -> int:
    """Row-reduce ``rows`` to Hermite normal form on their first ``ncols`` columns.

    Only unimodular row operations are used, applied to entire rows, so any
    trailing columns record the transformation. Returns the number of pivots.
    Pivots are positive; entries above a pivot lie in ``[0, pivot)``.
    """
    r = 0
    for col in range(ncols):
        if r == len(rows):
            break
        # Euclid down the column until a single nonzero entry remains at row r.
        while True:
            nz = [i for i in range(r, len(rows)) if rows[i][col] != 0]
            if not nz:
                break
            k = min(nz, key=lambda i: abs(rows[i][col]))
            rows[r], rows[k] = rows[k], rows[r]
            p = rows[r][col]
            done = True
            for i in range(r + 1, len(rows)):
                q = rows[i][col] // p
                if q:
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
                if rows[i][col] != 0:
                    done = False
            if done:
                break
        if rows[r][col] == 0:
            continue
        if rows[r][col] < 0:
            rows[r] = [-x for x in rows[r]]
        p = rows[r][col]
        for i in range(r):
            q = rows[i][col] // p
            if q:
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def hermite_basis(vectors: Sequence[Sequence[int]]) -> Matrix:
    """Canonical (row Hermite normal form) basis of the lattice spanned by ``vectors``."""
    rows = [list(v) for v in vectors]
    if not rows:
        return ()
    r = _hermite_in_place(rows, len(rows[0]))
    return as_matrix(rows[:r])


def integer_kernel(a: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Saturated basis of ``{x in Z^ncols : a x = 0}`` in Hermite normal form."""
    # Reduce [a^T | I]; rows whose a^T part vanishes span the kernel lattice.
    at = transpose(as_matrix(a), ncols)
    m = len(a)
    rows = [list(at[k]) + [int(k == j) for j in range(ncols)] for k in range(ncols)]
    r = _hermite_in_place(rows, m)
    kernel = [row[m:] for row in rows[r:]]
    return hermite_basis(kernel)


def coordinates_in(v: Sequence[int], basis: Matrix) -> tuple[int, ...] | None:
    """Integer coordinates of ``v`` in a Hermite basis, or None if ``v`` is outside its span."""
    rest = list(v)
    coeffs = []
    for row in basis:
        pivot = next(j for j, x in enumerate(row) if x != 0)
        q, rem = divmod(rest[pivot], row[pivot])
        if rem:
            return None
        coeffs.append(q)
        if q:
            rest = [x - q * y for x, y in zip(rest, row)]
    if any(rest):
        return None
    return tuple(coeffs)


def rational_coordinates_in(v: Sequence, basis: Matrix) -> tuple[Fraction, ...] | None:
    """Rational coordinates of ``v`` in an echelon basis, or None if outside its span."""
    rest = [Fraction(x) for x in v]
    coeffs = []
    for row in basis:
        pivot = next(j for j, x in enumerate(row) if x != 0)
        q = rest[pivot] / row[pivot]
        coeffs.append(q)
        if q:
            rest = [x - q * y for x, y in zip(rest, row)]
    if any(rest):
        return None
    return tuple(coeffs)
