"""Exact linear algebra over the rationals.

Matrices are immutable tuples of tuples of ``Fraction``.  Determinants and
ranks go through fraction-free (Bareiss) elimination on denominator-cleared
integer rows, which keeps every intermediate value an exact integer with
predictable growth.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Matrix = tuple[tuple[Fraction, ...], ...]


def as_matrix(rows: Iterable[Sequence[Fraction | int]]) -> Matrix:
    out = tuple(tuple(Fraction(v) for v in row) for row in rows)
    if out and any(len(row) != len(out[0]) for row in out):
        raise ValueError("ragged rows in matrix")
    return out


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n))


def diagonal(entries: Sequence[int | Fraction]) -> Matrix:
    n = len(entries)
    return tuple(
        tuple(Fraction(entries[i]) if i == j else Fraction(0) for j in range(n))
        for i in range(n)
    )


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a: Matrix, c: Fraction | int) -> Matrix:
    c = Fraction(c)
    return tuple(tuple(c * x for x in row) for row in a)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt)
        for row in a
    )


def _integer_rows(a: Matrix) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (rank, solution sets
    and row spaces are unchanged by positive row scalings)."""
    rows: list[list[int]] = []
    for row in a:
        scale = 1
        for v in row:
            scale = scale * v.denominator // gcd(scale, v.denominator)
        rows.append([int(v * scale) for v in row])
    return rows


def determinant(a: Matrix) -> Fraction:
    """Exact determinant by Bareiss one-step fraction-free elimination."""
    n = len(a)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in a):
        raise ValueError("determinant requires a square matrix")
    m: list[list[int]] = []
    denom = 1
    for row in a:
        scale = 1
        for v in row:
            scale = scale * v.denominator // gcd(scale, v.denominator)
        denom *= scale
        m.append([int(v * scale) for v in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                q, r = divmod(num, prev)
                assert r == 0, "Bareiss exact division failed"
                m[i][j] = q
            m[i][k] = 0
        prev = m[k][k]
    return Fraction(sign * m[n - 1][n - 1], denom)


def rank(a: Matrix) -> int:
    """Exact rank by fraction-free row echelon reduction."""
    if not a or not a[0]:
        return 0
    m = _integer_rows(a)
    n_rows, n_cols = len(m), len(m[0])
    r = 0
    prev = 1
    for col in range(n_cols):
        if r == n_rows:
            break
        pivot = None
        for i in range(r, n_rows):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, n_rows):
            for j in range(col + 1, n_cols):
                num = m[i][j] * m[r][col] - m[i][col] * m[r][j]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss exact division failed"
                m[i][j] = q
            m[i][col] = 0
        prev = m[r][col]
        r += 1
    return r


def inverse(a: Matrix) -> Matrix | None:
    """Inverse by Gauss-Jordan elimination, or None when singular."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("inverse requires a square matrix")
    work = [list(row) + [Fraction(1 if i == j else 0) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if work[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            return None
        work[col], work[pivot] = work[pivot], work[col]
        inv_p = 1 / work[col][col]
        work[col] = [v * inv_p for v in work[col]]
        for i in range(n):
            if i != col and work[i][col] != 0:
                factor = work[i][col]
                work[i] = [v - factor * w for v, w in zip(work[i], work[col])]
    return tuple(tuple(row[n:]) for row in work)
