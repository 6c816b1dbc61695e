"""Exact linear algebra over the rationals for small dense matrices.

Everything works on plain tuples/lists of ``int`` or ``fractions.Fraction``;
no floating point is used anywhere. Matrices are given as sequences of rows.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

Scalar = int | Fraction
Vector = tuple[Scalar, ...]


def vec_gcd(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def is_primitive(v: Sequence[int]) -> bool:
    """True for a nonzero integer vector with coprime coordinates."""
    return vec_gcd(v) == 1


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    return sum(a * b for a, b in zip(u, v, strict=True))


def vec_add(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_scale(c: Scalar, v: Sequence[Scalar]) -> Vector:
    return tuple(c * a for a in v)


def mat_vec(m: Sequence[Sequence[Scalar]], v: Sequence[Scalar]) -> Vector:
    return tuple(dot(row, v) for row in m)


def cross3(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def determinant(rows: Sequence[Sequence[Scalar]]) -> Scalar:
    """Exact determinant; stays in `int` for integer input."""
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("determinant needs a square matrix")
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        a, b, c = rows
        return (
            a[0] * (b[1] * c[2] - b[2] * c[1])
            - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0])
        )
    a = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def int_det(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free (Bareiss) determinant of an integer matrix."""
    n = len(rows)
    a = [list(row) for row in rows]
    sign = 1
    prev = 1
    for col in range(n - 1):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                a[r][c] = (a[r][c] * a[col][col] - a[r][col] * a[col][c]) // prev
            a[r][col] = 0
        prev = a[col][col]
    return sign * a[n - 1][n - 1]


def rref(rows: Sequence[Sequence[Scalar]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    a = [[Fraction(x) for x in row] for row in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(a)) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    return a, pivots


def nullspace(rows: Sequence[Sequence[Scalar]]) -> list[Vector]:
    """Basis of the right kernel {x : rows @ x = 0}."""
    if not rows:
        return []
    ncols = len(rows[0])
    a, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r, p in enumerate(pivots):
            x[p] = -a[r][f]
        basis.append(tuple(x))
    return basis


def solve_columns(
    vectors: Sequence[Sequence[Scalar]], target: Sequence[Scalar]
) -> Optional[Vector]:
    """Coefficients c with sum(c_i * vectors[i]) == target, or None.

    The vectors must be linearly independent; returns None when the target
    lies outside their span.
    """
    n = len(target)
    k = len(vectors)
    if k == n:
        # Cramer on the square case, the common one
        d = determinant([[vectors[j][i] for j in range(k)] for i in range(n)])
        if d != 0:
            coeffs = []
            for j in range(k):
                dj = determinant(
                    [
                        [target[i] if m == j else vectors[m][i] for m in range(k)]
                        for i in range(n)
                    ]
                )
                coeffs.append(Fraction(dj) / d)
            return tuple(coeffs)
    aug = [[Fraction(vectors[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(n)]
    a, pivots = rref(aug)
    if k in pivots:  # pivot in the augmented column: inconsistent
        return None
    if len(pivots) != k:
        raise ValueError("solve_columns requires linearly independent vectors")
    coeffs = [Fraction(0)] * k
    for r, p in enumerate(pivots):
        coeffs[p] = a[r][k]
    return tuple(coeffs)


def integerize(v: Sequence[Scalar]) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector (same direction)."""
    fracs = [Fraction(x) for x in v]
    if all(x == 0 for x in fracs):
        return tuple(0 for _ in fracs)
    denom_lcm = 1
    for x in fracs:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in fracs]
    g = vec_gcd(ints)
    return tuple(x // g for x in ints)
