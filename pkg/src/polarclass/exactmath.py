"""Exact integer and rational arithmetic.

Everything in the package runs on Python ints and ``fractions.Fraction``;
no floating point is used anywhere.  This module collects the few
primitives the rest of the code needs: binomials with the zero-outside
convention, finite-difference interpolation, Bareiss determinants, rank,
and a unimodular column reduction that yields lattice coordinates on an
affine sublattice of Z^n.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Matrix = list[list[int]]


def binomial(n: int, k: int) -> int:
    """n choose k, with 0 returned for k < 0, k > n or n < 0."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def interpolate_leading_times_factorial(values: Sequence[int]) -> int:
    """Return f! times the leading coefficient of the interpolant of ``values``.

    ``values[t]`` is the value at t = 0..f of a polynomial of degree <= f.
    The result is the f-th forward difference at 0, which is exactly
    f! * (coefficient of t^f).  For Ehrhart data ``values[0]`` must be 1
    (the zeroth dilate is a single point).
    """
    if not values:
        raise ValueError("need at least one value")
    if values[0] != 1:
        raise ValueError(f"values[0] must be 1 for lattice point counts, got {values[0]}")
    f = len(values) - 1
    total = 0
    for t, v in enumerate(values):
        if isinstance(v, bool) or not isinstance(v, int):
            raise ValueError(f"non-integer count {v!r}")
        total += (-1) ** (f - t) * math.comb(f, t) * v
    return total


def det(rows: Sequence[Sequence[int]]) -> int:
    """Integer determinant via fraction-free Bareiss elimination."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    if any(len(r) != n for r in a):
        raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(rows: Sequence[Sequence[int]]) -> int:
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return 0
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                factor = a[i][c] / a[r][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return r


def cofactor_normal(rows: Sequence[Sequence[int]]) -> list[int]:
    """Generalized cross product of (d-1) vectors in Z^d.

    Entry i is (-1)^i times the minor with column i deleted; the result is
    orthogonal to every input row and vanishes iff the rows are dependent.
    """
    d = len(rows) + 1
    out = []
    for i in range(d):
        minor = [[r[j] for j in range(d) if j != i] for r in rows]
        out.append((-1) ** i * det(minor))
    return out


def content(vec: Sequence[int]) -> int:
    g = 0
    for x in vec:
        g = math.gcd(g, x)
    return g


def primitive(vec: Sequence[int]) -> tuple[int, ...]:
    g = content(vec)
    if g == 0:
        return tuple(vec)
    return tuple(x // g for x in vec)


def mat_inverse_unimodular(u: Matrix) -> Matrix:
    n = len(u)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(u)]
    for c in range(n):
        piv = next(i for i in range(c, n) if a[i][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    inv = [[x for x in row[n:]] for row in a]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not unimodular")
    return [[int(x) for x in row] for row in inv]


def unimodular_column_reduction(rows: Sequence[Sequence[int]], n: int) -> tuple[Matrix, int]:
    """Find unimodular U (n x n) with rows @ U = [H | 0], H of full column rank.

    Returns (U, r) where r is the rank.  Column operations are extended-gcd
    steps, so U stays integral with determinant +-1.  For any integer row
    vector x in the rational span of ``rows``, x @ U vanishes beyond
    column r; the first r entries are coordinates in a basis of the
    saturated lattice span(rows) & Z^n.
    """
    a = [list(r) for r in rows]
    u = [[int(i == j) for j in range(n)] for i in range(n)]

    def col_combine(i: int, j: int, p: int, q: int, s: int, t: int) -> None:
        # (col_i, col_j) <- (p*col_i + q*col_j, s*col_i + t*col_j)
        for mat in (a, u):
            for row in mat:
                x, y = row[i], row[j]
                row[i], row[j] = p * x + q * y, s * x + t * y

    c = 0
    for r in range(len(a)):
        if c == n:
            break
        for j in range(c + 1, n):
            x, y = a[r][c], a[r][j]
            if y == 0:
                continue
            g, p, q = _ext_gcd(x, y)
            # new col_c = p*col_c + q*col_j carries g; new col_j = -(y/g)*col_c + (x/g)*col_j is 0 in row r
            col_combine(c, j, p, q, -y // g, x // g)
        if a[r][c] != 0:
            c += 1
    return u, c


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def row_times(x: Sequence[int], m: Matrix) -> list[int]:
    ncols = len(m[0]) if m else 0
    return [sum(x[i] * m[i][j] for i in range(len(x))) for j in range(ncols)]


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)
