import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polarclass.exactmath import (
    binomial,
    cofactor_normal,
    det,
    interpolate_leading_times_factorial,
    mat_inverse_unimodular,
    rank,
    row_times,
    unimodular_column_reduction,
)


@pytest.mark.parametrize("n, k, expected", [(4, 2, 6), (3, 5, 0), (2, 1, 2), (0, 0, 1), (-1, 0, 0), (5, -1, 0)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


@given(st.integers(0, 60), st.integers(0, 60))
def test_binomial_symmetry_and_factorial_oracle(n, k):
    if k <= n:
        assert binomial(n, k) == binomial(n, n - k)
        assert binomial(n, k) == math.factorial(n) // (math.factorial(k) * math.factorial(n - k))
    else:
        assert binomial(n, k) == 0


@given(st.integers(1, 60), st.integers(1, 59))
def test_pascal_rule(n, k):
    if k <= n - 1:
        assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


@given(st.integers(-10**9, 10**9), st.integers(1, 10**9))
def test_rational_normalization(p, q):
    a, b = Fraction(p, q), Fraction(-p, -q)
    assert (a.numerator, a.denominator) == (b.numerator, b.denominator)
    assert a.denominator > 0
    assert math.gcd(a.numerator, a.denominator) == 1


@pytest.mark.parametrize("values, expected", [([1, 6], 5), ([1, 3, 6], 1), ([1, 6, 15], 4), ([1], 1)])
def test_interpolation_examples(values, expected):
    assert interpolate_leading_times_factorial(values) == expected


def _lagrange_leading(values):
    # coefficient of t^f in the Lagrange interpolant through (t, values[t])
    f = len(values) - 1
    total = Fraction(0)
    for t, v in enumerate(values):
        denom = 1
        for s in range(f + 1):
            if s != t:
                denom *= t - s
        total += Fraction(v, denom)
    return total


def test_interpolation_matches_lagrange_on_random_polynomials():
    rng = random.Random(7)
    for _ in range(100):
        f = rng.randint(0, 6)
        coeffs = [1] + [rng.randint(-50, 50) for _ in range(f)]
        values = [sum(c * t**i for i, c in enumerate(coeffs)) for t in range(f + 1)]
        got = interpolate_leading_times_factorial(values)
        assert got == coeffs[f] * math.factorial(f)
        assert got == _lagrange_leading(values) * math.factorial(f)


def test_interpolation_rejects_bad_counts():
    with pytest.raises(ValueError):
        interpolate_leading_times_factorial([])
    with pytest.raises(ValueError):
        interpolate_leading_times_factorial([2, 5])


def _det_leibniz(m):
    from itertools import permutations
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        prod = sign
        for i in range(n):
            prod *= m[i][perm[i]]
        total += prod
    return total


@given(st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_leibniz(m):
    assert det(m) == _det_leibniz(m)


def test_cofactor_normal_is_orthogonal():
    rows = [[1, 2, 3], [4, 5, 7]]
    nrm = cofactor_normal(rows)
    assert all(sum(a * b for a, b in zip(nrm, r)) == 0 for r in rows)
    assert cofactor_normal([]) == [1]


@given(st.lists(st.lists(st.integers(-6, 6), min_size=4, max_size=4), min_size=1, max_size=4))
def test_column_reduction(rows):
    u, r = unimodular_column_reduction(rows, 4)
    assert abs(det(u)) == 1
    assert r == rank(rows)
    for row in rows:
        assert all(x == 0 for x in row_times(row, u)[r:])
    inv = mat_inverse_unimodular(u)
    assert [[sum(u[i][k] * inv[k][j] for k in range(4)) for j in range(4)] for i in range(4)] == \
        [[int(i == j) for j in range(4)] for i in range(4)]
