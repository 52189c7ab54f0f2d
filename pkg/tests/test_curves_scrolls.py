import random
import warnings

import pytest
from hypothesis import given, strategies as st

from polarclass.class_calculus import dual_degree_reversal
from polarclass.curves import (
    CurveData,
    polar_degrees_curve,
    rank,
    reciprocal_degree_curve,
    strict_dual_ranks,
)
from polarclass.errors import InputError, PreconditionError
from polarclass.scrolls import (
    ELLIPTIC_CASES,
    EllipticScrollSpec,
    RationalScrollSpec,
    elliptic_dual_degree,
    rns_dual_degree,
    rns_is_balanced_selfdual,
)

curve_data = st.integers(1, 8).flatmap(lambda n: st.builds(
    CurveData, st.just(n), st.integers(n, 40), st.integers(0, 10),
    st.lists(st.integers(0, 3), min_size=n - 1, max_size=n - 1).map(tuple)))


@pytest.mark.parametrize("n", range(1, 11))
def test_rational_normal_curve_ranks(n):
    C = CurveData.rational_normal(n)
    for k in range(n):
        assert rank(C, k) == (k + 1) * (n - k)


def test_plane_cubics():
    smooth = CurveData(2, 3, 1, (0,))
    cusp = CurveData(2, 3, 0, (1,))
    assert rank(smooth, 1) == 6 and rank(cusp, 1) == 3
    assert tuple(polar_degrees_curve(smooth, 1)) == (3, 6)
    assert reciprocal_degree_curve(smooth, 1) == 9
    assert reciprocal_degree_curve(cusp, 1) == 6


def test_rnc_polar_and_reciprocal():
    C = CurveData.rational_normal(4)
    assert tuple(polar_degrees_curve(C, 2)) == (4, 6)
    for k in range(1, 4):
        assert reciprocal_degree_curve(C, k) == 4 + (k + 1) * (4 - k)
    assert strict_dual_ranks(C) == [4, 6, 6, 4]


@given(curve_data)
def test_rank_zero_is_degree(C):
    assert rank(C, 0) == C.d


@given(curve_data)
def test_strict_dual_ranks_reverse(C):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        ranks = [rank(C, k) for k in range(C.n)]
        assert strict_dual_ranks(C) == ranks[::-1]
        assert strict_dual_ranks(C)[::-1] == ranks


@given(curve_data)
def test_dual_reversal_consistency(C):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for k in range(1, C.n):
            p = polar_degrees_curve(C, k)
            assert tuple(dual_degree_reversal(p, 0)) == (rank(C, k), C.d)


def test_kappa_finite_differences():
    rng = random.Random(9)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for _ in range(100):
            n = rng.randint(2, 8)
            kappa = [rng.randint(0, 4) for _ in range(n - 1)]
            C = CurveData(n, rng.randint(n, 30), rng.randint(0, 5), tuple(kappa))
            j = rng.randrange(n - 1)
            bumped = CurveData(C.n, C.d, C.g, tuple(x + (i == j) for i, x in enumerate(kappa)))
            for k in range(n):
                expected = -(k - j) if j < k else 0
                assert rank(bumped, k) - rank(C, k) == expected


def test_curve_validation():
    with pytest.raises(InputError):
        CurveData(3, 3, 0, (0,))
    with pytest.raises(InputError):
        CurveData(2, 0, 0, (0,))
    with pytest.raises(InputError):
        rank(CurveData.rational_normal(3), 3)
    with pytest.raises(InputError):
        polar_degrees_curve(CurveData.rational_normal(3), 0)
    with pytest.warns(UserWarning):
        rank(CurveData(2, 1, 0, (3,)), 1)


@pytest.mark.parametrize("typ, k, expected", [((1, 1), 1, 2), ((3, 3, 3), 3, 9), ((2, 3), 2, 6)])
def test_rns_dual_degree(typ, k, expected):
    assert rns_dual_degree(RationalScrollSpec(typ), k) == expected


def test_rns_order_bound():
    with pytest.raises(PreconditionError):
        rns_dual_degree(RationalScrollSpec((2, 3)), 3)
    with pytest.raises(InputError):
        RationalScrollSpec((3,))


def test_rns_selfdual():
    assert rns_is_balanced_selfdual(RationalScrollSpec((2, 2)), 2)
    assert not rns_is_balanced_selfdual(RationalScrollSpec((2, 3)), 2)
    S = RationalScrollSpec((1, 1))
    assert rns_is_balanced_selfdual(S, 1) and rns_dual_degree(S, 1) == 2


def test_rns_invariants():
    rng = random.Random(4)
    for _ in range(50):
        S = RationalScrollSpec(tuple(rng.randint(1, 9) for _ in range(rng.randint(2, 5))))
        assert rns_dual_degree(S, 1) == S.d
        for k in range(1, S.type[0] - 1):
            second = rns_dual_degree(S, k + 2) - 2 * rns_dual_degree(S, k + 1) + rns_dual_degree(S, k)
            assert second == -2 * S.m
    for a in range(1, 7):
        for m in range(2, 7):
            assert rns_dual_degree(RationalScrollSpec((a,) * m), a) == m * a


def test_scroll_derived_quantities():
    S = RationalScrollSpec((3, 2))
    assert S.type == (2, 3) and S.m == 2 and S.d == 5 and S.n == 6


@pytest.mark.parametrize("e, d, dec, expected", [
    (0, 5, True, (4, 40)),
    (-1, 4, False, (3, 29)),
    (2, 5, True, (3, 20)),
    (1, 4, True, (2, 14)),
    (0, 4, False, (3, 26)),
])
def test_elliptic_cases(e, d, dec, expected):
    assert elliptic_dual_degree(EllipticScrollSpec(e, d, dec)) == expected


def test_elliptic_validation():
    with pytest.raises(PreconditionError):
        EllipticScrollSpec(-1, 5, True)
    with pytest.raises(PreconditionError):
        EllipticScrollSpec(1, 5, False)
    with pytest.raises(PreconditionError):
        EllipticScrollSpec(2, 4, True)


def test_elliptic_scan_positive():
    seen = set()
    for dec, es in ((True, range(0, 48)), (False, (-1, 0))):
        for e in es:
            for d in range(e + 3, 51):
                S = EllipticScrollSpec(e, d, dec)
                k, deg = elliptic_dual_degree(S)
                assert k >= 1 and deg > 0
                seen.add(next(c.name for c in ELLIPTIC_CASES if c.applies(S)))
    assert len(seen) == 5
