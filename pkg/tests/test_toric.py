import random

import pytest

from polarclass.acceptance import (
    SMOOTH_POLYGON_SEEDS,
    cube,
    random_unimodular_image,
    simplex,
    volume_suite,
)
from polarclass.errors import InputError, PreconditionError
from polarclass.exactmath import binomial
from polarclass.polytope import codim_volume_sums, from_vertices
from polarclass.toric import (
    EulerWeighting,
    ToricReport,
    ed_degree,
    interior_volume_terms,
    polar_degrees,
    polar_degrees_by_faces,
    polygon_higher_polar,
    polygon_polar_from_volumes,
    polyhedron_order2_from_volumes,
    polyhedron_order2_polar,
    reciprocal_degrees,
    toric_report,
    weighted_volume_sums,
)

NODLAND = from_vertices([(0, 0, 0), (15, 0, 0), (0, 10, 0), (0, 0, 6)])


def test_weighted_volume_sums():
    assert weighted_volume_sums(NODLAND) == [900, 330, 41, 4]
    P = simplex(2, 3)
    assert weighted_volume_sums(P, EulerWeighting(0)) == [9, 0, 0]
    W = EulerWeighting(1, {(0,): 2})
    assert weighted_volume_sums(P, W)[2] == codim_volume_sums(P)[2] + 1


def test_weighting_validation():
    with pytest.raises(InputError):
        weighted_volume_sums(simplex(2, 3), EulerWeighting(1, {(0, 1, 2, 3): 2}))
    with pytest.raises(InputError):
        weighted_volume_sums(simplex(2, 3), EulerWeighting(1, {(0, 1, 2): 5}))


@pytest.mark.parametrize("P, expected", [
    (NODLAND, (900, 3270, 4451, 2688)),
    (simplex(2, 3), (9, 18, 12)),
    (cube(2), (2, 2, 2)),
])
def test_polar_degrees(P, expected):
    assert tuple(polar_degrees(P)) == expected


@pytest.mark.parametrize("P, expected", [
    (NODLAND, (900, 4170, 8621, 11309)),
    (simplex(2, 3), (9, 27, 39)),
    (cube(2), (2, 4, 6)),
])
def test_reciprocal_degrees(P, expected):
    assert tuple(reciprocal_degrees(P)) == expected


def test_ed_degree_examples():
    assert ed_degree(NODLAND) == 11309
    assert ed_degree(simplex(2, 3)) == 39
    for d in range(1, 8):
        assert ed_degree(from_vertices([(0,), (d,)])) == 3 * d - 2


def test_point_polytope():
    P = from_vertices([(7, 7)])
    assert tuple(polar_degrees(P)) == (1,)
    assert ed_degree(P) == 1


def _random_weighted(rng, P):
    keys = [k for ks in P.face_sets.values() for k in ks if len(k) < len(P.vertices)]
    return EulerWeighting(rng.randint(-2, 3), {k: rng.randint(-3, 5) for k in rng.sample(keys, len(keys) // 2)})


def test_path_equivalence_on_random_weights():
    rng = random.Random(11)
    shapes = [simplex(d, t) for d in range(1, 5) for t in (1, 2)] + [cube(m, t) for m in (2, 3, 4) for t in (1, 2)]
    for i in range(20):
        P = shapes[i % len(shapes)]
        W = _random_weighted(rng, P)
        assert polar_degrees(P, W) == polar_degrees_by_faces(P, W)
        assert ed_degree(P, W) == sum(polar_degrees(P, W))


@pytest.mark.parametrize("d", range(2, 7))
def test_veronese_dual_degree(d):
    assert polar_degrees(simplex(2, d))[2] == 3 * (d - 1) ** 2


def test_rational_normal_curve_as_toric():
    for n in range(1, 9):
        seg = from_vertices([(0,), (n,)])
        assert tuple(polar_degrees(seg)) == (n, 2 * n - 2)


def test_report_round_trip_and_invariance():
    rng = random.Random(5)
    for _, P in volume_suite():
        report = toric_report(P)
        assert ToricReport.from_dict(report.to_dict()) == report
        assert report.ed_degree == report.reciprocal[-1]
        for _ in range(3):
            assert toric_report(random_unimodular_image(P, rng)) == report


def test_polygon_higher_polar_examples():
    assert polygon_higher_polar(simplex(2, 3), 2) == (18, 15)
    assert polygon_higher_polar(simplex(2, 3), 1) == (18, 12)


@pytest.mark.parametrize("k", range(1, 8))
def test_veronese_top_order_cancels(k):
    # k*simplex has exactly as many lattice points as the k-jet rank, so the
    # checked entry point rejects it; the raw formula gives 0 for M_{k,1}
    vol = codim_volume_sums(simplex(2, k))
    first, _ = polygon_polar_from_volumes(vol, k)
    assert first == 0
    assert binomial(k + 2, 2) * k * k == 3 * k * binomial(k + 2, 3)
    with pytest.raises(PreconditionError) as err:
        polygon_higher_polar(simplex(2, k), k)
    assert err.value.reason == "degenerate_osculation"


def test_polygon_reduction_on_seeds():
    for pts in SMOOTH_POLYGON_SEEDS:
        P = from_vertices(pts)
        p = polar_degrees(P)
        assert polygon_higher_polar(P, 1) == (p[1], p[2])


def test_polygon_formula_integrality():
    for pts in SMOOTH_POLYGON_SEEDS:
        P = from_vertices(pts).dilate(3)
        for k in range(1, 4):
            polygon_higher_polar(P, k)


def test_polygon_preconditions():
    with pytest.raises(PreconditionError) as err:
        polygon_higher_polar(simplex(3, 3), 1)
    assert err.value.reason == "wrong_dimension"
    with pytest.raises(PreconditionError) as err:
        polygon_higher_polar(from_vertices([(0, 0), (3, 0), (0, 3), (4, 4)]), 1)
    assert err.value.reason == "not_smooth"
    with pytest.raises(PreconditionError) as err:
        polygon_higher_polar(cube(2, 2), 3)
    assert err.value.reason == "edge_too_short"


def test_polygon_in_higher_ambient_space():
    P = from_vertices([(3, 0, 0), (0, 3, 0), (0, 0, 3)])
    assert polygon_higher_polar(P, 2) == (18, 15)


def test_polyhedron_order2_examples():
    assert polyhedron_order2_polar(simplex(3, 3)) == (72, 108, 94)
    assert polyhedron_order2_polar(cube(3, 2)) == (144, 594, 906)
    with pytest.raises(PreconditionError) as err:
        polyhedron_order2_polar(simplex(3, 2))
    assert err.value.reason == "degenerate_osculation"
    with pytest.raises(PreconditionError):
        polyhedron_order2_polar(cube(3, 1))
    with pytest.raises(PreconditionError):
        polyhedron_order2_polar(NODLAND)


def test_polyhedron_formula_hand_values():
    assert polyhedron_order2_from_volumes((27, 36, 18, 4), (0, 0, 0)) == (72, 108, 94)
    assert polyhedron_order2_from_volumes((48, 48, 24, 8), (1, 0, 0)) == (144, 594, 906)


def test_interior_volume_terms():
    assert interior_volume_terms(simplex(3, 3)) == (0, 0, 0)
    assert interior_volume_terms(cube(3, 2)) == (1, 0, 0)
    # [0,3]^3 has interior hull [1,2]^3
    assert interior_volume_terms(cube(3, 3)) == (6, 12, 12)
    # 5*simplex has interior hull a translate of 1*simplex
    assert interior_volume_terms(simplex(3, 5)) == (1, 4, 6)
