"""Built-in acceptance checks, shared by ``polarclass selftest`` and the test suite.

Each check returns ``(passed, detail)``.  Random inputs come from fixed
seeds so every run is reproducible.
"""

from __future__ import annotations

import random
import warnings
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Callable, Iterator

from polarclass import class_calculus as cc
from polarclass import curves, polytope, scrolls, toric
from polarclass.errors import ResourceLimitError
from polarclass.exactmath import binomial, det
from polarclass.polytope import LatticePolytope, from_vertices

SEED = 20240611

NODLAND_VERTICES = [(0, 0, 0), (15, 0, 0), (0, 10, 0), (0, 0, 6)]


def simplex(dim: int, t: int = 1) -> LatticePolytope:
    pts = [tuple(0 for _ in range(dim))]
    for i in range(dim):
        pts.append(tuple(t if j == i else 0 for j in range(dim)))
    return from_vertices(pts)


def cube(dim: int, t: int = 1) -> LatticePolytope:
    pts = [()]
    for _ in range(dim):
        pts = [p + (x,) for p in pts for x in (0, t)]
    return from_vertices(pts)


def volume_suite() -> list[tuple[str, LatticePolytope]]:
    suite = [(f"unit simplex dim {d}", simplex(d)) for d in range(1, 5)]
    suite += [(f"{d}*simplex dim 2", simplex(2, d)) for d in range(1, 5)]
    suite += [(f"{d}*simplex dim 3", simplex(3, d)) for d in range(1, 4)]
    suite += [(f"[0,{t}]^{m}", cube(m, t)) for m in (2, 3) for t in (1, 2)]
    suite.append(("Nodland tetrahedron", from_vertices(NODLAND_VERTICES)))
    return suite


SMOOTH_POLYGON_SEEDS = [
    [(0, 0), (3, 0), (0, 3)],
    [(0, 0), (2, 0), (0, 2)],
    [(0, 0), (1, 0), (0, 1), (1, 1)],
    [(0, 0), (3, 0), (3, 1), (0, 1)],
    [(0, 0), (2, 0), (1, 1), (0, 1)],
    [(0, 0), (3, 0), (1, 1), (0, 1)],
    [(0, 0), (1, 0), (2, 1), (2, 2), (1, 2), (0, 1)],
    [(0, 0), (4, 0), (4, 2), (2, 4), (0, 4)],
]


def random_unimodular(n: int, rng: random.Random, bound: int = 3) -> list[list[int]]:
    while True:
        m = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        if abs(det(m)) == 1:
            return m


def transform(points, matrix, shift):
    n = len(matrix)
    return [tuple(sum(p[i] * matrix[i][j] for i in range(n)) + shift[j] for j in range(n))
            for p in points]


def random_unimodular_image(P: LatticePolytope, rng: random.Random) -> LatticePolytope:
    n = P.ambient_dim
    shift = [rng.randint(-5, 5) for _ in range(n)]
    return from_vertices(transform(P.vertices, random_unimodular(n, rng), shift))


# ---------------------------------------------------------------------------

def check_nodland() -> tuple[bool, str]:
    P = from_vertices(NODLAND_VERTICES)
    evol = toric.weighted_volume_sums(P)
    polar = tuple(toric.polar_degrees(P))
    top = toric.reciprocal_degrees(P)[-1]
    ok = evol == [900, 330, 41, 4] and polar == (900, 3270, 4451, 2688) and top == 11309
    return ok, f"EVol={evol} polar={list(polar)} ED={top}"


def check_cp_involution() -> tuple[bool, str]:
    for m in range(11):
        a = cc.cp_matrix(m)
        sq = [[sum(a[i][l] * a[l][j] for l in range(m + 1)) for j in range(m + 1)] for i in range(m + 1)]
        if sq != [[int(i == j) for j in range(m + 1)] for i in range(m + 1)]:
            return False, f"cp_matrix({m})^2 is not the identity"
    rng = random.Random(SEED)
    for m in range(9):
        for _ in range(100):
            c = cc.DegreeSequence(m, tuple(rng.randint(-10**6, 10**6) for _ in range(m + 1)))
            if cc.polar_from_mather(cc.mather_from_polar(c)) != c or cc.mather_from_polar(cc.polar_from_mather(c)) != c:
                return False, f"round trip failed for {c}"
    return True, "m <= 10 involution; 900 round trips"


def check_ed_identity() -> tuple[bool, str]:
    rng = random.Random(SEED + 1)
    for m in range(9):
        for _ in range(50):
            c = cc.DegreeSequence(m, tuple(rng.randint(0, 10**5) for _ in range(m + 1)))
            closed = cc.ed_degree_from_mather(c)
            prefix = cc.reciprocal_from_polar(cc.polar_from_mather(c))[-1]
            if closed != prefix:
                return False, f"m={m}: closed form {closed} != prefix sum {prefix}"
    return True, "450 random vectors, m <= 8"


def check_volume_oracle() -> tuple[bool, str]:
    n_faces = 0
    for name, P in volume_suite():
        for F in polytope.face_lattice(P).faces:
            e = polytope.ehrhart_normalized_volume(P, F)
            if e != F.normalized_volume:
                return False, f"{name}, face {F.vertex_indices}: Ehrhart {e} != triangulation {F.normalized_volume}"
            n_faces += 1
    return True, f"{n_faces} faces agree"


def check_rational_normal_curve() -> tuple[bool, str]:
    for n in range(1, 11):
        C = curves.CurveData.rational_normal(n)
        for k in range(1, n):
            r = (k + 1) * (n - k)
            if curves.rank(C, k) != r or curves.reciprocal_degree_curve(C, k) != n + r:
                return False, f"n={n}, k={k}"
    return True, "n <= 10, all k"


def check_classical_reduction() -> tuple[bool, str]:
    rng = random.Random(SEED + 2)
    seeds = [from_vertices(v) for v in SMOOTH_POLYGON_SEEDS]
    for P in seeds:
        if not polytope.is_smooth(P):
            return False, f"seed {P.vertices} is not smooth"
    for trial in range(20):
        P = random_unimodular_image(seeds[trial % len(seeds)], rng)
        higher = toric.polygon_higher_polar(P, 1)
        polar = toric.polar_degrees(P)
        if higher != (polar[1], polar[2]):
            return False, f"{P.vertices}: order 1 gives {higher}, classical {tuple(polar)}"
    return True, "20 random smooth polygons"


def check_veronese() -> tuple[bool, str]:
    for d in range(2, 7):
        got = toric.polar_degrees(simplex(2, d))[2]
        if got != 3 * (d - 1) ** 2:
            return False, f"d={d}: {got} != {3 * (d - 1) ** 2}"
    return True, "d = 2..6"


def check_balanced_scrolls() -> tuple[bool, str]:
    for a in range(1, 7):
        for m in range(2, 7):
            S = scrolls.RationalScrollSpec((a,) * m)
            if scrolls.rns_dual_degree(S, a) != m * a or not scrolls.rns_is_balanced_selfdual(S, a):
                return False, f"a={a}, m={m}"
    return True, "a <= 6, 2 <= m <= 6"


def check_plucker() -> tuple[bool, str]:
    rng = random.Random(SEED + 3)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for _ in range(50):
            d, g = rng.randint(1, 60), rng.randint(0, 30)
            k0 = rng.randint(0, 2 * d)
            r1 = curves.rank(curves.CurveData(2, d, g, (k0,)), 1)
            if r1 != 2 * d + 2 * g - 2 - k0:
                return False, f"(d, g, kappa0) = {(d, g, k0)}: r1 = {r1}"
    return True, "50 random plane curves"


def check_unimodular_invariance() -> tuple[bool, str]:
    rng = random.Random(SEED + 4)
    count = 0
    for name, P in volume_suite():
        ref = toric.toric_report(P)
        for _ in range(10):
            Q = random_unimodular_image(P, rng)
            if toric.toric_report(Q) != ref:
                return False, f"{name}: report changed under {Q.vertices}"
            count += 1
    return True, f"{count} transformed polytopes"


POLYHEDRON_GOLDEN = {
    "3*simplex dim 3": (72, 108, 94),
    "[0,2]^3": (144, 594, 906),
}


def check_polyhedron_order2() -> tuple[bool, str]:
    got = {
        "3*simplex dim 3": toric.polyhedron_order2_polar(simplex(3, 3)),
        "[0,2]^3": toric.polyhedron_order2_polar(cube(3, 2)),
    }
    return got == POLYHEDRON_GOLDEN, str(got)


@dataclass(frozen=True)
class Criterion:
    number: int
    name: str
    run: Callable[[], tuple[bool, str]]


CRITERIA = (
    Criterion(1, "nodland_pipeline", check_nodland),
    Criterion(2, "cp_involution", check_cp_involution),
    Criterion(3, "ed_coefficient_identity", check_ed_identity),
    Criterion(4, "volume_oracle", check_volume_oracle),
    Criterion(5, "rational_normal_curve", check_rational_normal_curve),
    Criterion(6, "classical_reduction", check_classical_reduction),
    Criterion(7, "veronese_dual_degree", check_veronese),
    Criterion(8, "balanced_scroll_selfduality", check_balanced_scrolls),
    Criterion(9, "plucker_sanity", check_plucker),
    Criterion(10, "unimodular_invariance", check_unimodular_invariance),
    Criterion(11, "polyhedron_order2", check_polyhedron_order2),
)


@dataclass(frozen=True)
class Outcome:
    criterion: Criterion
    passed: bool
    detail: str
    resource_error: bool = False

    def line(self) -> str:
        status = "PASS" if self.passed else ("LIMIT" if self.resource_error else "FAIL")
        return f"{status:5} {self.criterion.number:2d} {self.criterion.name}: {self.detail}"


def run_criterion(c: Criterion) -> Outcome:
    try:
        passed, detail = c.run()
    except ResourceLimitError as exc:
        return Outcome(c, False, str(exc), resource_error=True)
    except Exception as exc:  # a crashing check is a failed check
        return Outcome(c, False, f"{type(exc).__name__}: {exc}")
    return Outcome(c, passed, detail)


def run_all() -> list[Outcome]:
    return [run_criterion(c) for c in CRITERIA]


def _cp_matrix_without_sign(m: int) -> list[list[int]]:
    return [[binomial(m - j + 1, m - i + 1) if j <= i else 0 for j in range(m + 1)]
            for i in range(m + 1)]


FAULTS = {"cp-sign": (cc, "cp_matrix", _cp_matrix_without_sign)}


@contextmanager
def injected_fault(name: str | None) -> Iterator[None]:
    """Temporarily replace a component with a known-wrong version."""
    if name is None:
        yield
        return
    module, attr, replacement = FAULTS[name]
    original = getattr(module, attr)
    setattr(module, attr, replacement)
    try:
        yield
    finally:
        setattr(module, attr, original)
