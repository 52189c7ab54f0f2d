"""Lattice polytopes: hull, face lattice, normalized volumes.

All geometry is done in intrinsic lattice coordinates.  A polytope of
dimension m sitting in Z^n is carried to Z^m by a unimodular change of
basis adapted to its affine hull, so volumes, interior points and edge
directions are measured against the lattice of the affine hull rather
than the ambient one.

Sizes are desk scale: convex hulls are found by brute-force enumeration of
candidate supporting hyperplanes, and lattice points are counted by a
bounding-box scan charged against a global budget
(``POLARCLASS_SCAN_BUDGET``, default 10**7 points).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterator, Sequence

from polarclass.errors import InputError, ResourceLimitError
from polarclass.exactmath import (
    ceil_div,
    cofactor_normal,
    det,
    interpolate_leading_times_factorial,
    mat_inverse_unimodular,
    primitive,
    rank,
    row_times,
    unimodular_column_reduction,
)

Point = tuple[int, ...]
FaceKey = tuple[int, ...]

SCAN_BUDGET_ENV = "POLARCLASS_SCAN_BUDGET"
DEFAULT_SCAN_BUDGET = 10**7
MAX_AMBIENT_DIM = 6
MAX_VERTICES = 60
MAX_HULL_CANDIDATES = 2_000_000


def scan_budget() -> int:
    raw = os.environ.get(SCAN_BUDGET_ENV)
    if raw is None or raw == "":
        return DEFAULT_SCAN_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"{SCAN_BUDGET_ENV} must be an integer, got {raw!r}") from None
    return max(value, 0)


class _Budget:
    def __init__(self, limit: int | None = None):
        self.limit = scan_budget() if limit is None else limit
        self.spent = 0

    def spend(self, n: int) -> None:
        self.spent += n
        if self.spent > self.limit:
            raise ResourceLimitError(
                f"lattice-point scan exceeds budget of {self.limit} points "
                f"(set {SCAN_BUDGET_ENV} to raise it)")


def _sub(p: Sequence[int], q: Sequence[int]) -> list[int]:
    return [a - b for a, b in zip(p, q)]


def _dot(p: Sequence[int], q: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(p, q))


class AffineLatticeFrame:
    """Unimodular coordinates on the affine lattice spanned by some points.

    ``to_local`` sends a lattice point of the affine hull to Z^dim and
    ``to_ambient`` inverts it.  Any lattice basis would do; this one comes
    from an extended-gcd column reduction of the difference vectors.
    """

    def __init__(self, points: Sequence[Sequence[int]]):
        points = [tuple(p) for p in points]
        self.ambient_dim = len(points[0])
        base = points[0]
        diffs = [_sub(p, base) for p in points[1:]]
        self._u, self.dim = unimodular_column_reduction(diffs, self.ambient_dim)
        self._u_inv = mat_inverse_unimodular(self._u)
        self._tail = tuple(row_times(base, self._u)[self.dim:])

    def to_local(self, x: Sequence[int]) -> Point:
        y = row_times(x, self._u)
        if tuple(y[self.dim:]) != self._tail:
            raise ValueError(f"point {tuple(x)} is not on the affine hull")
        return tuple(y[: self.dim])

    def to_ambient(self, y: Sequence[int]) -> Point:
        return tuple(row_times(list(y) + list(self._tail), self._u_inv))

    def normal_to_ambient(self, a: Sequence[int]) -> Point:
        # a . (x U)[:dim] == x . (U[:, :dim] a)
        return tuple(_dot(self._u[i][: self.dim], a) for i in range(self.ambient_dim))


def _hull(points: list[Point], dim: int) -> tuple[list[int], dict[tuple[Point, int], frozenset[int]]]:
    """Vertices and facets of the hull of full-dimensional points in Z^dim.

    Facets are returned as {(primitive normal a, offset b): indices of
    input points with a.y == b}, oriented so that a.y <= b on the hull.
    """
    if dim == 0:
        return [0], {}
    n_candidates = math.comb(len(points), dim)
    if n_candidates > MAX_HULL_CANDIDATES:
        raise ResourceLimitError(
            f"hull enumeration over {n_candidates} point subsets exceeds desk-scale limit")
    facets: dict[tuple[Point, int], frozenset[int]] = {}
    for combo in combinations(range(len(points)), dim):
        if any(set(combo) <= s for s in facets.values()):
            continue
        base = points[combo[0]]
        normal = cofactor_normal([_sub(points[i], base) for i in combo[1:]])
        if not any(normal):
            continue
        normal = primitive(normal)
        b = _dot(normal, base)
        values = [_dot(normal, p) for p in points]
        if max(values) == b:
            key = (normal, b)
        elif min(values) == b:
            key = (tuple(-x for x in normal), -b)
        else:
            continue
        facets[key] = frozenset(i for i, v in enumerate(values) if v == b)

    vertices = []
    everything = frozenset(range(len(points)))
    for i in range(len(points)):
        common = everything
        for s in facets.values():
            if i in s:
                common = common & s
        if common == {i}:
            vertices.append(i)
    return vertices, facets


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of finitely many points of Z^n.

    ``facets`` are (normal, offset) pairs in ambient coordinates with
    normal . x <= offset on the polytope; they cut the polytope out of its
    affine hull.  Build instances with :meth:`from_vertices`.
    """

    vertices: tuple[Point, ...]
    ambient_dim: int
    dim: int
    facets: tuple[tuple[Point, int], ...]
    _frame: AffineLatticeFrame = field(repr=False, compare=False)
    _local: tuple[Point, ...] = field(repr=False, compare=False)
    _local_facets: tuple[tuple[Point, int], ...] = field(repr=False, compare=False)
    _facet_sets: tuple[frozenset[int], ...] = field(repr=False, compare=False)

    @classmethod
    def from_vertices(cls, points: Sequence[Sequence[int]]) -> "LatticePolytope":
        pts: list[Point] = []
        seen = set()
        for p in points:
            q = tuple(p)
            if any(isinstance(x, bool) or not isinstance(x, int) for x in q):
                raise InputError(f"non-integer coordinate in {q!r}")
            if q not in seen:
                seen.add(q)
                pts.append(q)
        if not pts:
            raise InputError("a polytope needs at least one point")
        n = len(pts[0])
        if any(len(p) != n for p in pts):
            raise InputError("points have inconsistent dimensions")
        if n > MAX_AMBIENT_DIM:
            raise ResourceLimitError(f"ambient dimension {n} exceeds desk-scale limit {MAX_AMBIENT_DIM}")

        frame = AffineLatticeFrame(pts)
        local = [frame.to_local(p) for p in pts]
        vert_idx, facets = _hull(local, frame.dim)
        if len(vert_idx) > MAX_VERTICES:
            raise ResourceLimitError(f"{len(vert_idx)} vertices exceed desk-scale limit {MAX_VERTICES}")
        renumber = {old: new for new, old in enumerate(vert_idx)}
        local_facets = sorted(facets)
        facet_sets = tuple(
            frozenset(renumber[i] for i in facets[key] if i in renumber) for key in local_facets)
        return cls(
            vertices=tuple(pts[i] for i in vert_idx),
            ambient_dim=n,
            dim=frame.dim,
            facets=tuple((frame.normal_to_ambient(a), b) for a, b in local_facets),
            _frame=frame,
            _local=tuple(local[i] for i in vert_idx),
            _local_facets=tuple(local_facets),
            _facet_sets=facet_sets,
        )

    def __repr__(self) -> str:
        return f"LatticePolytope(dim={self.dim}, ambient_dim={self.ambient_dim}, vertices={list(self.vertices)})"

    def to_local(self, x: Sequence[int]) -> Point:
        return self._frame.to_local(x)

    def to_ambient(self, y: Sequence[int]) -> Point:
        return self._frame.to_ambient(y)

    @property
    def local_vertices(self) -> tuple[Point, ...]:
        return self._local

    @cached_property
    def face_sets(self) -> dict[int, list[FaceKey]]:
        """Canonical keys (sorted vertex indices) of all nonempty faces, by dimension."""
        everything = frozenset(range(len(self.vertices)))
        found = {everything}
        frontier = [everything]
        while frontier:
            nxt = []
            for face in frontier:
                for s in self._facet_sets:
                    g = face & s
                    if g and g not in found:
                        found.add(g)
                        nxt.append(g)
            frontier = nxt
        by_dim: dict[int, list[FaceKey]] = {d: [] for d in range(self.dim + 1)}
        for face in found:
            by_dim[self._affine_dim(face)].append(tuple(sorted(face)))
        for keys in by_dim.values():
            keys.sort()
        return by_dim

    def _affine_dim(self, face) -> int:
        idx = sorted(face)
        base = self._local[idx[0]]
        return rank([_sub(self._local[i], base) for i in idx[1:]])

    def face_dim(self, key: FaceKey) -> int:
        for d, keys in self.face_sets.items():
            if key in keys:
                return d
        raise KeyError(f"{key} is not a face")

    def subfaces(self, key: FaceKey, dim: int) -> list[FaceKey]:
        inside = set(key)
        return [k for k in self.face_sets.get(dim, []) if set(k) <= inside]

    def face_frame(self, key: FaceKey) -> AffineLatticeFrame:
        return AffineLatticeFrame([self.vertices[i] for i in key])

    def dilate(self, t: int) -> "LatticePolytope":
        return LatticePolytope.from_vertices([tuple(t * x for x in v) for v in self.vertices])


def from_vertices(points: Sequence[Sequence[int]]) -> LatticePolytope:
    return LatticePolytope.from_vertices(points)


@dataclass(frozen=True)
class Face:
    id: int
    dim: int
    vertex_indices: FaceKey
    normalized_volume: int


@dataclass(frozen=True)
class FaceLattice:
    faces: tuple[Face, ...]
    incidence: tuple[tuple[int, int], ...]  # (id of f-face, id of (f+1)-face containing it)

    def by_dim(self, f: int) -> list[Face]:
        return [F for F in self.faces if F.dim == f]

    def f_vector(self) -> tuple[int, ...]:
        top = max(F.dim for F in self.faces)
        return tuple(len(self.by_dim(f)) for f in range(top + 1))

    def face(self, key: FaceKey) -> Face:
        key = tuple(sorted(key))
        for F in self.faces:
            if F.vertex_indices == key:
                return F
        raise KeyError(f"{key} is not a face")


def _face_key(P: LatticePolytope, F) -> FaceKey:
    return F.vertex_indices if isinstance(F, Face) else tuple(sorted(F))


def triangulate(P: LatticePolytope, F=None, apex: str = "first") -> list[FaceKey]:
    """Pulling triangulation of a face, as tuples of vertex indices.

    The apex of every pyramid is the smallest (``apex="first"``) or largest
    (``apex="last"``) vertex index of the face being coned.
    """
    if apex not in ("first", "last"):
        raise ValueError(f"apex must be 'first' or 'last', got {apex!r}")
    key = tuple(range(len(P.vertices))) if F is None else _face_key(P, F)
    return _pull(P, key, P.face_dim(key), apex)


def _pull(P: LatticePolytope, key: FaceKey, dim: int, apex: str) -> list[FaceKey]:
    if dim == 0:
        return [key]
    v = key[0] if apex == "first" else key[-1]
    out = []
    for g in P.subfaces(key, dim - 1):
        if v in g:
            continue
        out.extend((v,) + s for s in _pull(P, g, dim - 1, apex))
    return out


def normalized_volume(P: LatticePolytope, F=None, apex: str = "first") -> int:
    """Lattice volume of a face: dim! times Euclidean volume in face lattice coordinates."""
    key = tuple(range(len(P.vertices))) if F is None else _face_key(P, F)
    frame = P.face_frame(key)
    total = 0
    for simplex in triangulate(P, key, apex):
        ys = [frame.to_local(P.vertices[i]) for i in simplex]
        total += abs(det([_sub(y, ys[0]) for y in ys[1:]]))
    return total


def face_lattice(P: LatticePolytope) -> FaceLattice:
    faces = []
    ids: dict[FaceKey, int] = {}
    for d in range(P.dim + 1):
        for key in P.face_sets[d]:
            ids[key] = len(faces)
            faces.append(Face(len(faces), d, key, normalized_volume(P, key)))
    incidence = []
    for d in range(P.dim):
        for lo in P.face_sets[d]:
            for hi in P.face_sets[d + 1]:
                if set(lo) <= set(hi):
                    incidence.append((ids[lo], ids[hi]))
    return FaceLattice(tuple(faces), tuple(incidence))


def codim_volume_sums(P: LatticePolytope) -> list[int]:
    """Entry j is the sum of normalized volumes of the faces of codimension j."""
    sums = [0] * (P.dim + 1)
    for F in face_lattice(P).faces:
        sums[P.dim - F.dim] += F.normalized_volume
    return sums


def _scan(local_vertices: Sequence[Point], facets: Sequence[tuple[Point, int]], dim: int,
          t: int, strict: bool, budget: _Budget) -> Iterator[Point]:
    """Lattice points of t*Q in Z^dim, Q full-dimensional with the given facets."""
    if dim == 0:
        budget.spend(1)
        yield ()
        return
    lo = [t * min(v[i] for v in local_vertices) for i in range(dim)]
    hi = [t * max(v[i] for v in local_vertices) for i in range(dim)]
    cost = 1
    for i in range(dim - 1):
        cost *= hi[i] - lo[i] + 1
    budget.spend(cost)
    rhs = [t * b - (1 if strict else 0) for _, b in facets]

    def rec(prefix: list[int]) -> Iterator[Point]:
        i = len(prefix)
        if i == dim - 1:
            low, high = lo[-1], hi[-1]
            for (a, _), r in zip(facets, rhs):
                rest = r - _dot(a[:i], prefix)
                c = a[-1]
                if c > 0:
                    high = min(high, rest // c)
                elif c < 0:
                    low = max(low, ceil_div(-rest, -c))
                elif rest < 0:
                    return
            for last in range(low, high + 1):
                yield tuple(prefix) + (last,)
            return
        for x in range(lo[i], hi[i] + 1):
            yield from rec(prefix + [x])

    yield from rec([])


def count_lattice_points(P: LatticePolytope, t: int = 1, strict: bool = False,
                         budget: _Budget | None = None) -> int:
    """Number of lattice points of the dilate t*P (relative interior if ``strict``)."""
    budget = budget or _Budget()
    return sum(1 for _ in _scan(P._local, P._local_facets, P.dim, t, strict, budget))


def ehrhart_normalized_volume(P: LatticePolytope, F=None) -> int:
    """Normalized volume of a face from lattice-point counts of its dilates.

    Independent of the triangulation path: the face is re-hulled in its
    own lattice coordinates, dilates t = 0..f are counted by scanning, and
    the leading Ehrhart coefficient times f! is read off by finite
    differences.
    """
    key = tuple(range(len(P.vertices))) if F is None else _face_key(P, F)
    frame = P.face_frame(key)
    Q = LatticePolytope.from_vertices([frame.to_local(P.vertices[i]) for i in key])
    budget = _Budget()
    counts = [count_lattice_points(Q, t, budget=budget) for t in range(Q.dim + 1)]
    return interpolate_leading_times_factorial(counts)


def interior_hull(P: LatticePolytope) -> LatticePolytope | None:
    """Hull of the lattice points in the relative interior of P, or None if there are none."""
    pts = [P.to_ambient(y) for y in _scan(P._local, P._local_facets, P.dim, 1, True, _Budget())]
    if not pts:
        return None
    return LatticePolytope.from_vertices(pts)


def edge_lattice_lengths(P: LatticePolytope) -> list[int]:
    if P.dim < 1:
        raise InputError("a point has no edges")
    return [F.normalized_volume for F in face_lattice(P).by_dim(1)]


def is_smooth(P: LatticePolytope) -> bool:
    """Simple, with primitive edge directions forming a lattice basis at every vertex.

    Checked in the lattice of the affine hull, so lower-dimensional
    polytopes are judged intrinsically.
    """
    m = P.dim
    edges = P.face_sets.get(1, [])
    for v in range(len(P.vertices)):
        dirs = []
        for e in edges:
            if v in e:
                w = e[1] if e[0] == v else e[0]
                dirs.append(primitive(_sub(P._local[w], P._local[v])))
        if len(dirs) != m:
            return False
        if m and abs(det(dirs)) != 1:
            return False
    return True
