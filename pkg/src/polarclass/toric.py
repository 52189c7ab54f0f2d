"""Polar invariants of projective toric varieties from their lattice polytopes.

The Mather-Chern degrees of the toric variety of a lattice polytope are the
face-volume sums EVol^j, where each codimension-j face contributes its
normalized volume times the local Euler obstruction along the
corresponding torus orbit.  Polar, reciprocal polar and ED degrees then
follow from :mod:`polarclass.class_calculus`.  For smooth polygons and
smooth 3-polytopes with long enough edges, closed formulas give
higher-order polar degrees in terms of face volumes (and, in dimension 3,
of the hull of the interior lattice points).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from polarclass.class_calculus import (
    DegreeSequence,
    ed_degree_from_mather,
    polar_from_mather,
    reciprocal_from_mather,
    reciprocal_from_polar,
)
from polarclass.errors import ConsistencyError, InputError, PreconditionError
from polarclass.exactmath import binomial
from polarclass.polytope import (
    FaceKey,
    LatticePolytope,
    codim_volume_sums,
    count_lattice_points,
    edge_lattice_lengths,
    face_lattice,
    interior_hull,
    is_smooth,
)


@dataclass(frozen=True)
class EulerWeighting:
    """Local Euler obstruction per face, keyed by sorted vertex indices.

    Faces not listed get ``default_weight``.  The polytope itself (the
    dense orbit) always has weight 1.
    """

    default_weight: int = 1
    overrides: Mapping[FaceKey, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "overrides",
                           {tuple(sorted(k)): int(v) for k, v in dict(self.overrides).items()})

    def validate(self, P: LatticePolytope) -> None:
        keys = {k for ks in P.face_sets.values() for k in ks}
        full = tuple(range(len(P.vertices)))
        for k, w in self.overrides.items():
            if k not in keys:
                raise InputError(f"weight override for {list(k)} does not match a face")
            if k == full and w != 1:
                raise InputError("the weight of the polytope itself (dense orbit) must be 1")

    def weight(self, P: LatticePolytope, key: FaceKey) -> int:
        if key == tuple(range(len(P.vertices))):
            return 1
        return self.overrides.get(key, self.default_weight)


UNIT_WEIGHTS = EulerWeighting()


@dataclass(frozen=True)
class ToricReport:
    vol: tuple[int, ...]
    evol: tuple[int, ...]
    polar: DegreeSequence
    reciprocal: DegreeSequence
    ed_degree: int

    def to_dict(self) -> dict:
        return {
            "m": self.polar.m,
            "vol": list(self.vol),
            "evol": list(self.evol),
            "polar": list(self.polar),
            "reciprocal": list(self.reciprocal),
            "ed_degree": self.ed_degree,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ToricReport":
        m = d["m"]
        return cls(tuple(d["vol"]), tuple(d["evol"]), DegreeSequence(m, tuple(d["polar"])),
                   DegreeSequence(m, tuple(d["reciprocal"])), d["ed_degree"])


def weighted_volume_sums(P: LatticePolytope, W: EulerWeighting = UNIT_WEIGHTS) -> list[int]:
    W.validate(P)
    sums = [0] * (P.dim + 1)
    for F in face_lattice(P).faces:
        sums[P.dim - F.dim] += W.weight(P, F.vertex_indices) * F.normalized_volume
    return sums


def polar_degrees(P: LatticePolytope, W: EulerWeighting = UNIT_WEIGHTS) -> DegreeSequence:
    return polar_from_mather(DegreeSequence.of(weighted_volume_sums(P, W)))


def polar_degrees_by_faces(P: LatticePolytope, W: EulerWeighting = UNIT_WEIGHTS) -> DegreeSequence:
    """Polar degrees summed face by face, without first aggregating EVol^j."""
    W.validate(P)
    m = P.dim
    out = [0] * (m + 1)
    for F in face_lattice(P).faces:
        j = m - F.dim
        contrib = W.weight(P, F.vertex_indices) * F.normalized_volume
        for i in range(j, m + 1):
            out[i] += (-1) ** j * binomial(m - j + 1, m - i + 1) * contrib
    return DegreeSequence(m, tuple(out))


def reciprocal_degrees(P: LatticePolytope, W: EulerWeighting = UNIT_WEIGHTS) -> DegreeSequence:
    evol = DegreeSequence.of(weighted_volume_sums(P, W))
    via_prefix = reciprocal_from_polar(polar_from_mather(evol))
    direct = reciprocal_from_mather(evol)
    if via_prefix != direct:
        raise ConsistencyError(f"reciprocal degrees disagree: {via_prefix} vs {direct}")
    return via_prefix


def ed_degree(P: LatticePolytope, W: EulerWeighting = UNIT_WEIGHTS) -> int:
    evol = DegreeSequence.of(weighted_volume_sums(P, W))
    closed = ed_degree_from_mather(evol)
    top = reciprocal_degrees(P, W)[-1]
    if closed != top:
        raise ConsistencyError(f"ED degree closed form {closed} != sum of polar degrees {top}")
    return closed


def toric_report(P: LatticePolytope, W: EulerWeighting = UNIT_WEIGHTS) -> ToricReport:
    vol = codim_volume_sums(P)
    evol = weighted_volume_sums(P, W)
    polar = polar_from_mather(DegreeSequence.of(evol))
    return ToricReport(tuple(vol), tuple(evol), polar, reciprocal_degrees(P, W), ed_degree(P, W))


def _check_higher_order(P: LatticePolytope, m: int, k: int) -> None:
    if P.dim != m:
        raise PreconditionError("wrong_dimension", f"need a {m}-dimensional polytope, got dim {P.dim}")
    if k < 1:
        raise PreconditionError("bad_order", f"order must be >= 1, got {k}")
    if not is_smooth(P):
        raise PreconditionError("not_smooth", "polytope is not smooth")
    short = [e for e in edge_lattice_lengths(P) if e < k]
    if short:
        raise PreconditionError("edge_too_short", f"edge lattice lengths {sorted(short)} are below {k}")
    points = count_lattice_points(P)
    jets = binomial(m + k, k)
    if points <= jets:
        raise PreconditionError(
            "degenerate_osculation",
            f"{points} lattice points do not exceed the {k}-jet rank {jets}; "
            f"osculating spaces fill the ambient space")


def polygon_polar_from_volumes(vol: Sequence[int], k: int) -> tuple[int, int]:
    """Order-k polar degrees of a smooth polygon from (area, perimeter, vertex count).

    No validity checks; see :func:`polygon_higher_polar`.
    """
    v0, v1, v2 = vol
    first = binomial(k + 2, 2) * v0 - binomial(k + 2, 3) * v1
    second = binomial(k + 3, 4) * (3 * v0 - 2 * k * v1 - Fraction(k * k - 4, 3) * v2 + 4 * (k * k - 1))
    if second.denominator != 1:
        raise ConsistencyError(f"non-integral order-{k} polar degree {second}")
    return first, int(second)


def polygon_higher_polar(P: LatticePolytope, k: int) -> tuple[int, int]:
    """(deg M_{k,1}, deg M_{k,2}) for a smooth lattice polygon with all edges of length >= k."""
    _check_higher_order(P, 2, k)
    return polygon_polar_from_volumes(codim_volume_sums(P), k)


def polyhedron_order2_from_volumes(vol: Sequence[int], inner: Sequence[int]) -> tuple[int, int, int]:
    """Order-2 polar degrees of a smooth 3-polytope.

    ``vol`` is (Vol^0..Vol^3) of the polytope; ``inner`` is (Vol^0..Vol^2)
    of the interior-point hull, codimension measured inside that hull.
    """
    v0, v1, v2, v3 = vol
    w0, w1, w2 = inner
    return (
        4 * v0 - v1,
        36 * v0 - 27 * v1 + 6 * v2 + 18 * w0 + 9 * w1,
        62 * v0 - 57 * v1 + 28 * v2 - 8 * v3 + 58 * w0 + 51 * w1 + 20 * w2,
    )


def interior_volume_terms(P: LatticePolytope, count: int = 3) -> tuple[int, ...]:
    """Vol^j of the interior-point hull for j < count; zero where undefined.

    j is codimension inside the hull; entries beyond its dimension, and all
    entries when there are no interior points, are 0.
    """
    inner = interior_hull(P)
    if inner is None:
        return (0,) * count
    sums = codim_volume_sums(inner)
    return tuple(sums[j] if j < len(sums) else 0 for j in range(count))


def polyhedron_order2_polar(P: LatticePolytope) -> tuple[int, int, int]:
    """(deg M_{2,1}, deg M_{2,2}, deg M_{2,3}) for a smooth 3-polytope with edges >= 2."""
    _check_higher_order(P, 3, 2)
    return polyhedron_order2_from_volumes(codim_volume_sums(P), interior_volume_terms(P))


def higher_order_polar(P: LatticePolytope, k: int) -> tuple[int, ...]:
    """Dispatch to the polygon (any k) or 3-polytope (k = 2) formulas."""
    if P.dim == 2:
        return polygon_higher_polar(P, k)
    if P.dim == 3 and k == 2:
        return polyhedron_order2_polar(P)
    raise PreconditionError(
        "no_formula", f"higher-order formulas exist for polygons and for 3-polytopes at order 2, "
                      f"not dim {P.dim}, order {k}")
