"""Exact degrees of polar and reciprocal polar classes of projective varieties."""

from polarclass.class_calculus import (
    DegreeSequence,
    cp_matrix,
    dual_degree_reversal,
    mather_from_polar,
    polar_from_mather,
    reciprocal_from_polar,
)
from polarclass.polytope import LatticePolytope, face_lattice, from_vertices, normalized_volume
from polarclass.toric import EulerWeighting, ToricReport, toric_report

__version__ = "0.1.0"

__all__ = [
    "DegreeSequence",
    "EulerWeighting",
    "LatticePolytope",
    "ToricReport",
    "cp_matrix",
    "dual_degree_reversal",
    "face_lattice",
    "from_vertices",
    "mather_from_polar",
    "normalized_volume",
    "polar_from_mather",
    "reciprocal_from_polar",
    "toric_report",
]
