"""Degree-level calculus of polar, Mather-Chern and reciprocal polar classes.

A class family on an m-dimensional projective variety is recorded by the
degrees of its members in codimension 0..m.  Polar degrees and Mather-Chern
degrees determine each other through a lower-triangular involution with
entries (-1)^j * C(m-j+1, m-i+1); reciprocal polar degrees are prefix sums
of polar degrees, and the last reciprocal degree is the Euclidean distance
degree.  Everything here is plain integer linear algebra on sequences, valid
for any input, geometric or not.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from polarclass.errors import InputError, PreconditionError
from polarclass.exactmath import binomial


@dataclass(frozen=True)
class DegreeSequence:
    m: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.m < 0:
            raise InputError(f"variety dimension must be >= 0, got {self.m}")
        if len(self.entries) != self.m + 1:
            raise InputError(f"expected {self.m + 1} degrees for m={self.m}, got {len(self.entries)}")
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))

    @classmethod
    def of(cls, values: Sequence[int]) -> "DegreeSequence":
        return cls(len(values) - 1, tuple(values))

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def _check_same_m(self, other: "DegreeSequence") -> None:
        if not isinstance(other, DegreeSequence):
            raise TypeError(f"cannot combine DegreeSequence with {type(other).__name__}")
        if other.m != self.m:
            raise InputError(f"dimension mismatch: m={self.m} vs m={other.m}")

    def __add__(self, other: "DegreeSequence") -> "DegreeSequence":
        self._check_same_m(other)
        return DegreeSequence(self.m, tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other: "DegreeSequence") -> "DegreeSequence":
        self._check_same_m(other)
        return DegreeSequence(self.m, tuple(a - b for a, b in zip(self, other)))


@dataclass(frozen=True)
class OsculatingHypersurfaceData:
    """Inputs for a smooth, generically k-regular X whose k-th osculating spaces are hyperplanes.

    ``c1_power_degree`` is deg c_1(P^k_X(1))^i, and ``segre_term_degrees[j]``
    is deg of c_1(P^k_X(1))^j capped with the Segre class s_{m-i+j} of the
    k-th inflection subscheme, for j = 0..i-1.
    """

    m: int
    i: int
    c1_power_degree: int
    segre_term_degrees: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.i <= self.m:
            raise InputError(f"need 0 <= i <= m, got i={self.i}, m={self.m}")
        if len(self.segre_term_degrees) != self.i:
            raise InputError(f"need {self.i} Segre terms, got {len(self.segre_term_degrees)}")


def cp_matrix(m: int) -> list[list[int]]:
    """The (m+1)x(m+1) matrix taking Mather-Chern degrees to polar degrees and back."""
    if m < 0:
        raise InputError(f"m must be >= 0, got {m}")
    return [[(-1) ** j * binomial(m - j + 1, m - i + 1) if j <= i else 0
             for j in range(m + 1)] for i in range(m + 1)]


def _apply(mat: list[list[int]], seq: DegreeSequence) -> DegreeSequence:
    return DegreeSequence(seq.m, tuple(sum(a * x for a, x in zip(row, seq)) for row in mat))


def polar_from_mather(c: DegreeSequence) -> DegreeSequence:
    return _apply(cp_matrix(c.m), c)


def mather_from_polar(p: DegreeSequence) -> DegreeSequence:
    return _apply(cp_matrix(p.m), p)


def reciprocal_from_polar(p: DegreeSequence) -> DegreeSequence:
    out = []
    total = 0
    for x in p:
        total += x
        out.append(total)
    return DegreeSequence(p.m, tuple(out))


def reciprocal_from_mather(c: DegreeSequence) -> DegreeSequence:
    """Reciprocal degrees straight from Mather-Chern degrees.

    Entry i is sum_j (-1)^j * sum_{l=0}^{i-j} C(m-j+1, l) * c_j; this is
    the double sum written out, not the composition of the two maps above.
    """
    m = c.m
    out = []
    for i in range(m + 1):
        out.append(sum((-1) ** j * sum(binomial(m - j + 1, l) for l in range(i - j + 1)) * c[j]
                       for j in range(i + 1)))
    return DegreeSequence(m, tuple(out))


def ed_degree_from_mather(c: DegreeSequence) -> int:
    """Top reciprocal degree via the closed form sum_j (-1)^j (2^(m-j+1) - 1) c_j."""
    m = c.m
    return sum((-1) ** j * (2 ** (m - j + 1) - 1) * c[j] for j in range(m + 1))


def dual_degree_reversal(p: DegreeSequence, delta: int) -> DegreeSequence:
    """Polar degrees of the k-th dual of a k-reflexive variety with k-th dual defect ``delta``.

    Entry i is p[m - delta - i]; entry 0 is therefore the degree of the dual.
    """
    m = p.m
    if not 0 <= delta <= m:
        raise PreconditionError("bad_defect", f"dual defect must lie in 0..{m}, got {delta}")
    top = m - delta
    if any(p[i] != 0 for i in range(top + 1, m + 1)):
        raise PreconditionError(
            "nonzero_above_top", f"polar degrees above index {top} must vanish for defect {delta}")
    return DegreeSequence(top, tuple(p[top - i] for i in range(top + 1)))


def osculating_hypersurface_polar(data: OsculatingHypersurfaceData) -> int:
    i = data.i
    return data.c1_power_degree - sum(
        binomial(i, j) * s for j, s in enumerate(data.segre_term_degrees))
