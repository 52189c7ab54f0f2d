"""Ranks and higher-order polar degrees of projective curves.

For a curve of degree d in P^n whose normalization has genus g and with
stationary indices kappa_0..kappa_{n-2}, the k-th rank (degree of the k-th
osculating developable) is

    r_k = (k+1)(d + k(g-1)) - sum_{j<k} (k-j) kappa_j.

The order-k polar degrees are (d, r_k) and the order-k reciprocal degree is
d + r_k.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from polarclass.class_calculus import DegreeSequence
from polarclass.errors import InputError


@dataclass(frozen=True)
class CurveData:
    n: int
    d: int
    g: int
    kappa: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "kappa", tuple(self.kappa))
        if self.n < 1:
            raise InputError(f"ambient dimension n must be >= 1, got {self.n}")
        if self.d < 1:
            raise InputError(f"degree must be >= 1, got {self.d}")
        if self.g < 0:
            raise InputError(f"genus must be >= 0, got {self.g}")
        if len(self.kappa) != self.n - 1:
            raise InputError(f"need {self.n - 1} stationary indices for n={self.n}, got {len(self.kappa)}")
        if any(x < 0 for x in self.kappa):
            raise InputError("stationary indices must be >= 0")

    @classmethod
    def rational_normal(cls, n: int) -> "CurveData":
        return cls(n, n, 0, (0,) * (n - 1))


def _check_order(C: CurveData, k: int, lowest: int) -> None:
    if not lowest <= k <= C.n - 1:
        raise InputError(f"order k must lie in {lowest}..{C.n - 1}, got {k}")


def rank(C: CurveData, k: int) -> int:
    _check_order(C, k, 0)
    r = (k + 1) * (C.d + k * (C.g - 1)) - sum((k - j) * C.kappa[j] for j in range(k))
    if r < 0:
        warnings.warn(f"rank r_{k} = {r} is negative; (d, g, kappa) is not realizable", stacklevel=2)
    return r


def polar_degrees_curve(C: CurveData, k: int) -> DegreeSequence:
    _check_order(C, k, 1)
    return DegreeSequence(1, (C.d, rank(C, k)))


def reciprocal_degree_curve(C: CurveData, k: int) -> int:
    _check_order(C, k, 1)
    return C.d + rank(C, k)


def strict_dual_ranks(C: CurveData) -> list[int]:
    """Ranks r_0..r_{n-1} of the strict dual curve: the ranks of C reversed."""
    return [rank(C, C.n - 1 - k) for k in range(C.n)]
