"""Degrees of higher-order dual varieties of scrolls.

By degree reversal for k-reflexive varieties, the degree of the k-th dual
equals the top order-k polar degree, so these are also deg M_{k,m}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

from polarclass.errors import InputError, PreconditionError


@dataclass(frozen=True)
class RationalScrollSpec:
    """Rational normal scroll P(O(d_1) + ... + O(d_m)) over P^1."""

    type: tuple[int, ...]

    def __post_init__(self):
        t = tuple(sorted(self.type))
        if len(t) < 2:
            raise InputError("a rational normal scroll needs m >= 2 summands")
        if t[0] < 1:
            raise InputError("all d_i must be positive")
        object.__setattr__(self, "type", t)

    @property
    def m(self) -> int:
        return len(self.type)

    @property
    def d(self) -> int:
        return sum(self.type)

    @property
    def n(self) -> int:
        return sum(x + 1 for x in self.type) - 1


def rns_dual_degree(S: RationalScrollSpec, k: int) -> int:
    if not 1 <= k <= S.type[0]:
        raise PreconditionError("order_out_of_range", f"formula holds for 1 <= k <= d_1 = {S.type[0]}, got {k}")
    return k * S.d - k * (k - 1) * S.m


def rns_is_balanced_selfdual(S: RationalScrollSpec, k: int) -> bool:
    degree = rns_dual_degree(S, k)
    balanced = all(x == k for x in S.type)
    if balanced:
        assert degree == S.d
    return balanced


@dataclass(frozen=True)
class EllipticScrollSpec:
    """Scroll P(E x M) over an elliptic curve: Atiyah invariant e, deg M = d."""

    e: int
    d: int
    decomposable: bool

    def __post_init__(self):
        if self.decomposable and self.e < 0:
            raise PreconditionError("no_elliptic_case", "a decomposable bundle has e >= 0")
        if not self.decomposable and self.e not in (0, -1):
            raise PreconditionError("no_elliptic_case", "an indecomposable bundle has e in {0, -1}")
        if self.d < self.e + 3:
            raise PreconditionError("not_embedded", f"need d >= e + 3 for an embedding, got d={self.d}, e={self.e}")

    @property
    def degree(self) -> int:
        return 2 * self.d - self.e

    @property
    def n(self) -> int:
        return 2 * self.d - self.e - 1


class EllipticCase(NamedTuple):
    name: str
    applies: Callable[[EllipticScrollSpec], bool]
    order: Callable[[int], int]
    degree: Callable[[int], int]


ELLIPTIC_CASES = (
    EllipticCase("decomposable, e = 0", lambda s: s.decomposable and s.e == 0,
                 lambda d: d - 1, lambda d: 2 * d * (d - 1)),
    EllipticCase("decomposable, e = 1", lambda s: s.decomposable and s.e == 1,
                 lambda d: d - 2, lambda d: 2 * d * d - 5 * d + 2),
    EllipticCase("decomposable, e >= 2", lambda s: s.decomposable and s.e >= 2,
                 lambda d: d - 2, lambda d: d * (d - 1)),
    EllipticCase("indecomposable, e = -1", lambda s: not s.decomposable and s.e == -1,
                 lambda d: d - 1, lambda d: 2 * d * d - 3),
    EllipticCase("indecomposable, e = 0", lambda s: not s.decomposable and s.e == 0,
                 lambda d: d - 1, lambda d: 2 * d * d - d - 2),
)


def elliptic_case(S: EllipticScrollSpec) -> EllipticCase:
    for case in ELLIPTIC_CASES:
        if case.applies(S):
            return case
    raise PreconditionError("no_elliptic_case", f"no formula for {S}")


def elliptic_dual_degree(S: EllipticScrollSpec) -> tuple[int, int]:
    """(k, deg X^(k)) for the order k at which the closed formula is known."""
    case = elliptic_case(S)
    return case.order(S.d), case.degree(S.d)
