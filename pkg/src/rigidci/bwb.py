"""Borel-Weil-Bott for line bundles on G/P.

H^q(G/P, L^w) is nonzero for at most one q.  Write v = w + rho.  If v lies
on a wall, all cohomology vanishes; otherwise the unique Weyl element u
with u(v) dominant has length q, and H^q is the irreducible module with
highest weight u(v) - rho.  We reach u(v) by reflecting at negative
coordinates; a zero coordinate at any step means v lies on a wall.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import DomainError
from .rootdata import HomSpace, RootSystem, build_root_system, weyl_dim


@dataclass(frozen=True)
class LineBundleClass:
    space: HomSpace
    weight: tuple[int, ...]

    def __post_init__(self):
        w = tuple(self.weight)
        if len(w) != self.space.rank:
            raise DomainError("weight length differs from the rank")
        for i, x in enumerate(w):
            if x != 0 and i + 1 not in self.space.marked:
                raise DomainError(f"weight {w} is not supported on the marked nodes of {self.space}")
        object.__setattr__(self, "weight", w)

    @classmethod
    def of_degrees(cls, space: HomSpace, degrees: Sequence[int]) -> "LineBundleClass":
        return cls(space, space.weight(degrees))

    @property
    def degrees(self) -> tuple[int, ...]:
        return self.space.degrees(self.weight)

    def is_ample(self) -> bool:
        return all(d > 0 for d in self.degrees)

    def __add__(self, other: "LineBundleClass") -> "LineBundleClass":
        return LineBundleClass(self.space, tuple(a + b for a, b in zip(self.weight, other.weight)))

    def __sub__(self, other: "LineBundleClass") -> "LineBundleClass":
        return LineBundleClass(self.space, tuple(a - b for a, b in zip(self.weight, other.weight)))


@dataclass(frozen=True)
class Regular:
    length: int
    dominant: tuple[int, ...]


SINGULAR = None


def dot_regularize(rs: RootSystem, w: Sequence[int], order: random.Random | None = None) -> Regular | None:
    """Bring w + rho to the dominant chamber; None if it hits a wall.

    ``order`` (a seeded RNG) picks among the negative coordinates at random
    instead of the first one; the answer must not depend on it.
    """
    v = [x + 1 for x in w]
    steps = 0
    n = rs.rank
    while True:
        if 0 in v:
            return SINGULAR
        neg = [i for i in range(n) if v[i] < 0]
        if not neg:
            return Regular(steps, tuple(x - 1 for x in v))
        i = order.choice(neg) if order is not None else neg[0]
        c = v[i]
        row = rs.cartan[i]
        for j in range(n):
            if row[j]:
                v[j] -= c * row[j]
        steps += 1


@dataclass(frozen=True)
class CohomologyResult:
    degree: int | None
    highest_weight: tuple[int, ...] | None
    dim: int

    @property
    def is_zero(self) -> bool:
        return self.degree is None

    @property
    def kind(self) -> str:
        return "Zero" if self.is_zero else "Concentrated"

    def euler(self) -> int:
        if self.is_zero:
            return 0
        return -self.dim if self.degree % 2 else self.dim


ZERO = CohomologyResult(None, None, 0)


def _cohomology(series: str, rank: int, weight: tuple[int, ...]) -> CohomologyResult:
    rs = build_root_system(series, rank)
    reg = dot_regularize(rs, weight)
    if reg is None:
        return ZERO
    return CohomologyResult(reg.length, reg.dominant, weyl_dim(rs, reg.dominant))


_memo = lru_cache(maxsize=200_000)(_cohomology)


def weight_cohomology(rs: RootSystem, weight: Sequence[int], memo: bool = True) -> CohomologyResult:
    """BWB on the full flag variety for an arbitrary integral weight."""
    f = _memo if memo else _cohomology
    return f(rs.series, rs.rank, tuple(weight))


def line_cohomology(lb: LineBundleClass, memo: bool = True) -> CohomologyResult:
    return weight_cohomology(lb.space.root_system, lb.weight, memo)


def euler_char_line(lb: LineBundleClass) -> int:
    return line_cohomology(lb).euler()


def canonical_class(hs: HomSpace) -> LineBundleClass:
    return LineBundleClass(hs, tuple(-x for x in hs.anticanonical))
