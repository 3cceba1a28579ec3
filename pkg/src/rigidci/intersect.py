"""Complete intersections X = D_1 ∩ ... ∩ D_r in G/P via the Koszul complex."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from . import tables
from .bwb import LineBundleClass, line_cohomology
from .errors import DomainError, HypothesisError
from .rootdata import HomSpace, is_flag_of_lines, normalize, projective_dim, quadric_dim

MAX_KOSZUL = 20


@dataclass(frozen=True)
class CISpec:
    space: HomSpace
    divisors: tuple[LineBundleClass, ...]

    def __post_init__(self):
        divs = tuple(self.divisors)
        if not divs:
            raise DomainError("a complete intersection needs at least one divisor")
        for d in divs:
            if d.space != self.space:
                raise DomainError("divisor lives on another space")
            if not d.is_ample():
                raise DomainError(f"divisor {d.degrees} is not ample")
        if len(divs) >= self.space.dimension:
            raise DomainError(f"r = {len(divs)} must be < dim {self.space} = {self.space.dimension}")
        object.__setattr__(self, "divisors", divs)

    @classmethod
    def of_degrees(cls, space: HomSpace, degrees: Sequence[Sequence[int] | int]) -> "CISpec":
        divs = []
        for d in degrees:
            d = (d,) if isinstance(d, int) else tuple(d)
            divs.append(LineBundleClass.of_degrees(space, d))
        return cls(space, tuple(divs))

    @property
    def r(self) -> int:
        return len(self.divisors)

    @property
    def degrees(self) -> tuple[tuple[int, ...], ...]:
        return tuple(d.degrees for d in self.divisors)

    def total(self) -> LineBundleClass:
        out = LineBundleClass(self.space, (0,) * self.space.rank)
        for d in self.divisors:
            out = out + d
        return out


def is_fano_pair(spec: CISpec) -> bool:
    """K^* - sum D_i ample on G/P."""
    rest = [a - b for a, b in zip(spec.space.anticanonical, spec.total().weight)]
    return all(rest[k - 1] > 0 for k in spec.space.marked)


@dataclass(frozen=True)
class SectionCount:
    value: int
    exact: bool


def restricted_sections(spec: CISpec, m: LineBundleClass) -> SectionCount:
    """Koszul alternating sum for h^0(X, M|_X).

    ``exact`` is set when every term with |S| = k is zero or sits in degree
    at most k - 1 (and the empty term in degree 0): then the vanishing chain
    turns the Euler characteristic into h^0.
    """
    if not m.is_ample():
        raise DomainError("restricted_sections needs an ample class")
    if not is_fano_pair(spec):
        raise HypothesisError("K^* - D is not ample (Fano hypothesis)")
    if spec.r > MAX_KOSZUL:
        raise DomainError(f"refusing 2^{spec.r} Koszul terms")
    total = 0
    exact = True
    idx = range(spec.r)
    for k in range(spec.r + 1):
        for S in combinations(idx, k):
            w = list(m.weight)
            for i in S:
                for j, x in enumerate(spec.divisors[i].weight):
                    w[j] -= x
            res = line_cohomology(LineBundleClass(spec.space, tuple(w)))
            total += -res.euler() if k % 2 else res.euler()
            if not res.is_zero:
                if k == 0 and res.degree != 0:
                    exact = False
                elif k > 0 and res.degree > k - 1:
                    exact = False
    if exact and total < 0:
        raise DomainError("negative section count flagged exact")
    return SectionCount(total, exact)


def clubsuit(hs: HomSpace) -> bool:
    """False for P^n, Q^n, C_l/P2 (l >= 3), F4/P4 and P(T_P^m)."""
    if is_flag_of_lines(hs):
        return False
    c = normalize(hs).canonical
    if projective_dim(c) is not None or quadric_dim(c) is not None:
        return False
    if c.series == "C" and c.marked == (2,) and c.rank >= 3:
        return False
    if c.series == "F" and c.marked == (4,):
        return False
    return True


def flag_s(spec: CISpec) -> int:
    return sum(1 for d in spec.degrees if d == (1, 1))


def chi_tangent(spec: CISpec) -> int:
    """h^0(T_X) - h^1(T_X) from the Koszul complex and the normal sequence."""
    if not is_fano_pair(spec):
        raise HypothesisError("K^* - D is not ample (Fano hypothesis)")
    hs = spec.space
    if is_flag_of_lines(hs):
        info = normalize(hs)
        sections = sum(restricted_sections(spec, d).value for d in spec.divisors)
        return info.aut_dim + flag_s(spec) - sections
    if not clubsuit(hs):
        raise HypothesisError(
            f"{hs} is P^n, Q^n, C_l/P2 or F4/P4; rewrite the intersection in the larger ambient first"
        )
    info = normalize(hs)
    if not info.aut_is_g:
        raise HypothesisError(
            f"H^0(T) of {hs} is larger than its g; restate on {info.canonical}"
        )
    return info.aut_dim - sum(restricted_sections(spec, d).value for d in spec.divisors)


def transfer(spec: CISpec, target: HomSpace) -> CISpec:
    """Restate a Picard-rank-one intersection on an isomorphic presentation."""
    if spec.space.picard_rank != 1 or target.picard_rank != 1:
        raise DomainError("degree transfer needs Picard rank one")
    if normalize(spec.space).canonical != normalize(target).canonical:
        raise DomainError(f"{spec.space} and {target} are not isomorphic")
    return CISpec.of_degrees(target, [d[0] for d in spec.degrees])


def ms_exception(hs: HomSpace, l: LineBundleClass) -> bool:
    """Is (hs, l) one of the listed cases with H^1(T ⊗ L^*) != 0?"""
    if not l.is_ample():
        raise DomainError("ms_exception needs an ample class")
    rows = tables.load().ms_exceptions
    degs = l.degrees
    for row in rows:
        kind = row["kind"]
        if kind == "PT":
            if is_flag_of_lines(hs) and list(degs) == row["degrees"]:
                return True
            continue
        if hs.picard_rank != 1:
            continue
        d = degs[0]
        if kind == "P":
            p = projective_dim(hs)
            if p == row["dim"] and (d == row.get("degree") or d >= row.get("degree_min", 10**9)):
                return True
        elif kind == "Q":
            q = quadric_dim(hs)
            if q is not None and q >= row["dim_min"] and d == row["degree"]:
                return True
        elif kind == "space":
            c = normalize(hs).canonical
            if (c.series, c.marked) == (row["series"], (row["node"],)) and c.rank >= row["rank_min"] and d == row["degree"]:
                return True
    return False
