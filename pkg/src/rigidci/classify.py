"""Local rigidity of Fano complete intersections in G/P, and quasi-homogeneity
of general hyperplane sections.

The decision procedure is a chain of rules.  Every branch appends a
:class:`Rule` to the verdict so a report shows why it was reached.  Stabilizer
dimensions that cannot be computed here come from the embedded tables, each
row carrying its own citation; the classifier never guesses one.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from . import tables
from .errors import DataIntegrityError, DomainError, HypothesisError, InternalInvariantError
from .intersect import CISpec, chi_tangent, clubsuit, is_fano_pair, restricted_sections, transfer
from .notation import space_name
from .rootdata import (
    HomSpace,
    diagram_image,
    is_flag_of_lines,
    iter_single_node_spaces,
    lie_dim,
    normalize,
    projective_dim,
    quadric_dim,
)

TABLE_MAX_RANK = 30


class FanoError(HypothesisError):
    """K^* - sum D_i is not ample."""


class Rigid(str, enum.Enum):
    YES = "Yes"
    NO = "No"
    OUT_OF_SCOPE = "OutOfScope"


class QH(str, enum.Enum):
    YES = "Yes"
    NO = "No"
    NOT_APPLICABLE = "NotApplicable"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Rule:
    id: str
    text: str
    source: str = ""

    def as_dict(self) -> dict:
        return {"id": self.id, "text": self.text, "source": self.source}

    def __str__(self):
        return f"{self.id}: {self.text}" + (f" (source: {self.source})" if self.source else "")


@dataclass(frozen=True)
class StabRow:
    """One instantiated row of the generic-stabilizer table."""

    id: str
    space: HomSpace
    dim_V: int
    h_desc: str
    dim_h: int
    reductive: bool


@dataclass(frozen=True)
class SectionStabRow:
    id: str
    space: HomSpace
    r: int
    stab_dim: int
    stab_desc: str
    source: str


@dataclass
class Verdict:
    space: str
    degrees: list
    rigid: Rigid = Rigid.OUT_OF_SCOPE
    quasi_homogeneous: QH = QH.NOT_APPLICABLE
    homogeneous: bool = False
    chi: int | None = None
    h0: int | None = None
    h1: int | None = None
    label: str = ""
    ambient: str = ""
    rule_chain: list[Rule] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def fire(self, rule_id: str, text: str, source: str = "") -> None:
        self.rule_chain.append(Rule(rule_id, text, source))

    def check(self) -> "Verdict":
        if self.h0 is not None and self.h1 is not None:
            if self.chi is not None and self.h0 - self.h1 != self.chi:
                raise InternalInvariantError(f"{self.label}: h0 - h1 = {self.h0 - self.h1} but chi = {self.chi}")
            if self.h1 < 0 or self.h0 < 0:
                raise InternalInvariantError(f"{self.label}: negative cohomology ({self.h0}, {self.h1})")
            if (self.rigid is Rigid.YES) != (self.h1 == 0):
                raise InternalInvariantError(f"{self.label}: verdict {self.rigid.value} with h1 = {self.h1}")
        return self

    def as_dict(self) -> dict:
        return {
            "space": self.space,
            "degrees": [list(d) for d in self.degrees],
            "label": self.label,
            "ambient": self.ambient,
            "rigid": self.rigid.value,
            "quasi_homogeneous": self.quasi_homogeneous.value,
            "homogeneous": self.homogeneous,
            "chi": self.chi,
            "h0": self.h0,
            "h1": self.h1,
            "rule_chain": [r.as_dict() for r in self.rule_chain],
            "notes": list(self.notes),
        }


# ---------------------------------------------------------------- table lookups


def _instantiate(row: tables.FamilyRow, rank: int, t) -> StabRow:
    return StabRow(
        id=row.id,
        space=HomSpace(row.series, rank, (row.node(t),)),
        dim_V=row.field("dim_V", t),
        h_desc=row.raw["h"],
        dim_h=row.field("dim_h", t),
        reductive=bool(row.raw["reductive"]),
    )


@dataclass(frozen=True)
class RowCheck:
    row: str
    space: str
    dim_V: int
    weyl: int
    dim_h: int
    dim_g: int

    @property
    def passed(self) -> bool:
        return self.dim_V == self.weyl and 0 <= self.dim_h < self.dim_g


def verify_table1(max_rank: int = TABLE_MAX_RANK) -> list[RowCheck]:
    """Compare every stored dim V with the Weyl dimension, for all ranks <= max_rank."""
    out = []
    for row in tables.load().elashvili:
        for rank, t in row.instances(max_rank):
            inst = _instantiate(row, rank, t)
            rs = inst.space.root_system
            out.append(RowCheck(row.id, inst.space.label, inst.dim_V, inst.space.fundamental_dim, inst.dim_h, lie_dim(rs)))
    return out


@lru_cache(maxsize=4)
def _verified(fingerprint: str) -> None:
    bad = [c for c in verify_table1() if not c.passed]
    if bad:
        c = bad[0]
        raise DataIntegrityError(f"row {c.row} at {c.space}: stored dim V {c.dim_V}, Weyl dimension {c.weyl}")


def _rows_for(space: HomSpace, rows: Iterable[tables.FamilyRow]) -> Iterable[tuple[tables.FamilyRow, object]]:
    key = diagram_image(space)
    for row in rows:
        if row.series != space.series:
            continue
        t = row.param_for_rank(space.rank)
        if t is False:
            continue
        if diagram_image(HomSpace(row.series, space.rank, (row.node(t),))) == key:
            yield row, t


def stab_row(hs: HomSpace) -> StabRow | None:
    t_ = tables.load()
    _verified(t_.fingerprint)
    for row, t in _rows_for(hs, t_.elashvili):
        return _instantiate(row, hs.rank, t)
    return None


def section_stab_row(hs: HomSpace, r: int) -> SectionStabRow | None:
    for row, t in _rows_for(hs, tables.load().section_stabs):
        if row.raw["r"] == r:
            return SectionStabRow(row.id, hs, r, row.field("stab_dim", t), row.raw["desc"], row.raw["source"])
    return None


def cited_rigid(hs: HomSpace, r: int) -> dict | None:
    for row, _ in _rows_for(hs, tables.load().cited_rigid):
        if row.raw["r"] == r:
            return row.raw
    return None


# ---------------------------------------------------------------- single rules


def hyperplane_h1(hs: HomSpace) -> tuple[int, int]:
    """(h0, h1) of T_X for a general hyperplane section X of hs."""
    if hs.picard_rank != 1:
        raise DomainError("hyperplane_h1 needs Picard rank one")
    if not clubsuit(hs):
        raise HypothesisError(f"{hs} violates the club condition; reduce to a larger ambient first")
    info = normalize(hs)
    if not info.aut_is_g:
        raise HypothesisError(f"H^0(T) of {hs} is larger than its g; use {info.canonical}")
    rs = hs.root_system
    g, V = lie_dim(rs), hs.fundamental_dim
    if V > g:
        raise DomainError(f"dim V = {V} exceeds dim g = {g}")
    if V == g:
        return rs.rank, rs.rank - 1
    row = stab_row(hs)
    if row is None:
        raise DataIntegrityError(f"no generic stabilizer row for {hs} (dim V = {V} < dim g = {g})")
    if row.reductive:
        return row.dim_h, row.dim_h + V - g - 1
    return row.dim_h + 1, row.dim_h + V - g


def candidate_filter(hs: HomSpace, r: int) -> bool:
    """dim g >= r (dim V - r)."""
    if r < 2:
        raise DomainError("candidate_filter needs r >= 2")
    return lie_dim(hs.root_system) >= r * (hs.fundamental_dim - r)


# ---------------------------------------------------------------- labels


def _deg_text(degrees) -> str:
    parts = [":".join(map(str, d)) if len(d) > 1 else str(d[0]) for d in degrees]
    return "[" + ",".join(parts) + "]"


def section_label(space: HomSpace, degrees) -> str:
    return space_name(space) + _deg_text(degrees)


def _sort_key(label: str):
    return [int(p) if p.isdigit() else p for p in re.split(r"(\d+)", label)]


# ---------------------------------------------------------------- the decision tree


def reduce_to_club(spec: CISpec) -> CISpec:
    """Restate spec on the canonical presentation, moving sections of C_l/P2
    and F4/P4 into Gr(2,2l) and E6/P1 with one more hyperplane."""
    hs = spec.space
    if hs.picard_rank != 1:
        return spec
    c = normalize(hs).canonical
    spec = transfer(spec, c) if c != hs else spec
    degs = [d[0] for d in spec.degrees]
    if c.series == "C" and c.marked == (2,) and c.rank >= 3:
        return CISpec.of_degrees(HomSpace("A", 2 * c.rank - 1, (2,)), [1] + degs)
    if c.series == "F" and c.marked == (4,):
        return CISpec.of_degrees(HomSpace("E", 6, (1,)), [1] + degs)
    return spec



def _new_verdict(spec: CISpec) -> Verdict:
    return Verdict(space=spec.space.label, degrees=[list(d) for d in spec.degrees])


def classify_rigidity(spec: CISpec) -> Verdict:
    """Decide local rigidity of a general member of the family described by spec."""
    if not is_fano_pair(spec):
        raise FanoError(f"K^* - sum D_i is not ample on {spec.space} for degrees {spec.degrees}")
    v = _new_verdict(spec)
    _classify(spec, v)
    return v.check()


def _sorted_spec(spec: CISpec) -> CISpec:
    return CISpec.of_degrees(spec.space, sorted(spec.degrees))


def _classify(spec: CISpec, v: Verdict) -> None:
    hs = spec.space
    if is_flag_of_lines(hs):
        return _flag_of_lines(spec, v)
    if hs.picard_rank != 1:
        v.rigid = Rigid.OUT_OF_SCOPE
        v.fire("out-of-scope", f"Picard rank {hs.picard_rank} ambient other than P(T_P^m) is not treated")
        v.label = section_label(hs, spec.degrees)
        return

    info = normalize(hs)
    c = info.canonical
    if c != hs:
        v.fire("normalize", f"{hs} is {c} ({space_name(c)})")
        spec = transfer(spec, c)
        hs = c
    spec = _sorted_spec(spec)
    v.ambient = hs.label
    v.label = section_label(hs, spec.degrees)

    if projective_dim(hs) is not None or quadric_dim(hs) is not None:
        return _projective(spec, v)
    if hs.series == "C" and hs.marked == (2,) and hs.rank >= 3:
        target = HomSpace("A", 2 * hs.rank - 1, (2,))
        v.fire("symplectic-reduction", f"{hs} is a hyperplane section of {target}; add one hyperplane")
        v.notes.append(f"input read as a section of {space_name(hs)}")
        return _classify(CISpec.of_degrees(target, [1] + [d[0] for d in spec.degrees]), v)
    if hs.series == "F" and hs.marked == (4,):
        target = HomSpace("E", 6, (1,))
        v.fire("f4-reduction", f"{hs} is a hyperplane section of {target}; add one hyperplane")
        v.notes.append(f"input read as a section of {space_name(hs)}")
        return _classify(CISpec.of_degrees(target, [1] + [d[0] for d in spec.degrees]), v)

    if not info.aut_is_g:
        raise InternalInvariantError(f"canonical form {hs} has extra automorphisms")
    rs = hs.root_system
    g, V = lie_dim(rs), hs.fundamental_dim
    if V > g:
        v.rigid = Rigid.NO
        v.fire("big-representation", f"dim V = {V} > dim g = {g}: H^1(T_X) is nonzero")
        return
    degs = [d[0] for d in spec.degrees]
    r = spec.r
    if r == 1:
        v.chi = chi_tangent(spec)
        if degs[0] >= 2:
            v.rigid = Rigid.NO
            v.fire("hypersurface-degree", f"hypersurface of degree {degs[0]} >= 2 in a club space moves")
            return
        h0, h1 = hyperplane_h1(hs)
        row = stab_row(hs) if V < g else None
        if V == g:
            v.fire("adjoint", f"V is the adjoint representation: h1 = rank - 1 = {h1}")
        else:
            kind = "reductive" if row.reductive else "non-reductive"
            v.fire("hyperplane-stabilizer", f"generic stabilizer {row.h_desc} of dim {row.dim_h} ({kind})", "Elashvili table")
        if h0 - h1 != v.chi:
            raise InternalInvariantError(f"{hs}: stabilizer data gives h0 - h1 = {h0 - h1}, Koszul gives {v.chi}")
        v.h0, v.h1 = h0, h1
        v.rigid = Rigid.YES if h1 == 0 else Rigid.NO
        return

    if not candidate_filter(hs, r):
        v.rigid = Rigid.NO
        v.fire("candidate-filter", f"dim g = {g} < r(dim V - r) = {r * (V - r)}")
        return
    v.chi = chi_tangent(spec)
    if any(d >= 2 for d in degs):
        v.rigid = Rigid.NO
        v.fire("nonlinear-candidate", "only linear sections of the candidate spaces can be rigid")
        lin = section_stab_row(hs, r) or cited_rigid(hs, r)
        if lin is not None:
            lin_chi = chi_tangent(CISpec.of_degrees(hs, [1] * r))
            v.notes.append(f"chi margin against the linear section: {v.chi} vs {lin_chi}")
        return
    cited = cited_rigid(hs, r)
    if cited is not None:
        v.h0, v.h1 = v.chi, 0
        v.rigid = Rigid.YES
        v.fire("cited-rigid", cited["reason"], cited["source"])
        return
    row = section_stab_row(hs, r)
    if row is None:
        raise DataIntegrityError(f"no section stabilizer row for {hs} with r = {r}")
    v.h0 = row.stab_dim
    v.h1 = row.stab_dim - v.chi
    v.rigid = Rigid.YES if v.h1 == 0 else Rigid.NO
    v.fire("section-stabilizer", f"stabilizer of the linear section is {row.stab_desc}, dim {row.stab_dim}", row.source)


def _projective(spec: CISpec, v: Verdict) -> None:
    """Reduce a complete intersection in P^N or Q^n to P^N' and apply the standard answer."""
    hs = spec.space
    p, q = projective_dim(hs), quadric_dim(hs)
    degs = [d[0] for d in spec.degrees]
    if p is not None:
        N = p
    else:
        N = q + 1
        degs = degs + [2]
        v.fire("quadric-ambient", f"Q^{q} is a quadric in P^{N}")
    N2 = N - sum(1 for d in degs if d == 1)
    rest = sorted(d for d in degs if d >= 2)
    if N2 != N:
        v.fire("drop-linear", f"linear equations cut P^{N} to P^{N2}")
    k = N2 - len(rest)
    if not rest:
        v.label = f"P{k}"
        v.rigid = Rigid.YES
        v.h0, v.h1 = k * k + 2 * k, 0
    elif rest == [2]:
        v.label = f"Q{k}" if k >= 2 else "P1"
        v.rigid = Rigid.YES
        v.h0 = (k + 2) * (k + 1) // 2 if k >= 2 else 3
        v.h1 = 0
    else:
        v.rigid = Rigid.NO
        v.label = f"P{N2}" + _deg_text([(d,) for d in rest])
    amb = HomSpace("A", N2, (1,))
    red = CISpec.of_degrees(amb, rest) if rest else None
    if red is not None:
        v.chi = N2 * N2 + 2 * N2 - sum(restricted_sections(red, d).value for d in red.divisors)
        if v.rigid is Rigid.NO:
            v.h0, v.h1 = 0, -v.chi
    else:
        v.chi = v.h0
    v.ambient = amb.label
    if v.rigid is Rigid.YES:
        v.fire("projective-quadric", f"X is {v.label}")
    else:
        v.fire("projective-general", f"complete intersection of degrees {rest} in P^{N2} is not P^k or Q^k; no vector fields")


def _flag_of_lines(spec: CISpec, v: Verdict) -> None:
    hs = spec.space
    m = hs.rank
    degs = sorted(spec.degrees)
    v.ambient = hs.label
    v.label = section_label(hs, degs)
    v.chi = chi_tangent(spec)
    if spec.r == 1 and degs[0] == (1, 1):
        # a general (1,1) divisor is the variety of incident point-hyperplane
        # pairs fixed by a regular semisimple element: aut = its Cartan
        v.h0, v.h1 = m, m - v.chi
        v.rigid = Rigid.YES if v.h1 == 0 else Rigid.NO
        v.fire("flag-of-lines", f"(1,1) divisor of P(T_P{m}): h0 = {m}, h1 = {v.h1}")
        return
    v.rigid = Rigid.NO
    v.fire("flag-of-lines", f"chi = {v.chi} < 0 forces H^1(T_X) != 0" if v.chi < 0 else "not a (1,1) hypersurface")
    if v.chi >= 0:
        v.notes.append("chi is not negative here; the verdict relies on the cited argument")


# ---------------------------------------------------------------- quasi-homogeneity


def _qh_row(hs: HomSpace) -> dict | None:
    for row in tables.load().qh_hyperplane:
        if row["series"] != hs.series or row["node"] != hs.marked[0]:
            continue
        if "rank" in row and row["rank"] != hs.rank:
            continue
        if hs.rank < row.get("rank_min", 0):
            continue
        return row
    return None


def classify_quasi_homogeneous_hyperplane(hs: HomSpace) -> Verdict:
    """Quasi-homogeneity of a general hyperplane section of hs (Picard rank one)."""
    if hs.picard_rank != 1:
        raise DomainError("quasi-homogeneity is decided for Picard rank one")
    c = normalize(hs).canonical
    if c.dimension == 1:
        v = Verdict(space=hs.label, degrees=[[1]], label="point", ambient=c.label)
        v.quasi_homogeneous, v.homogeneous = QH.YES, True
        v.fire("qh-projective", "a hyperplane of P1 is a point")
        return v
    v = classify_rigidity(CISpec.of_degrees(hs, [1]))
    if projective_dim(c) is not None or quadric_dim(c) is not None:
        v.quasi_homogeneous, v.homogeneous = QH.YES, True
        v.fire("qh-projective", "hyperplane sections of P^n and Q^n are homogeneous")
        return v
    g, V = lie_dim(c.root_system), c.fundamental_dim
    if V >= g:
        v.quasi_homogeneous = QH.NO
        v.fire("qh-dimension", f"dim V = {V} >= dim g = {g}: aut(X) is smaller than X")
        return v
    row = _qh_row(c)
    if row is None:
        v.quasi_homogeneous = QH.UNKNOWN
        v.fire("qh-missing", f"no quasi-homogeneity row for {c}")
        return v
    qh = bool(row["qh"]) and c.rank <= row.get("rank_max_qh", c.rank)
    hom = row["homogeneous"]
    if hom == "rank_odd":
        hom = c.rank % 2 == 1
    v.quasi_homogeneous = QH.YES if qh else QH.NO
    v.homogeneous = bool(hom) and qh
    v.fire("qh-table", row["orbit"])
    return v


# ---------------------------------------------------------------- enumeration


def _multidegrees(bound: int, r: int, low: int = 1) -> Iterable[tuple[int, ...]]:
    """Nondecreasing r-tuples of integers >= low with sum < bound."""
    if r == 0:
        yield ()
        return
    for d in range(low, bound):
        if d * r >= bound:
            break
        for rest in _multidegrees(bound - d, r - 1, d):
            yield (d, *rest)


def _bidegrees(m: int, r: int, low=(1, 1), used=(0, 0)) -> Iterable[tuple[tuple[int, int], ...]]:
    """Lexicographically nondecreasing r-tuples of bidegrees with both sums < m."""
    if r == 0:
        yield ()
        return
    for a in range(low[0], m - used[0] - (r - 1)):
        for b in range(low[1] if a == low[0] else 1, m - used[1] - (r - 1)):
            for rest in _bidegrees(m, r - 1, (a, b), (used[0] + a, used[1] + b)):
                yield ((a, b), *rest)


def candidate_specs(max_rank: int, max_r: int) -> list[CISpec]:
    """Every Fano complete intersection in scope, one per canonical presentation."""
    if max_rank > TABLE_MAX_RANK:
        raise DomainError(f"max_rank must be <= {TABLE_MAX_RANK}")
    seen: dict[tuple, CISpec] = {}
    for hs in iter_single_node_spaces(max_rank):
        c = normalize(hs).canonical
        bound = c.index()
        for r in range(1, min(max_r, c.dimension - 1) + 1):
            for degs in _multidegrees(bound, r):
                key = (c, degs)
                if key not in seen:
                    seen[key] = CISpec.of_degrees(c, degs)
    for m in range(2, max_rank + 1):
        hs = HomSpace("A", m, (1, m))
        for r in range(1, min(max_r, hs.dimension - 1) + 1):
            for degs in _bidegrees(m, r):
                seen.setdefault((hs, degs), CISpec.of_degrees(hs, degs))
    return list(seen.values())


def enumerate_verdicts(max_rank: int, max_r: int) -> list[Verdict]:
    """Rigid verdicts over every single-node G/P and P(T_P^m) within bounds, one per variety."""
    best: dict[str, Verdict] = {}
    for spec in candidate_specs(max_rank, max_r):
        v = classify_rigidity(spec)
        if v.rigid is Rigid.YES and v.label not in best:
            best[v.label] = v
    return [best[k] for k in sorted(best, key=_sort_key)]


def enumerate_qh(max_rank: int) -> list[Verdict]:
    """Quasi-homogeneity verdicts over all single-node spaces, one per canonical form."""
    seen: dict[HomSpace, Verdict] = {}
    for hs in iter_single_node_spaces(max_rank):
        c = normalize(hs).canonical
        if c not in seen:
            seen[c] = classify_quasi_homogeneous_hyperplane(c)
    return [seen[c] for c in sorted(seen, key=lambda h: _sort_key(space_name(h)))]
