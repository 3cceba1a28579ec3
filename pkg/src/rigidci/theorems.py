"""The published classification lists, instantiated at finite bounds, and
checks of the classifier against them.

The expected sets are written out by hand from the statements, so they do
not share data with the classifier they test.  Labels follow
:func:`rigidci.classify.section_label`: a hyperplane section of Gr_w(2,6) is
Gr(2,6)[1,1] and one of F4/P4 is E6/P1[1,1], their forms after the
reductions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .classify import (
    QH,
    Rigid,
    candidate_filter,
    classify_quasi_homogeneous_hyperplane,
    classify_rigidity,
    enumerate_verdicts,
    verify_table1,
)
from .intersect import CISpec, clubsuit
from .notation import space_name
from .rootdata import iter_single_node_spaces, lie_dim, normalize

# smallest rank of a presentation of each named space
_HYPERPLANE_RIGID = {
    "Gr(3,6)": 5,
    "Gr(3,7)": 6,
    "Gr(3,8)": 7,
    "S5": 4,
    "S6": 5,
    "S7": 6,
    "Lag(3,6)": 3,
    "E6/P1": 6,
    "E7/P7": 7,
}


def _pmax(R: int) -> tuple[int, int]:
    """Largest P^N and Q^n among single-node spaces of rank <= R."""
    p = max(R, 2 * R - 1) if R >= 2 else R
    q = 2 * R - 1 if R >= 2 else 0
    return p, q


def expected_rigid_labels(max_rank: int, max_r: int) -> set[str]:
    """Rigid Fano complete intersections reachable with rank <= max_rank, r <= max_r."""
    R = max_rank
    out: set[str] = set()
    p, q = _pmax(R)
    out |= {f"P{k}" for k in range(1, p)}
    out |= {f"Q{k}" for k in range(2, max(p, q))}
    for n in range(5, R + 2):
        out.add(f"Gr(2,{n})[1]")
    for name, rank in _HYPERPLANE_RIGID.items():
        if rank <= R:
            out.add(f"{name}[1]")
    if R >= 3:
        out.add("Gr(2,6)[1,1]")  # Gr_w(2,6)
    if R >= 4:
        out.add("E6/P1[1,1]")  # F4/P4
    if R >= 2:
        out.add("P(T_P2)[1:1]")
    if max_r >= 2:
        out |= {f"Gr(2,{2 * k + 1})[1,1]" for k in range(2, R // 2 + 1)}
    if R >= 4:
        for r in (2, 3):
            if r <= max_r:
                out.add("S5[" + ",".join("1" * r) + "]")
        for r in (3, 4):
            if r <= max_r:
                out.add("Gr(2,5)[" + ",".join("1" * r) + "]")
    return out


def in_hyperplane_rigid_list(name: str) -> bool:
    if name[0] in "PQ" and name[1:].isdigit():
        return True
    if name.startswith("Gr(2,"):
        return True
    return name in _HYPERPLANE_RIGID or name in ("Grw(2,6)", "F4/P4")


def in_qh_list(name: str) -> bool:
    return in_hyperplane_rigid_list(name) and name != "Gr(3,8)"


def in_homogeneous_list(name: str) -> bool:
    if name[0] in "PQ" and name[1:].isdigit():
        return True
    if name.startswith("Gr(2,"):
        return int(name[5:-1]) % 2 == 0
    return name == "E6/P1"


def expected_candidates(max_rank: int, max_r: int) -> set[tuple[str, int]]:
    out = set()
    for n in range(5, max_rank + 2):
        out.add((f"Gr(2,{n})", 2))
    pairs = [("Gr(2,5)", 3), ("Gr(2,5)", 4), ("S5", 2), ("S5", 3), ("S6", 2), ("E6/P1", 2), ("E6/P1", 3), ("E7/P7", 2)]
    ranks = {"Gr(2,5)": 4, "S5": 5, "S6": 6, "E6/P1": 6, "E7/P7": 7}
    out |= {(s, r) for s, r in pairs if ranks[s] <= max_rank and r <= max_r}
    return out


def canonical_spaces(max_rank: int):
    seen = {}
    for hs in iter_single_node_spaces(max_rank):
        c = normalize(hs).canonical
        seen.setdefault(c, None)
    return list(seen)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    summary: str
    details: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "summary": self.summary, "details": self.details}


def _diff(found: set, expected: set) -> list[str]:
    return [f"unexpected: {x}" for x in sorted(found - expected, key=str)] + [
        f"missing: {x}" for x in sorted(expected - found, key=str)
    ]


def check_table1(max_rank: int = 30) -> SuiteResult:
    checks = verify_table1(max_rank)
    bad = [c for c in checks if not c.passed]
    rows = len({c.row for c in checks})
    det = [f"{c.row} at {c.space}: stored {c.dim_V}, Weyl {c.weyl}, dim h {c.dim_h}, dim g {c.dim_g}" for c in bad]
    return SuiteResult("table1", not bad, f"{rows - len({c.row for c in bad})}/{rows} rows pass ({len(checks)} instances)", det)


def check_rigid_list(max_rank: int = 12, max_r: int = 5, verdicts=None) -> SuiteResult:
    if verdicts is None:
        verdicts = enumerate_verdicts(max_rank, max_r)
    found = {v.label for v in verdicts}
    expected = expected_rigid_labels(max_rank, max_r)
    det = _diff(found, expected)
    return SuiteResult("rigid-list", not det, f"{len(found)} rigid varieties, {len(expected)} expected", det)


def check_hyperplane_lists(max_rank: int = 12) -> list[SuiteResult]:
    rigid, qh, hom = set(), set(), set()
    exp_rigid, exp_qh, exp_hom = set(), set(), set()
    for c in canonical_spaces(max_rank):
        name = space_name(c)
        v = classify_quasi_homogeneous_hyperplane(c)
        if c.dimension > 1 and v.rigid is Rigid.YES:
            rigid.add(name)
        if v.quasi_homogeneous is QH.YES:
            qh.add(name)
        if v.homogeneous:
            hom.add(name)
        if c.dimension > 1 and in_hyperplane_rigid_list(name):
            exp_rigid.add(name)
        if in_qh_list(name):
            exp_qh.add(name)
        if in_homogeneous_list(name):
            exp_hom.add(name)
    out = []
    for label, f, e in (("hyperplane-rigid", rigid, exp_rigid), ("quasi-homogeneous", qh, exp_qh), ("homogeneous", hom, exp_hom)):
        d = _diff(f, e)
        out.append(SuiteResult(label, not d, f"{len(f)} found, {len(e)} expected", d))
    obs = (rigid - {"Gr(3,8)"}) == (qh - {"P1"})
    out.append(SuiteResult("rigid-minus-Gr(3,8)", obs, "rigid hyperplane list minus Gr(3,8) equals the quasi-homogeneous list"))
    return out


def check_candidates(max_rank: int = 12, max_r: int = 6) -> SuiteResult:
    found = set()
    for c in canonical_spaces(max_rank):
        if not clubsuit(c) or not normalize(c).aut_is_g:
            continue
        for r in range(2, min(max_r, c.dimension - 1) + 1):
            if candidate_filter(c, r):
                found.add((space_name(c), r))
    exp = expected_candidates(max_rank, max_r)
    d = _diff(found, exp)
    return SuiteResult("candidates", not d, f"{len(found)} (space, r) pairs pass the filter", d)


def adjoint_spaces(max_rank: int = 12):
    return [c for c in canonical_spaces(max_rank) if clubsuit(c) and c.fundamental_dim == lie_dim(c.root_system)]


def check_adjoint(max_rank: int = 12) -> SuiteResult:
    det = []
    for c in adjoint_spaces(max_rank):
        v = classify_rigidity(CISpec.of_degrees(c, [1]))
        if v.h1 != c.rank - 1:
            det.append(f"{c}: h1 = {v.h1}, rank - 1 = {c.rank - 1}")
    return SuiteResult("adjoint", not det, "adjoint hyperplane sections have h1 = rank - 1", det)


def check_theorems(max_rank: int = 12, max_r: int = 5) -> list[SuiteResult]:
    return [check_rigid_list(max_rank, max_r), *check_hyperplane_lists(max_rank), check_candidates(max_rank), check_adjoint(max_rank)]
