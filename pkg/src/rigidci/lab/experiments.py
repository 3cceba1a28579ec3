"""Named experiments producing structured, machine-checkable reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..errors import DomainError
from . import clifford as cl
from . import exact
from .jordan import JordanElement, general_point, jordan_stabilizer, triality_algebra
from .octonion import L_PLANE, Octonion, decomposable_form, form_stabilizer, g2_extension_check
from .stabilizer import Mode, linear_stabilizer, orbit_dim, restrict


@dataclass(frozen=True)
class Check:
    label: str
    found: object
    expected: object

    @property
    def passed(self) -> bool:
        return self.found == self.expected


@dataclass
class Report:
    name: str
    checks: list[Check] = field(default_factory=list)

    def add(self, label, found, expected):
        self.checks.append(Check(label, found, expected))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "experiment": self.name,
            "passed": self.passed,
            "checks": [
                {"label": c.label, "found": _plain(c.found), "expected": _plain(c.expected), "passed": c.passed}
                for c in self.checks
            ],
        }


def _plain(x):
    return x if isinstance(x, (bool, int, str)) or x is None else str(x)


def _mat_op(X):
    return lambda v: [sum(X[r][c] * v[c] for c in range(len(v)) if v[c]) for r in range(len(X))]


def g2_form() -> Report:
    rep = Report("g2-form")
    k, orb, mats = form_stabilizer()
    rep.add("stabilizer of omega in gl(7)", k, 14)
    rep.add("GL(7)-orbit of omega in the 3-forms", orb, 35)
    rep.add("stabilizer of a decomposable 3-form exceeds 14", form_stabilizer(decomposable_form())[0] > 14, True)
    e = lambda i, s=1: Octonion.unit(i, s)
    rep.add("identity extends to an automorphism", g2_extension_check(e(1), e(2), e(4)), True)
    rep.add("(e2, -e1, e4) extends to an automorphism", g2_extension_check(e(2), e(1, -1), e(4)), True)
    # plane <e1, e2, e4> of Im O, coordinates 0..6 for e1..e7
    ops = [_mat_op(X) for X in mats]
    plane = []
    for i in L_PLANE:
        v = [0] * 7
        v[i - 1] = 1
        plane.append(v)
    d, _ = linear_stabilizer(ops, plane, Mode.SUBSPACE)
    rep.add("stabilizer of the plane L in g2", d, 3)
    rep.add("G2-orbit of [L] in Gr(3,7)", len(mats) - d, 11)
    return rep


def spinor_s7() -> Report:
    rep = Report("spinor-s7")
    n = 7
    so = cl.so_basis(n)
    s_star, s_w = cl.s_star(), cl.s_w()
    ops_f = [cl.dense_operator(cl.SpinOperator(X), n, "F") for X in so]
    d, basis = linear_stabilizer(ops_f, s_star.dense(), Mode.VECTOR)
    rep.add("stabilizer of s* in so(14)", d, 28)
    rep.add("s_W is pure", len(cl.annihilator(s_w)), 7)
    rep.add("<s_W, s*>", cl.spinor_pairing(s_w, s_star), 0)
    mn = cl.mn_basis()
    rep.add("M, N span a 28-dimensional algebra", exact.rank([[x for r in X for x in r] for X in mn]), 28)
    rep.add("M, N annihilate s*", all(cl.SpinOperator(X)(s_star).is_zero() for X in mn), True)
    ops_e = [cl.dense_operator(cl.SpinOperator(X), n, "E") for X in mn]
    dl, _ = linear_stabilizer(ops_e, s_w.dense(), Mode.LINE)
    rep.add("stabilizer of [s_W] in g2 + g2", dl, 8)
    rep.add("orbit of [s_W]", orbit_dim(ops_e, s_w.dense(), projective=True), 20)
    return rep


def _pencil_data():
    n = 5
    s1 = cl.SpinorState.from_terms(n, [(1, []), (1, [1, 2, 3, 4])], "F")
    s2 = cl.SpinorState.from_terms(n, [(1, [1, 5]), (1, [2, 3, 4, 5])], "F")
    ev = lambda k, i: cl.basis_vector(n, k, i)
    diff = lambda a, b: [x - y for x, y in zip(a, b)]
    s_w = cl.SpinorState.wedge_of_vectors(n, [diff(ev("e", 2), ev("e", 4)), diff(ev("e", 3), ev("e", 5))])
    s_u = cl.SpinorState.wedge_of_vectors(n, [diff(ev("e", 1), ev("e", 3)), diff(ev("e", 2), ev("e", 4))])
    return s1, s2, s_w, s_u


def s2_pencil() -> Report:
    rep = Report("s2-pencil")
    n = 5
    so = cl.so_basis(n)
    s1, s2, s_w, s_u = _pencil_data()
    ops_f = [cl.dense_operator(cl.SpinOperator(X), n, "F") for X in so]
    d, basis = linear_stabilizer(ops_f, [s1.dense(), s2.dense()], Mode.SUBSPACE)
    rep.add("stabilizer of the pencil <s1*, s2*> in so(10)", d, 17)
    ops_e = restrict([cl.dense_operator(cl.SpinOperator(X), n, "E") for X in so], basis)
    for name, s in (("s_W", s_w), ("s_U", s_u)):
        rep.add(f"{name} lies on the section", (cl.spinor_pairing(s, s1), cl.spinor_pairing(s, s2)) == (0, 0), True)
    rep.add("orbit of [s_W] (open)", orbit_dim(ops_e, s_w.dense(), projective=True), 8)
    rep.add("orbit of [s_U] (closed)", orbit_dim(ops_e, s_u.dense(), projective=True), 6)
    return rep


def jordan_triality() -> Report:
    rep = Report("jordan-triality")
    rep.add("dimension of the triality algebra", len(triality_algebra()), 28)
    p = general_point()
    rep.add("p satisfies r1 + r2 + r3 = r1 - r3 = 0", p.satisfies_section(), True)
    stab, orb = jordan_stabilizer(p)
    rep.add("stabilizer of [p]", stab, 14)
    rep.add("orbit of [p]", orb, 14)
    z = Octonion.zero()
    rep.add("diagonal control stabilizer", jordan_stabilizer(JordanElement(p.r1, p.r2, p.r3, z, z, z))[0], 28)
    return rep


EXPERIMENTS: dict[str, Callable[[], Report]] = {
    "g2-form": g2_form,
    "spinor-s7": spinor_s7,
    "s2-pencil": s2_pencil,
    "jordan-triality": jordan_triality,
}


def run(name: str) -> Report:
    try:
        return EXPERIMENTS[name]()
    except KeyError:
        raise DomainError(f"unknown experiment {name!r}; choose from {', '.join(EXPERIMENTS)}") from None
