from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rigidci.bwb import LineBundleClass
from rigidci.classify import hyperplane_h1, reduce_to_club
from rigidci.errors import DomainError, HypothesisError
from rigidci.intersect import (
    CISpec,
    chi_tangent,
    clubsuit,
    is_fano_pair,
    ms_exception,
    restricted_sections,
    transfer,
)
from rigidci.notation import parse_space, quadric
from rigidci.rootdata import HomSpace, iter_single_node_spaces, normalize, weyl_dim
from rigidci.theorems import expected_candidates


def spec(name, degrees):
    return CISpec.of_degrees(parse_space(name), degrees)


def L(hs, *degs):
    return LineBundleClass.of_degrees(hs, degs)


def test_cispec_invariants():
    gr = parse_space("Gr(2,5)")
    with pytest.raises(DomainError):
        CISpec.of_degrees(gr, [])
    with pytest.raises(DomainError):
        CISpec.of_degrees(gr, [0])
    with pytest.raises(DomainError):
        CISpec.of_degrees(gr, [1] * 6)
    s = CISpec.of_degrees(gr, [1, 2])
    assert s.r == 2 and s.total().degrees == (3,)


def test_is_fano_pair_examples():
    assert is_fano_pair(spec("Gr(2,5)", [1]))
    for m in range(2, 6):
        pt = parse_space(f"P(T_P{m})")
        for r in range(m, 2 * m - 1):
            assert not is_fano_pair(CISpec.of_degrees(pt, [(1, 1)] * r))
        assert is_fano_pair(CISpec.of_degrees(pt, [(1, 1)] * (m - 1)))
    assert not is_fano_pair(spec("P2", [3]))
    assert is_fano_pair(spec("P2", [2]))


def test_restricted_sections_examples():
    s = spec("Gr(2,7)", [1])
    c = restricted_sections(s, s.divisors[0])
    assert (c.value, c.exact) == (20, True)
    for N in range(3, 11):
        q = spec(f"P{N}", [2])
        c = restricted_sections(q, L(q.space, 2))
        assert (c.value, c.exact) == (comb(N + 2, 2) - 1, True)
    # m - D = O(-2) on P4 carries no cohomology
    p = spec("P4", [3])
    c = restricted_sections(p, L(p.space, 1))
    assert (c.value, c.exact) == (5, True)


def test_restricted_sections_preconditions():
    s = spec("P2", [3])
    with pytest.raises(HypothesisError):
        restricted_sections(s, L(s.space, 1))
    s = spec("P3", [1])
    with pytest.raises(DomainError):
        restricted_sections(s, L(s.space, 0))


@pytest.mark.parametrize(
    "name,degrees,chi",
    [
        ("S5", [1, 1], 17),
        ("S5", [1, 1, 1], 6),
        ("S6", [1, 1], 6),
        ("E7/P7", [1, 1], 25),
        ("E6/P1", [1, 1, 1], 6),
        ("E6/P1", [1, 1], 28),
        ("P(T_P2)", [(1, 1)], 2),
    ],
)
def test_chi_examples(name, degrees, chi):
    assert chi_tangent(spec(name, degrees)) == chi


@pytest.mark.parametrize("n", range(4, 13))
def test_chi_gr2_codim2(n):
    assert chi_tangent(spec(f"Gr(2,{n + 1})", [1, 1])) == n + 4


@pytest.mark.parametrize("name", ["P5", "Q5", "Q6", "Grw(2,6)", "Grw(2,8)", "F4/P4"])
def test_chi_needs_clubsuit(name):
    with pytest.raises(HypothesisError):
        chi_tangent(spec(name, [1]))


def test_f4_reduction_chi():
    r = reduce_to_club(spec("F4/P4", [1]))
    assert r.space == parse_space("E6/P1") and r.degrees == ((1,), (1,))
    assert chi_tangent(r) == 28


def test_clubsuit_examples():
    assert not clubsuit(parse_space("G2/P1"))
    assert not clubsuit(parse_space("F4/P4"))
    assert not clubsuit(parse_space("P(T_P3)"))
    assert not clubsuit(parse_space("C4/P2"))
    assert not clubsuit(parse_space("B4/P1"))
    assert clubsuit(parse_space("Gr(2,5)"))
    assert clubsuit(parse_space("C4/P3"))
    assert not clubsuit(parse_space("C4/P1"))  # P^7


def test_ms_exception_examples():
    p2 = parse_space("P2")
    assert ms_exception(p2, L(p2, 3))
    for n in range(3, 9):
        q = quadric(n)
        assert ms_exception(q, L(q, 2))
    gr = parse_space("Gr(2,5)")
    assert not ms_exception(gr, L(gr, 1))
    with pytest.raises(DomainError):
        ms_exception(gr, L(gr, 0))


def test_transfer():
    t = transfer(spec("B6/P6", [1, 2]), HomSpace("D", 7, (7,)))
    assert t.space == HomSpace("D", 7, (7,)) and t.degrees == ((1,), (2,))
    with pytest.raises(DomainError):
        transfer(spec("S5", [1]), parse_space("Gr(2,5)"))


PIC1 = [c for c in dict.fromkeys(normalize(h).canonical for h in iter_single_node_spaces(6))]


def multiples(draw, hs):
    bound = hs.index() - 1
    r_max = min(4, hs.dimension - 1)
    degs = []
    for _ in range(draw(st.integers(1, r_max))):
        left = bound - sum(degs)
        if left < 1:
            break
        degs.append(draw(st.integers(1, min(left, 4))))
    return degs


@st.composite
def pic1_specs(draw):
    hs = draw(st.sampled_from([h for h in PIC1 if h.index() >= 2 and h.dimension >= 2]))
    return CISpec.of_degrees(hs, multiples(draw, hs))


@given(pic1_specs())
def test_minimal_class_sections(s):
    L0 = L(s.space, 1)
    c = restricted_sections(s, L0)
    assert c.exact
    assert c.value == s.space.fundamental_dim - sum(1 for d in s.degrees if d == (1,))


@given(pic1_specs(), st.randoms(use_true_random=False))
def test_permutation_invariance(s, rnd):
    divs = list(s.divisors)
    rnd.shuffle(divs)
    t = CISpec(s.space, tuple(divs))
    for k in (1, 2, 3):
        assert restricted_sections(s, L(s.space, k)) == restricted_sections(t, L(s.space, k))


@given(pic1_specs())
def test_monotone_in_m(s):
    prev = None
    for k in range(1, 5):
        c = restricted_sections(s, L(s.space, k))
        if c.exact:
            if prev is not None:
                assert prev <= c.value
            prev = c.value


def test_koszul_terms_vanish_off_degree_zero_for_one_divisor():
    # m - D singular leaves just the leading term
    s = spec("Gr(2,6)", [2])
    c = restricted_sections(s, L(s.space, 1))
    assert c.value == weyl_dim(s.space.root_system, s.space.weight([1])) and c.exact


@pytest.mark.parametrize("name,r", sorted(expected_candidates(8, 4)))
def test_linear_bound_on_candidates(name, r):
    hs = normalize(parse_space(name)).canonical
    info = normalize(hs)
    V = hs.fundamental_dim
    bound = info.aut_dim - r * (V - r)
    lin = CISpec.of_degrees(hs, [1] * r)
    assert chi_tangent(lin) == bound
    for bump in range(r):
        degs = [1] * r
        degs[bump] = 2
        s = CISpec.of_degrees(hs, degs)
        if is_fano_pair(s) and all(restricted_sections(s, d).exact for d in s.divisors):
            assert chi_tangent(s) <= bound


@pytest.mark.parametrize("name", ["Gr(3,6)", "Gr(3,7)", "Gr(3,8)", "S5", "S6", "S7", "Lag(3,6)", "E6/P1", "E7/P7", "Gr(2,7)", "Gr(2,8)"])
def test_hyperplane_chi_matches_stabilizer_data(name):
    hs = normalize(parse_space(name)).canonical
    h0, h1 = hyperplane_h1(hs)
    assert chi_tangent(CISpec.of_degrees(hs, [1])) == h0 - h1
