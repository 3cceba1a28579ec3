import json
from importlib import resources

import pytest

from rigidci import tables
from rigidci.classify import (
    QH,
    FanoError,
    Rigid,
    candidate_filter,
    candidate_specs,
    classify_quasi_homogeneous_hyperplane,
    classify_rigidity,
    enumerate_verdicts,
    hyperplane_h1,
    section_label,
    stab_row,
    verify_table1,
)
from rigidci.errors import DataIntegrityError, DomainError, HypothesisError
from rigidci.intersect import CISpec
from rigidci.notation import parse_space
from rigidci.rootdata import lie_dim, normalize
from rigidci.theorems import check_adjoint, check_candidates, check_hyperplane_lists


def classify(name, degrees):
    return classify_rigidity(CISpec.of_degrees(parse_space(name), degrees))


def test_table_rows_verify():
    checks = verify_table1()
    assert len({c.row for c in checks}) == 22
    assert all(c.passed for c in checks)


@pytest.mark.parametrize(
    "name,h0,h1",
    [("Gr(3,7)", 14, 0), ("Gr(2,7)", 28, 0), ("E8/P8", 8, 7), ("E6/P2", 6, 5), ("Gr(3,8)", 8, 0), ("S5", 30, 0)],
)
def test_hyperplane_h1_examples(name, h0, h1):
    hs = normalize(parse_space(name)).canonical
    assert hyperplane_h1(hs) == (h0, h1)
    # h0 - h1 = dim g - (dim V - 1)
    assert h0 - h1 == lie_dim(hs.root_system) - hs.fundamental_dim + 1


def test_hyperplane_h1_guards():
    with pytest.raises(HypothesisError):
        hyperplane_h1(parse_space("F4/P4"))
    with pytest.raises(HypothesisError):
        hyperplane_h1(parse_space("Q5"))
    with pytest.raises(DomainError):
        hyperplane_h1(parse_space("P(T_P3)"))


def test_candidate_filter_examples():
    assert candidate_filter(parse_space("S5"), 3)
    assert not candidate_filter(parse_space("S6"), 3)
    assert not candidate_filter(parse_space("Gr(3,8)"), 2)
    assert candidate_filter(parse_space("Gr(2,5)"), 4)
    with pytest.raises(DomainError):
        candidate_filter(parse_space("S5"), 1)


@pytest.mark.parametrize(
    "name,degrees,rigid,h0,h1",
    [
        ("S6", [1, 1], Rigid.NO, 9, 3),
        ("E7/P7", [1, 1], Rigid.NO, 28, 3),
        ("E6/P1", [1, 1, 1], Rigid.NO, 8, 2),
        ("S5", [1, 1], Rigid.YES, 17, 0),
        ("S5", [1, 1, 1], Rigid.YES, 6, 0),
        ("C4/P2", [1], Rigid.NO, None, 1),
        ("P(T_P3)", [(1, 1)], Rigid.NO, None, 1),
        ("P3", [3], Rigid.NO, None, 4),
        ("P4", [2, 2], Rigid.NO, None, 2),
    ],
)
def test_classify_examples(name, degrees, rigid, h0, h1):
    v = classify(name, degrees)
    assert v.rigid is rigid and v.h1 == h1
    if h0 is not None:
        assert v.h0 == h0
    assert v.rule_chain


def test_cited_and_reduced_cases():
    v = classify("Gr(2,5)", [1, 1, 1])
    assert v.rigid is Rigid.YES and v.rule_chain[-1].id == "cited-rigid"
    v = classify("Q7", [1])
    assert v.rigid is Rigid.YES and v.label == "Q6"
    v = classify("F4/P4", [1])
    assert v.rigid is Rigid.YES and v.label == "E6/P1[1,1]" and v.chi == 28
    v = classify("C3/P2", [1])
    assert v.rigid is Rigid.YES and v.label == "Gr(2,6)[1,1]"
    v = classify("P(T_P2)", [(1, 1)])
    assert v.rigid is Rigid.YES and v.chi == 2
    assert classify("P5", [2]).label == "Q4"
    assert classify("P5", [1, 2]).label == "Q3"


def test_nonlinear_and_big_cases():
    assert classify("S5", [1, 2]).rigid is Rigid.NO
    assert classify("Gr(2,5)", [2]).rigid is Rigid.NO
    v = classify("E8/P1", [1])
    assert v.rigid is Rigid.NO


def test_fano_failure():
    with pytest.raises(FanoError):
        classify("A3/P1", [4])
    with pytest.raises(FanoError):
        classify("Gr(2,5)", [5])


def test_out_of_scope():
    v = classify_rigidity(CISpec.of_degrees(parse_space("A3/P1,2"), [(1, 1)]))
    assert v.rigid is Rigid.OUT_OF_SCOPE and v.h1 is None


def test_qh_examples():
    v = classify_quasi_homogeneous_hyperplane(parse_space("Gr(3,8)"))
    assert v.rigid is Rigid.YES and v.quasi_homogeneous is QH.NO
    for k in (3, 4, 5):
        v = classify_quasi_homogeneous_hyperplane(parse_space(f"Gr(2,{2 * k})"))
        assert v.quasi_homogeneous is QH.YES and v.homogeneous
    v = classify_quasi_homogeneous_hyperplane(parse_space("Gr(2,7)"))
    assert v.quasi_homogeneous is QH.YES and not v.homogeneous
    v = classify_quasi_homogeneous_hyperplane(parse_space("Lag(3,6)"))
    assert v.quasi_homogeneous is QH.YES
    v = classify_quasi_homogeneous_hyperplane(parse_space("E8/P8"))
    assert v.quasi_homogeneous is QH.NO


def test_enumerate_small():
    labels = {v.label for v in enumerate_verdicts(8, 4)}
    assert {"S5[1,1,1]", "P(T_P2)[1:1]", "Gr(2,5)[1,1,1,1]", "E6/P1[1,1]", "Gr(3,8)[1]"} <= labels
    assert "S6[1,1]" not in labels
    assert "E7/P7[1,1]" not in labels
    assert "P(T_P3)[1:1]" not in labels


def test_rank_four_nonlinear_hypersurfaces():
    rigid = []
    for s in candidate_specs(4, 1):
        if s.degrees[0][0] >= 2 and s.space.picard_rank == 1:
            v = classify_rigidity(s)
            if v.rigid is Rigid.YES:
                rigid.append(s)
    assert rigid
    for s in rigid:
        assert s.space.series == "A" and s.space.marked == (1,) and s.degrees == ((2,),)


def test_verdict_invariants_small_run():
    for s in candidate_specs(6, 3):
        v = classify_rigidity(s)
        assert v.rule_chain
        if v.h1 is not None:
            assert v.h0 - v.h1 == v.chi
            assert (v.rigid is Rigid.YES) == (v.h1 == 0)
            assert v.h0 >= 0 and v.h1 >= 0
        d = v.as_dict()
        assert json.loads(json.dumps(d)) == d


def test_section_label():
    assert section_label(parse_space("S5"), [(1,), (1,)]) == "S5[1,1]"
    assert section_label(parse_space("P(T_P2)"), [(1, 1)]) == "P(T_P2)[1:1]"


def test_lemma_suites():
    assert check_adjoint(10).passed
    assert check_candidates(10).passed
    assert all(r.passed for r in check_hyperplane_lists(10))


def test_corrupted_table_detected(tmp_path):
    data = json.loads(resources.files("rigidci").joinpath("data/tables.json").read_text())
    row = next(r for r in data["elashvili"] if r["series"] == "E" and r["rank"] == 7)
    row["dim_V"] = 57
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(data))
    tables.set_path(p)
    try:
        assert not all(c.passed for c in verify_table1())
        with pytest.raises(DataIntegrityError):
            stab_row(parse_space("E7/P7"))
    finally:
        tables.set_path(None)
    assert stab_row(parse_space("E7/P7")).dim_V == 56


def test_missing_section_rejected(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"format_version": 1}))
    tables.set_path(p)
    try:
        with pytest.raises(DataIntegrityError):
            tables.load()
    finally:
        tables.set_path(None)
