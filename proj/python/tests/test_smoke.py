import pytest

import lapint


def test_star_spectrum_is_integral():
    r = lapint.spectrum(builder="star 6")
    assert r["integral"]
    assert r["integer_roots"] == [[0, 1], [1, 4], [6, 1]]


def test_path_spectrum_has_irrational_roots():
    r = lapint.spectrum(builder="P 5", precision="1/1000")
    assert not r["integral"]
    assert r["order"] == 5
    assert len(r["intervals"]) > 0


def test_bipartite_L_and_Q_agree():
    l = lapint.spectrum(builder="C 6", kind="L")
    q = lapint.spectrum(builder="C 6", kind="Q")
    assert l["char_poly"] == q["char_poly"]


def test_graph6_round_trip():
    code = lapint.graph6("K 4")
    assert code == "C~"
    assert lapint.canonical_form(g6=code) == lapint.canonical_form(builder="K4")


def test_exactly_one_input():
    with pytest.raises(ValueError):
        lapint.spectrum()
    with pytest.raises(ValueError):
        lapint.spectrum(g6="C~", builder="K 4")


def test_classify_firefly():
    r = lapint.classify(builder="firefly 1 1 0")
    assert r["L_integral"]
    assert r["order"] == 4


def test_quotient_of_star():
    r = lapint.quotient("0|1 2 3 4 5", builder="star 6")
    assert r["quotient"] == [[5, -5], [-1, 1]]
    assert r["divides"]


def test_non_equitable_partition_raises():
    with pytest.raises(lapint.InvalidPartition):
        lapint.quotient("0 1|2 3 4 5", builder="star 6")


def test_refine_splits_star():
    r = lapint.refine(builder="star 6")
    assert r["cells"] == 2


def test_enumeration_counts():
    assert len(lapint.enumerate_family("G1", 6)) == 12
    assert len(lapint.enumerate_family("G2", 6)) == 21
    with pytest.raises(lapint.BudgetExceeded):
        lapint.enumerate_family("G1", 20)


def test_verify_theorem_small_range():
    r = lapint.verify_theorem(5, 7, jobs=2)
    assert r["structural_disagreements"] == 0
    assert r["summary_tsv"].startswith("n\tfamily")
    assert all("literal_agreement" in v for v in r["verdicts"])


def test_cases_and_erratum():
    ids = lapint.case_ids()
    assert "4.4" in ids
    assert lapint.verify_case("4.4", grid_max=6, cross_max=3)["ok"]
    with pytest.raises(KeyError):
        lapint.verify_case("9.9")
    assert all(e["confirmed"] for e in lapint.erratum_report())
