from itertools import product

import pytest

from translucent import core, corpus
from translucent.core import classify
from translucent.engine import naive_accepts
from translucent.langops import enumerate_language, remove_overlap_translucency

from oracles import words

REGISTRY = ["ex1-Lab", "ex1-Lac", "ex1-Lad", "sfawtl-dyck", "sfawtl-cycle-abcd",
            "sfawtl-astar", "sfawtl-bstar", "sfawtl-a-aaa", "sfawtl-ab-ba",
            "ex4-dfawntl", "ex6-triple-union", "fig1-ratio"]


def test_registry_is_complete():
    assert corpus.list_entries() == REGISTRY


def test_unknown_entry():
    with pytest.raises(corpus.NotFound):
        corpus.get_entry("nope")


@pytest.mark.parametrize("name", REGISTRY)
def test_verify_entry(name):
    report = corpus.verify_entry(name, 7)
    assert report.ok, str(report)


@pytest.mark.parametrize("name", REGISTRY)
def test_expected_labels(name):
    e = corpus.get_entry(name)
    assert e.expected_labels <= classify(e.automaton).labels


def test_sfawtl_and_dfawntl_labels():
    for name in REGISTRY:
        labels = classify(corpus.get_entry(name).automaton).labels
        if name.startswith("sfawtl-"):
            assert core.SFAWTL in labels
        if name in ("ex4-dfawntl", "fig1-ratio"):
            assert core.DFAWNTL in labels and core.DFAWTL not in labels


def test_permuted_siblings_rename_states():
    lac = corpus.get_entry("ex1-Lac").automaton
    # the state waiting for an a after a c was erased
    assert lac.delta("qc", "a") == ("q",)
    assert lac.tau("qc") == {"b", "c", "d"}


def test_ex4_oracle_against_naive_simulation(ex4):
    for w in words("abc", 7):
        assert corpus.ex4_language(w) == naive_accepts(ex4, w), w


def test_ex4_property_bundle_flags_a_wrong_language():
    lang = [w for w in words("abc", 5) if w.count("c") == 1]
    assert corpus.ex4_property_violations(lang, 5)


def test_ex4_strict_superset_of_disjoint_version(ex4):
    full = enumerate_language(ex4, 7).as_set()
    plain = enumerate_language(remove_overlap_translucency(ex4), 7).as_set()
    assert plain < full
    lost = [w for w in enumerate_language(ex4, 7) if w not in plain]
    assert "".join(lost[0]) == "abcab"


def test_cycle_oracle_matches_round_simulation():
    # remove a leading a, then the first b, c and d, until empty
    def rounds(w):
        w = list(w)
        while w:
            if w[0] != "a":
                return False
            del w[0]
            for s in "bcd":
                if s not in w:
                    return False
                w.remove(s)
        return True
    for w in words("abcd", 6):
        assert corpus.cycle_abcd(w) == rounds(w)


def test_ratio_machine_bound_ten():
    e = corpus.get_entry("fig1-ratio")
    assert e.verified_len == 10
    assert corpus.verify_entry("fig1-ratio", 10).ok


def test_verify_report_failure_text():
    r = corpus.VerifyReport("x", 3)
    r.fail("boom")
    assert str(r) == "FAIL x (bound 3): boom"


def test_ex4_cross_count_examples(ex4):
    from translucent.engine import accepts
    for v, u in product(["ab", "ba", "aa", "bb"], repeat=2):
        w = v + "c" + u
        cross = v.count("a") == u.count("b") and v.count("b") == u.count("a")
        assert accepts(ex4, w) == cross, w
