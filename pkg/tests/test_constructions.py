import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from translucent import core, corpus
from translucent.constructions import (BudgetExceeded, DuplicateTrigger,
                                       PartNotDFAwtl, SearchSpaceSpec, guarded_union,
                                       iter_sfawtl, search_sfawtl, union)
from translucent.core import build_automaton, classify
from translucent.engine import accepts
from translucent.langops import AlphabetMismatch, bounded_equivalent, enumerate_language
from translucent.randomgen import random_automaton

from oracles import words


def test_union_of_lab_siblings(ex1):
    lac = corpus.get_entry("ex1-Lac").automaton
    u = union(ex1, lac)
    want = enumerate_language(ex1, 6).as_set() | enumerate_language(lac, 6).as_set()
    assert enumerate_language(u, 6).as_set() == want
    assert u.initial == {"1.q0", "2.q0"}
    assert len(u.states) == 12


def test_union_with_empty_language(dyck):
    empty = build_automaton("0 1", "z", "z", "")
    assert bounded_equivalent(union(dyck, empty), dyck, 8) is None


def test_union_idempotent(dyck):
    assert bounded_equivalent(union(dyck, dyck), dyck, 8) is None


def test_union_alphabet_mismatch(ex1, dyck):
    with pytest.raises(AlphabetMismatch):
        union(ex1, dyck)


PAIRS = list(combinations(["ex1-Lab", "ex1-Lac", "sfawtl-cycle-abcd", "ex6-triple-union"], 2))


@pytest.mark.parametrize("n1,n2", PAIRS)
def test_union_soundness_corpus(n1, n2):
    a1, a2 = corpus.get_entry(n1).automaton, corpus.get_entry(n2).automaton
    u = union(a1, a2)
    for w in words(a1.alphabet, 5):
        assert accepts(u, w) == (accepts(a1, w) or accepts(a2, w))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_union_soundness_random(seed):
    rng = random.Random(seed)
    a1 = random_automaton(rng, n_symbols=2)
    a2 = random_automaton(rng, n_symbols=2)
    u = union(a1, a2)
    for w in words(a1.alphabet, 5):
        assert accepts(u, w) == (accepts(a1, w) or accepts(a2, w))


def test_guarded_union_triple(ex6):
    assert len(ex6.states) == 19
    prof = classify(ex6)
    assert prof.single_initial and prof.deterministic_transitions
    assert core.DFAWNTL in prof.labels and core.DFAWTL not in prof.labels
    assert ex6.tau("q0") == {"a", "b", "c", "d"}
    assert ex6.delta("q0", "a") == ()
    assert ex6.delta("q0", "b") == ("1.qb",)
    assert ex6.delta("q0", "c") == ("2.qc",)
    assert ex6.delta("q0", "d") == ("3.qd",)
    oracle = corpus.get_entry("ex6-triple-union").oracle
    assert bounded_equivalent(ex6, oracle, 7) is None


def test_guarded_union_single_part(ex1):
    g = guarded_union([("b", ex1, "qb")])
    lab = corpus.pair_language("a", "b")
    assert bounded_equivalent(g, lambda w: lab(w) and "b" in w, 6) is None


def test_guarded_union_errors(ex1, ex4):
    with pytest.raises(DuplicateTrigger):
        guarded_union([("b", ex1, "qb"), ("b", ex1, "qa")])
    with pytest.raises(PartNotDFAwtl):
        guarded_union([("a", ex4, "qa")])


def test_search_finds_dyck():
    res = search_sfawtl(corpus.dyck, SearchSpaceSpec("01", 2, 6))
    assert not res.exhausted
    a = res.automaton
    assert len(a.states) == 2
    assert bounded_equivalent(a, corpus.dyck, 8) is None
    assert a == corpus.get_entry("sfawtl-dyck").automaton


def test_search_ab_ba_needs_three_states():
    res = search_sfawtl(corpus._ab_ba, SearchSpaceSpec("ab", 3, 3))
    assert len(res.automaton.states) == 3
    assert search_sfawtl(corpus._ab_ba, SearchSpaceSpec("ab", 2, 3)).exhausted


@pytest.mark.parametrize("target,states", [(corpus._astar, 1), (corpus._bstar, 1),
                                           (corpus._a_aaa, 4)])
def test_search_small_regular_state_counts(target, states):
    res = search_sfawtl(target, SearchSpaceSpec("ab", states, 6))
    assert len(res.automaton.states) == states
    if states > 1:
        assert search_sfawtl(target, SearchSpaceSpec("ab", states - 1, 6)).exhausted


def test_search_ab_aaab_exhausted():
    res = search_sfawtl(corpus.ab_aaab, SearchSpaceSpec("ab", 3, 6))
    assert res.exhausted
    assert any("length <= 6" in c for c in res.caveats())


def test_search_dyck_complement_exhausted():
    res = search_sfawtl(lambda w: not corpus.dyck(w), SearchSpaceSpec("01", 3, 6))
    assert res.exhausted


def test_two_state_sfawtl_accepts_a_star_plus_b_star():
    # q0 final, a translucent: a* accepted as is; otherwise the first b is
    # erased and q1 (final, b translucent, no moves) accepts exactly a b-only rest
    a = build_automaton("a b", "q0 q1", "q0", "q0 q1", {"q0": "a", "q1": "b"},
                        [("q0", "b", "q1")])
    assert core.SFAWTL in classify(a).labels
    assert bounded_equivalent(a, corpus.a_star_plus_b_star, 10) is None
    res = search_sfawtl(corpus.a_star_plus_b_star, SearchSpaceSpec("ab", 3, 6))
    assert res.automaton == a


def test_search_candidates_are_sfawtl():
    spec = SearchSpaceSpec("ab", 2, 0)
    from translucent.constructions import _candidate
    for k, options, succ in iter_sfawtl(spec):
        prof = classify(_candidate(spec.alphabet, k, options, succ))
        assert prof.state_deterministic and prof.disjoint_translucency and prof.single_initial


def test_search_budget():
    with pytest.raises(BudgetExceeded):
        search_sfawtl(corpus.dyck, SearchSpaceSpec("01", 3, 6), budget=1000)


def test_search_space_spec_validation():
    with pytest.raises(ValueError):
        SearchSpaceSpec("ab", 0, 3)
    with pytest.raises(ValueError):
        SearchSpaceSpec("ab", 2, -1)
