"""Named example machines, each paired with an independent membership oracle."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

from . import core
from .core import Automaton, AutomatonError, Word, build_automaton, classify
from .engine import naive_accepts
from .langops import Counterexample, bounded_equivalent, enumerate_language
from .constructions import guarded_union


class NotFound(AutomatonError):
    pass


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    automaton: Automaton
    oracle: Callable[[Word], bool]
    provenance: str
    expected_labels: frozenset[str]
    oracle_doc: str = ""
    verified_len: int = 8


# --- oracles ---------------------------------------------------------------

def pair_language(x: str, y: str) -> Callable[[Word], bool]:
    """|w|_x = |w|_y > 0 and the two remaining letters of {a,b,c,d} balance."""
    u, v = [s for s in "abcd" if s not in (x, y)]

    def member(w: Word) -> bool:
        c = Counter(w)
        return c[x] == c[y] > 0 and c[u] == c[v]
    return member


def dyck(w: Word) -> bool:
    depth = 0
    for s in w:
        depth += 1 if s == "0" else -1
        if depth < 0:
            return False
    return depth == 0


def cycle_abcd(w: Word) -> bool:
    """Equal counts of a, b, c, d and, for every k, the k-th a comes before
    the k-th b, the k-th c and the k-th d."""
    pos: dict[str, list[int]] = {s: [] for s in "abcd"}
    for i, s in enumerate(w):
        pos[s].append(i)
    n = len(pos["a"])
    if any(len(pos[s]) != n for s in "bcd"):
        return False
    return all(pos["a"][k] < pos[s][k] for k in range(n) for s in "bcd")


def split_at_c(w: Word):
    i = w.index("c")
    return w[:i], w[i + 1:]


def ex4_language(w: Word) -> bool:
    """Exactly one c; writing w = v c u: |w|_a = |w|_b, |u|_a <= |v|_b and |u|_b <= |v|_a.

    Each round erases the leftmost remaining letter (necessarily left of the
    c) together with one complementary letter to its right, so the machine
    accepts iff the a's and b's split into complementary pairs whose left
    member lies in v.  Letters of u must pair with opposite letters of v;
    whatever is left in v pairs up internally.
    """
    if w.count("c") != 1:
        return False
    v, u = split_at_c(w)
    cv, cu = Counter(v), Counter(u)
    return (cv["a"] + cu["a"] == cv["b"] + cu["b"]
            and cu["a"] <= cv["b"] and cu["b"] <= cv["a"])


def ratio_language(w: Word) -> bool:
    c = Counter(w)
    return c["a"] == c["b"] or 2 * c["a"] == c["b"]


def _astar(w): return all(s == "a" for s in w)
def _bstar(w): return all(s == "b" for s in w)
def _a_aaa(w): return w in (("a",), ("a", "a", "a"))
def _ab_ba(w): return w in (("a", "b"), ("b", "a"))


def a_star_plus_b_star(w: Word) -> bool:
    return _astar(w) or _bstar(w)


def ab_aaab(w: Word) -> bool:
    return w in (("a", "b"), ("a", "a", "a", "b"))


# --- machines --------------------------------------------------------------

def lab_automaton(perm: Optional[dict[str, str]] = None) -> Automaton:
    """The L^ab DFAwtl; ``perm`` renames letters (and the matching state subscripts)."""
    p = perm or {}
    s = lambda x: p.get(x, x)
    letters = lambda text: [s(x) for x in text]
    tau = {
        "q0": letters("bcd"), "q": [],
        f"q{s('a')}": letters("acd"), f"q{s('b')}": letters("bcd"),
        f"q{s('c')}": letters("abc"), f"q{s('d')}": letters("abd"),
    }
    trans = [("q0", s("a"), f"q{s('a')}")]
    trans += [("q", s(x), f"q{s(x)}") for x in "abcd"]
    trans += [
        (f"q{s('a')}", s("b"), "q"),
        (f"q{s('b')}", s("a"), "q"),
        (f"q{s('c')}", s("d"), "q"),
        (f"q{s('d')}", s("c"), "q"),
    ]
    return build_automaton("a b c d", "q0 q qa qb qc qd", "q0", "q", tau, trans)


def dyck_automaton() -> Automaton:
    return build_automaton("0 1", "q0 q1", "q0", "q0", {"q1": "0"},
                           [("q0", "0", "q1"), ("q1", "1", "q0")])


def cycle_automaton() -> Automaton:
    return build_automaton(
        "a b c d", "q0 q1 q2 q3", "q0", "q0",
        {"q1": "a c d", "q2": "a b d", "q3": "a b c"},
        [("q0", "a", "q1"), ("q1", "b", "q2"), ("q2", "c", "q3"), ("q3", "d", "q0")])


def ex4_automaton() -> Automaton:
    return build_automaton(
        "a b c", "q0 qa qb qc", "q0", "qc",
        {"qa": "a b c", "qb": "a b c"},
        [("q0", "a", "qa"), ("q0", "b", "qb"), ("q0", "c", "qc"),
         ("qa", "b", "q0"), ("qb", "a", "q0")])


def ex6_automaton() -> Automaton:
    parts = [
        ("b", lab_automaton(), "qb"),
        ("c", lab_automaton({"b": "c", "c": "b"}), "qc"),
        ("d", lab_automaton({"b": "d", "d": "b"}), "qd"),
    ]
    return guarded_union(parts)


def ratio_automaton() -> Automaton:
    """DFAwntl for |w|_a = |w|_b or 2|w|_a = |w|_b.

    The start state is final (the empty word is in both languages), so it
    cannot be fully translucent; it erases the first letter and the guess is
    made one step later in ``ga``/``gb``, where both letters are translucent
    and both have transitions.  ``p*`` states accept balanced words, ``r*``
    states words with twice as many b's as a's.
    """
    tau = {
        "ga": "a b", "gb": "a b",
        "pa": "a", "pb": "b",
        "zb": "b",
        "y1": "a", "y2": "a", "y3": "a", "y4": "a",
        "ra1": "a", "ra2": "a", "rx": "a", "ry": "b",
    }
    trans = [
        ("s", "a", "ga"), ("s", "b", "gb"),
        # after a first b: pair it with an a, or take a second b (then 2:1 needs one a)
        ("gb", "a", "p0"), ("gb", "b", "ry"),
        # after a first a: erase a b (balanced, or the single word abb) or another a
        ("ga", "b", "x"), ("ga", "a", "y1"),
        ("x", "a", "pa"), ("x", "b", "z"),
        ("z", "a", "p0"), ("z", "b", "zb"),
        ("zb", "a", "pb"),
        ("y1", "b", "y2"), ("y2", "b", "y3"), ("y3", "b", "y4"), ("y4", "b", "r0"),
        # balanced words
        ("p0", "a", "pa"), ("p0", "b", "pb"),
        ("pa", "b", "p0"), ("pb", "a", "p0"),
        # |w|_b = 2|w|_a
        ("r0", "a", "ra1"), ("r0", "b", "rb1"),
        ("ra1", "b", "ra2"), ("ra2", "b", "r0"),
        ("rb1", "a", "rx"), ("rb1", "b", "ry"),
        ("rx", "b", "r0"), ("ry", "a", "r0"),
    ]
    states = ("s ga gb x z zb y1 y2 y3 y4 p0 pa pb r0 ra1 ra2 rb1 rx ry")
    return build_automaton("a b", states, "s", "s x z p0 r0", tau, trans)


def _line(alphabet: str, n: int, letters: list[str], finals: str,
          tau: Optional[dict] = None, back: Optional[tuple[str, str]] = None) -> Automaton:
    states = [f"q{i}" for i in range(n)]
    trans = [(states[i], x, states[i + 1]) for i in range(n - 1) for x in letters[i]]
    if back:
        trans += [(states[-1], x, back[1]) for x in back[0]]
    return build_automaton(alphabet, states, "q0", finals, tau or {}, trans)


# --- registry --------------------------------------------------------------

_SFAWTL = frozenset({core.NFAWTL, core.DFAWTL, core.SFAWTL})
_DFAWTL = frozenset({core.NFAWTL, core.DFAWTL})
_DFAWNTL = frozenset({core.NFAWNTL, core.DFAWNTL})


def _ratio_entry() -> CorpusEntry:
    a = ratio_automaton()
    bad = bounded_equivalent(a, ratio_language, 10)
    if bad is not None:
        raise AutomatonError(f"fig1-ratio machine disagrees with its oracle on {bad.word}")
    return CorpusEntry("fig1-ratio", a, ratio_language,
                       "ratio language, machine reconstructed from its description",
                       _DFAWNTL, "|w|_a = |w|_b or 2|w|_a = |w|_b", verified_len=10)


@lru_cache(maxsize=None)
def _registry() -> dict[str, CorpusEntry]:
    entries = [
        CorpusEntry("ex1-Lab", lab_automaton(), pair_language("a", "b"),
                    "pair-counting DFAwtl for L^ab", _DFAWTL, "|w|_a = |w|_b > 0 and |w|_c = |w|_d"),
        CorpusEntry("ex1-Lac", lab_automaton({"b": "c", "c": "b"}), pair_language("a", "c"),
                    "L^ab machine with letters b and c swapped", _DFAWTL,
                    "|w|_a = |w|_c > 0 and |w|_b = |w|_d"),
        CorpusEntry("ex1-Lad", lab_automaton({"b": "d", "d": "b"}), pair_language("a", "d"),
                    "L^ab machine with letters b and d swapped", _DFAWTL,
                    "|w|_a = |w|_d > 0 and |w|_b = |w|_c"),
        CorpusEntry("sfawtl-dyck", dyck_automaton(), dyck,
                    "two-state SFAwtl for Dyck words", _SFAWTL, "Dyck words, 0 opens, 1 closes"),
        CorpusEntry("sfawtl-cycle-abcd", cycle_automaton(), cycle_abcd,
                    "SFAwtl cycling through a, b, c, d", _SFAWTL,
                    "equal a,b,c,d counts; k-th a precedes k-th b, c and d"),
        CorpusEntry("sfawtl-astar", _line("a b", 1, [], "q0", back=("a", "q0")), _astar,
                    "one-state SFAwtl", _SFAWTL, "a*"),
        CorpusEntry("sfawtl-bstar", _line("a b", 1, [], "q0", back=("b", "q0")), _bstar,
                    "one-state SFAwtl", _SFAWTL, "b*"),
        CorpusEntry("sfawtl-a-aaa", _line("a b", 4, ["a", "a", "a"], "q1 q3"), _a_aaa,
                    "four-state line SFAwtl", _SFAWTL, "{a, aaa}"),
        CorpusEntry("sfawtl-ab-ba", _line("a b", 3, ["b", "a"], "q2", tau={"q0": "a"}), _ab_ba,
                    "three-state line SFAwtl", _SFAWTL, "{ab, ba}"),
        CorpusEntry("ex4-dfawntl", ex4_automaton(), ex4_language,
                    "DFAwntl with overlapping translucency", _DFAWNTL,
                    "one c, w = vcu, |w|_a = |w|_b, |u|_a <= |v|_b, |u|_b <= |v|_a",
                    verified_len=9),
        CorpusEntry("ex6-triple-union", ex6_automaton(),
                    lambda w: any(pair_language("a", y)(w) for y in "bcd"),
                    "guarded union of three L^ab-style machines", _DFAWNTL, "L^ab | L^ac | L^ad"),
        _ratio_entry(),
    ]
    return {e.name: e for e in entries}


def list_entries() -> list[str]:
    return list(_registry())


def get_entry(name: str) -> CorpusEntry:
    try:
        return _registry()[name]
    except KeyError:
        raise NotFound(name) from None


# --- verification ----------------------------------------------------------

@dataclass
class VerifyReport:
    name: str
    max_len: int
    ok: bool = True
    counterexample: Optional[Counterexample] = None
    problems: list[str] = field(default_factory=list)

    def fail(self, msg: str) -> None:
        self.ok = False
        self.problems.append(msg)

    def __str__(self):
        if self.ok:
            return f"PASS {self.name} (bound {self.max_len})"
        return f"FAIL {self.name} (bound {self.max_len}): " + "; ".join(self.problems)


def ex4_property_violations(words, max_len: int) -> list[str]:
    """Check accepted words of the ex4-dfawntl machine against the stated properties.

    ``words`` are the accepted words up to ``max_len``.  Every accepted word
    has equal a/b counts and one c, is never v c u with |v| < |u|, and a word
    v c u with |v| = |u| (and counts as above) is accepted exactly when
    |v|_a = |u|_b and |v|_b = |u|_a.
    """
    from itertools import product

    problems = []
    accepted = set(words)
    for w in accepted:
        c = Counter(w)
        if c["a"] != c["b"] or c["c"] != 1:
            problems.append(f"{''.join(w)}: counts")
            continue
        v, u = split_at_c(w)
        if len(v) < len(u):
            problems.append(f"{''.join(w)}: |v| < |u|")
    for half in range((max_len - 1) // 2 + 1):
        for v in product("ab", repeat=half):
            for u in product("ab", repeat=half):
                w = v + ("c",) + u
                cv, cu = Counter(v), Counter(u)
                cross = cv["a"] == cu["b"] and cv["b"] == cu["a"]
                if cross != (w in accepted):
                    problems.append(f"{''.join(w)}: |v| = |u| cross-count rule")
    return sorted(problems)


def _cycle_witness(words) -> set[Word]:
    import re
    pattern = re.compile(r"a*d*c*b*")
    return {w for w in words if pattern.fullmatch("".join(w))}


def verify_entry(name: str, max_len: int) -> VerifyReport:
    entry = get_entry(name)
    report = VerifyReport(name, max_len)
    a = entry.automaton
    labels = classify(a).labels
    if not entry.expected_labels <= labels:
        report.fail("profile lacks " + ", ".join(sorted(entry.expected_labels - labels)))
    cex = bounded_equivalent(a, entry.oracle, max_len)
    if cex is not None:
        report.counterexample = cex
        side = "machine" if cex.side == "A" else "oracle"
        report.fail(f"{''.join(cex.word) or 'empty word'} accepted only by the {side}")
    if name == "sfawtl-cycle-abcd":
        lang = enumerate_language(a, max_len)
        expected = {tuple("a" * n + "d" * n + "c" * n + "b" * n) for n in range(max_len // 4 + 1)}
        if _cycle_witness(lang) != expected:
            report.fail("intersection with a*d*c*b* is not {a^n d^n c^n b^n}")
    if name == "ex4-dfawntl":
        lang = enumerate_language(a, max_len)
        for p in ex4_property_violations(lang, max_len):
            report.fail(p)
        for w in lang:
            if len(w) <= 7 and not naive_accepts(a, w):
                report.fail(f"{''.join(w)}: naive simulation disagrees")
    return report
