"""Bounded language views: enumeration, Parikh images, equivalence up to a
length bound, and the sublanguage constructions behind semi-linearity."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Optional, Union

from .core import Automaton, BoundExceeded, Word, AutomatonError
from .engine import Searcher

DEFAULT_BUDGET = 10**7

Predicate = Callable[[Word], bool]


@dataclass(frozen=True, order=True)
class ParikhVector:
    """Letter counts of a word, in alphabet order."""

    counts: tuple[tuple[str, int], ...]

    @classmethod
    def of(cls, word: Iterable[str], alphabet) -> "ParikhVector":
        c = Counter(word)
        return cls(tuple((x, c.get(x, 0)) for x in alphabet))

    def __getitem__(self, symbol: str) -> int:
        return dict(self.counts)[symbol]

    def __str__(self):
        return " ".join(f"{x}:{n}" for x, n in self.counts)


@dataclass(frozen=True)
class BoundedLanguage:
    alphabet: tuple[str, ...]
    max_len: int
    words: tuple[Word, ...]

    def __contains__(self, word) -> bool:
        return tuple(word) in self.as_set()

    def __iter__(self):
        return iter(self.words)

    def __len__(self):
        return len(self.words)

    def as_set(self) -> frozenset[Word]:
        return frozenset(self.words)


def check_budget(n_symbols: int, max_len: int, budget: int = DEFAULT_BUDGET) -> None:
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    if n_symbols ** max_len > budget:
        raise BoundExceeded(str(max_len),
                            f"{n_symbols}^{max_len} candidate words exceed budget {budget}")


def all_words(alphabet, max_len: int, budget: int = DEFAULT_BUDGET):
    """Every word of length <= ``max_len`` in canonical order (length, then
    lexicographic by symbol declaration order)."""
    alphabet = tuple(alphabet)
    check_budget(len(alphabet), max_len, budget)
    for n in range(max_len + 1):
        yield from product(alphabet, repeat=n)


def _membership(x: Union[Automaton, Predicate]) -> Predicate:
    if isinstance(x, Automaton):
        searcher = Searcher(x)
        idx = x.symbol_index
        return lambda w: searcher.accepts(tuple(idx[s] for s in w))
    return x


def enumerate_language(a: Automaton, max_len: int,
                       budget: int = DEFAULT_BUDGET) -> BoundedLanguage:
    """All accepted words of length <= ``max_len``, canonically sorted."""
    accepted = _membership(a)
    words = tuple(w for w in all_words(a.alphabet, max_len, budget) if accepted(w))
    return BoundedLanguage(a.alphabet, max_len, words)


def parikh_image(words: Iterable[Word], alphabet) -> frozenset[ParikhVector]:
    return frozenset(ParikhVector.of(w, alphabet) for w in words)


def parikh_up_to(a: Automaton, max_len: int,
                 budget: int = DEFAULT_BUDGET) -> frozenset[ParikhVector]:
    return parikh_image(enumerate_language(a, max_len, budget), a.alphabet)


class AlphabetMismatch(AutomatonError):
    pass


@dataclass(frozen=True)
class Counterexample:
    word: Word
    side: str  # "A" or "B": the side that accepts the word


def bounded_equivalent(a: Union[Automaton, Predicate], b: Union[Automaton, Predicate],
                       max_len: int, alphabet=None,
                       budget: int = DEFAULT_BUDGET) -> Optional[Counterexample]:
    """Compare two languages on every word up to ``max_len``.

    Either side may be an automaton or a membership predicate over token tuples.
    Returns ``None`` when they agree, else the length-lexicographically least
    word accepted by exactly one side.
    """
    alphabets = [x.alphabet for x in (a, b) if isinstance(x, Automaton)]
    if alphabet is None:
        if not alphabets:
            raise ValueError("alphabet required when comparing two predicates")
        alphabet = alphabets[0]
    for other in alphabets:
        if set(other) != set(alphabet):
            raise AlphabetMismatch(" ".join(other))
    in_a, in_b = _membership(a), _membership(b)
    for w in all_words(alphabet, max_len, budget):
        x, y = in_a(w), in_b(w)
        if x != y:
            return Counterexample(w, "A" if x else "B")
    return None


def remove_overlap_translucency(a: Automaton) -> Automaton:
    """Drop from every tau(q) the letters that also have a transition in q.

    The result has disjoint translucency and accepts a sublanguage of ``a``.
    """
    translucent = {
        q: [x for x in a.alphabet if x in a.tau(q) and not a.delta(q, x)]
        for q in a.states
    }
    return a.replace(translucent=translucent)


def drop_translucency(a: Automaton) -> Automaton:
    """The classical NFA on the same transition table (every tau(q) empty)."""
    return a.replace(translucent={})


def _sinks(a: Automaton, entry_letters: Callable[[str], frozenset]):
    """Fresh sink names for final states with a non-empty ``entry_letters(q)``.

    Yields ``(q, sink, letters)`` with ``letters`` in alphabet order.
    """
    taken = set(a.states)
    for q in a.states:
        letters = [x for x in a.alphabet if x in entry_letters(q)]
        if q not in a.finals or not letters:
            continue
        sink = f"{q}.end"
        while sink in taken:
            sink += "_"
        taken.add(sink)
        yield q, sink, letters


def _with_sinks(base: Automaton, sinks, sink_tau, loops: bool) -> Automaton:
    sinks = list(sinks)
    if not sinks:
        return base
    record = base.to_record()
    for q, sink, letters in sinks:
        record["states"].append(sink)
        record["final"].append(sink)
        if sink_tau(q):
            record["translucent"][sink] = sink_tau(q)
        record["transitions"] += [(q, x, sink) for x in letters]
        if loops:
            record["transitions"] += [(sink, x, sink) for x in letters]
    return base.replace(**record)


def nfawtl_sublanguage(a: Automaton) -> Automaton:
    """A disjoint-translucency machine accepting a letter-equivalent sublanguage of ``a``.

    Starts from :func:`remove_overlap_translucency`.  A final state ``q`` that
    loses a translucent letter ``x`` could previously accept with occurrences
    of ``x`` left on the tape; a fresh final sink entered from ``q`` on ``x``,
    with the original tau(q) and no transitions, restores those acceptances.
    For machines without such final states the result equals the plain removal.
    """
    lost = lambda q: frozenset(x for x in a.tau(q) if a.delta(q, x))
    tau_of = lambda q: [x for x in a.alphabet if x in a.tau(q)]
    return _with_sinks(remove_overlap_translucency(a), _sinks(a, lost), tau_of, loops=False)


def regular_sublanguage(a: Automaton) -> Automaton:
    """A classical NFA (no translucency) accepting a letter-equivalent sublanguage of ``a``.

    The NFA reads letters in the order an accepting computation of ``a``
    erases them, then reads the letters left over at acceptance through a
    looping final sink.  Equals :func:`drop_translucency` when no final state
    has translucent letters.
    """
    return _with_sinks(drop_translucency(a), _sinks(a, a.tau), lambda q: [], loops=True)


@dataclass
class LemmaReport:
    ok: bool
    max_len: int
    checks: list[str] = field(default_factory=list)
    check: str = ""
    missing: Optional[ParikhVector] = None   # in L(a) but not in the sublanguage
    extra: Optional[ParikhVector] = None     # in the sublanguage but not in L(a)
    not_sublanguage: Optional[Word] = None

    def __str__(self):
        if self.ok:
            return f"PASS (bound {self.max_len}: " + ", ".join(self.checks) + ")"
        parts = [f"FAIL {self.check} (bound {self.max_len})"]
        if self.missing is not None:
            parts.append(f"missing {self.missing}")
        if self.extra is not None:
            parts.append(f"extra {self.extra}")
        if self.not_sublanguage is not None:
            parts.append(f"not a sublanguage: {''.join(self.not_sublanguage)!r}")
        return "; ".join(parts)


def check_letter_equivalence_lemma(a: Automaton, max_len: int,
                                   budget: int = DEFAULT_BUDGET) -> LemmaReport:
    """Check up to ``max_len`` that ``a`` has letter-equivalent sublanguages
    accepted by a disjoint-translucency machine and by a classical NFA."""
    lang = enumerate_language(a, max_len, budget)
    full = lang.as_set()
    target = parikh_image(full, a.alphabet)
    report = LemmaReport(ok=True, max_len=max_len)
    for name, build in (("nfawtl-sublanguage", nfawtl_sublanguage),
                        ("regular-sublanguage", regular_sublanguage)):
        sub = enumerate_language(build(a), max_len, budget)
        stray = [w for w in sub if w not in full]
        got = parikh_image(sub, a.alphabet)
        if stray or got != target:
            report.ok = False
            report.check = name
            report.not_sublanguage = stray[0] if stray else None
            missing = sorted(target - got)
            extra = sorted(got - target)
            report.missing = missing[0] if missing else None
            report.extra = extra[0] if extra else None
            return report
        report.checks.append(name)
    return report
