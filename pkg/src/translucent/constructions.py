"""Machine constructions: union, guarded union into a DFAwntl, and exhaustive
search for small state-deterministic machines."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Optional, Sequence

from .core import (Automaton, AutomatonError, DFAWTL, UnknownState, Word,
                   build_automaton, classify, validate)
from .engine import Searcher
from .langops import AlphabetMismatch, all_words

DEFAULT_SEARCH_BUDGET = 10**8


class DuplicateTrigger(AutomatonError):
    pass


class PartNotDFAwtl(AutomatonError):
    pass


class BudgetExceeded(AutomatonError):
    pass


def _embed(a: Automaton, prefix: str, record: dict) -> None:
    rename = lambda q: f"{prefix}.{q}"
    record["states"] += [rename(q) for q in a.states]
    record["final"] += [rename(q) for q in a.states if q in a.finals]
    for q in a.states:
        letters = [x for x in a.alphabet if x in a.tau(q)]
        if letters:
            record["translucent"][rename(q)] = letters
    record["transitions"] += [(rename(q), x, rename(p)) for q, x, p in a.edges()]


def union(a1: Automaton, a2: Automaton) -> Automaton:
    """Disjoint union: states renamed ``1.q`` / ``2.q``, initial and final sets united."""
    if set(a1.alphabet) != set(a2.alphabet):
        raise AlphabetMismatch(" ".join(a2.alphabet), "union needs equal alphabets")
    record = {"alphabet": list(a1.alphabet), "states": [], "final": [],
              "translucent": {}, "transitions": []}
    _embed(a1, "1", record)
    _embed(a2, "2", record)
    record["initial"] = ([f"1.{q}" for q in a1.states if q in a1.initial]
                         + [f"2.{q}" for q in a2.states if q in a2.initial])
    return validate(record)


def guarded_union(parts: Sequence[tuple[str, Automaton, str]],
                  initial: str = "q0") -> Automaton:
    """Combine DFAwtl into one DFAwntl guarded by a fully translucent start state.

    Each part is ``(trigger, automaton, entry_state)``: the new initial state
    sees every letter as translucent and, on ``trigger``, moves to
    ``entry_state`` of that part (the state the part reaches after consuming
    its trigger).  Part ``i`` is embedded with states renamed ``{i}.q``.
    """
    if not parts:
        raise ValueError("at least one part required")
    alphabet = parts[0][1].alphabet
    triggers: set[str] = set()
    record = {"alphabet": list(alphabet), "states": [initial], "initial": [initial],
              "final": [], "translucent": {initial: list(alphabet)}, "transitions": []}
    for i, (trigger, part, entry) in enumerate(parts, start=1):
        if trigger in triggers:
            raise DuplicateTrigger(trigger)
        triggers.add(trigger)
        if set(part.alphabet) != set(alphabet):
            raise AlphabetMismatch(" ".join(part.alphabet))
        if DFAWTL not in classify(part).labels:
            raise PartNotDFAwtl(f"part {i}")
        if entry not in part.state_index:
            raise UnknownState(entry)
        _embed(part, str(i), record)
        record["transitions"].append((initial, trigger, f"{i}.{entry}"))
    return validate(record)


@dataclass(frozen=True)
class SearchSpaceSpec:
    """Line-graph SFAwtl over ``alphabet`` with 1..``max_states`` states.

    States ``q0..q{k-1}``; state ``i < k-1`` moves to ``i+1``.  With
    ``back_edge`` the last state may move to any state (itself included);
    otherwise, or when it has no transitions, it is a dead end.
    """

    alphabet: tuple[str, ...]
    max_states: int
    test_len: int
    back_edge: bool = True

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        if self.max_states < 1:
            raise ValueError("max_states must be >= 1")
        if self.test_len < 0:
            raise ValueError("test_len must be >= 0")

    def structure(self) -> str:
        return "line-graph" + ("+back-edge" if self.back_edge else "")


@dataclass(frozen=True)
class SearchResult:
    automaton: Optional[Automaton]
    candidates: int
    spec: SearchSpaceSpec

    @property
    def exhausted(self) -> bool:
        return self.automaton is None

    def caveats(self) -> list[str]:
        return [
            f"languages compared only on words of length <= {self.spec.test_len}",
            f"only {self.spec.structure()} structures with <= {self.spec.max_states} states enumerated",
        ]


def _state_options(n_symbols: int, needs_letters: bool):
    """(tau mask, letter mask, final) for one state; letters and tau disjoint."""
    full = (1 << n_symbols) - 1
    for tau in range(full + 1):
        free = full & ~tau
        for letters in range(free + 1):
            if letters & ~free:
                continue
            if needs_letters != bool(letters):
                continue
            for final in (False, True):
                yield tau, letters, final


def _count_candidates(n_symbols: int, k: int, back_edge: bool) -> int:
    with_letters = len(list(_state_options(n_symbols, True)))
    without = len(list(_state_options(n_symbols, False)))
    last = without + (k * with_letters if back_edge else 0)
    return with_letters ** (k - 1) * last


def iter_sfawtl(spec: SearchSpaceSpec):
    """Every candidate in canonical order: fewer states first, then option order."""
    n = len(spec.alphabet)
    for k in range(1, spec.max_states + 1):
        inner = list(_state_options(n, True))
        last_options = [(None, opt) for opt in _state_options(n, False)]
        if spec.back_edge:
            last_options += [(j, opt) for j in range(k) for opt in _state_options(n, True)]
        for choice in product(inner, repeat=k - 1):
            for succ, last in last_options:
                yield k, choice + (last,), succ


def _candidate(alphabet, k, options, last_succ) -> Automaton:
    states = [f"q{i}" for i in range(k)]
    translucent, transitions, finals = {}, [], []
    for i, (tau, letters, final) in enumerate(options):
        translucent[states[i]] = [x for j, x in enumerate(alphabet) if tau >> j & 1]
        target = states[i + 1] if i < k - 1 else (None if last_succ is None else states[last_succ])
        transitions += [(states[i], x, target) for j, x in enumerate(alphabet) if letters >> j & 1]
        if final:
            finals.append(states[i])
    return build_automaton(list(alphabet), states, [states[0]], finals, translucent, transitions)


def search_sfawtl(target: Callable[[Word], bool], spec: SearchSpaceSpec,
                  budget: int = DEFAULT_SEARCH_BUDGET) -> SearchResult:
    """First line-graph SFAwtl whose language matches ``target`` on all words
    up to ``spec.test_len``; ``SearchResult.exhausted`` when none does."""
    words = list(all_words(spec.alphabet, spec.test_len))
    total = sum(_count_candidates(len(spec.alphabet), k, spec.back_edge)
                for k in range(1, spec.max_states + 1))
    if total * len(words) > budget:
        raise BudgetExceeded(f"{total} candidates x {len(words)} words exceed {budget}")
    idx = {x: i for i, x in enumerate(spec.alphabet)}
    # shortest words first: most candidates fail early on them
    tests = [(tuple(idx[x] for x in w), bool(target(w))) for w in words]
    count = 0
    for k, options, succ in iter_sfawtl(spec):
        count += 1
        cand = _candidate(spec.alphabet, k, options, succ)
        searcher = Searcher(cand)
        if all(searcher.accepts(w) == want for w, want in tests):
            return SearchResult(cand, count, spec)
    return SearchResult(None, count, spec)
