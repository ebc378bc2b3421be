"""Step semantics and acceptance for automata with translucent letters.

In state ``q`` the head may erase the letter at position ``i`` of the remaining
word when every earlier letter is translucent for ``q`` and ``delta(q, w[i])``
is non-empty.  With disjoint translucency only the first visible letter
qualifies; with nondeterministic translucency any number of positions can.
A configuration accepts when its state is final and all remaining letters are
translucent for it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import Automaton, BoundExceeded, Word, as_word

DEFAULT_NAIVE_BOUND = 10


@dataclass(frozen=True)
class Configuration:
    state: str
    remaining: Word

    def __post_init__(self):
        object.__setattr__(self, "remaining", tuple(self.remaining))


@dataclass(frozen=True)
class Step:
    from_state: str
    position: int  # 1-based, counted in the remaining word before erasure
    letter: str
    to_state: str

    def __str__(self):
        return f"{self.from_state} {self.position} {self.letter} -> {self.to_state}"


@dataclass(frozen=True)
class Trace:
    initial_state: str
    steps: tuple[Step, ...]
    accepted: bool

    def final_configuration(self, word: Word) -> Configuration:
        remaining = list(word)
        state = self.initial_state
        for step in self.steps:
            del remaining[step.position - 1]
            state = step.to_state
        return Configuration(state, tuple(remaining))


def _eligible(tau, row, w) -> list[int]:
    out = []
    for i, x in enumerate(w):
        if row[x]:
            out.append(i)
        if x not in tau:
            break
    return out


def eligible_positions(a: Automaton, c: Configuration) -> list[tuple[int, str]]:
    """Every ``(position, letter)`` the head can erase in ``c``, ascending, 1-based."""
    t = a.tables
    q = a.state_index[c.state]
    w = a.encode(c.remaining)
    return [(i + 1, a.alphabet[w[i]]) for i in _eligible(t.tau[q], t.delta[q], w)]


def is_accepting_config(a: Automaton, c: Configuration) -> bool:
    return c.state in a.finals and set(c.remaining) <= a.tau(c.state)


def successors(a: Automaton, c: Configuration) -> list[tuple[Step, Configuration]]:
    out = []
    for pos, letter in eligible_positions(a, c):
        rest = c.remaining[:pos - 1] + c.remaining[pos:]
        for p in a.delta(c.state, letter):
            out.append((Step(c.state, pos, letter, p), Configuration(p, rest)))
    return out


class Searcher:
    """Depth-first acceptance search over integer-encoded configurations.

    Results are memoized per ``(state, remaining)``; one instance may be reused
    for many words over the same automaton (bounded enumeration does this).
    """

    def __init__(self, a: Automaton):
        t = a.tables
        self.tau = t.tau
        self.delta = t.delta
        self.final = t.final
        self.initial = t.initial
        self.memo: list[dict[tuple[int, ...], bool]] = [{} for _ in range(t.n_states)]

    def accepts_from(self, q: int, w: tuple[int, ...]) -> bool:
        memo = self.memo[q]
        hit = memo.get(w)
        if hit is not None:
            return hit
        tau = self.tau[q]
        result = False
        if self.final[q] and all(x in tau for x in w):
            result = True
        else:
            row = self.delta[q]
            for i in _eligible(tau, row, w):
                rest = w[:i] + w[i + 1:]
                if any(self.accepts_from(p, rest) for p in row[w[i]]):
                    result = True
                    break
        memo[w] = result
        return result

    def accepts(self, w: tuple[int, ...]) -> bool:
        return any(self.accepts_from(q, w) for q in self.initial)


def accepts(a: Automaton, word) -> bool:
    """True iff some computation from an initial state reaches an accepting configuration."""
    return Searcher(a).accepts(a.encode(as_word(a, word)))


def first_trace(a: Automaton, word) -> Optional[Trace]:
    """The first accepting computation in canonical search order, or ``None``.

    Initial states are tried in declaration order, and successors in
    ``(position, target state)`` order.
    """
    t = a.tables
    w0 = a.encode(as_word(a, word))
    failed: set[tuple[int, tuple[int, ...]]] = set()

    def dfs(q, w):
        tau = t.tau[q]
        if t.final[q] and all(x in tau for x in w):
            return []
        if (q, w) in failed:
            return None
        row = t.delta[q]
        for i in _eligible(tau, row, w):
            rest = w[:i] + w[i + 1:]
            for p in row[w[i]]:
                tail = dfs(p, rest)
                if tail is not None:
                    return [(q, i + 1, w[i], p)] + tail
        failed.add((q, w))
        return None

    for q0 in t.initial:
        path = dfs(q0, w0)
        if path is not None:
            steps = tuple(Step(a.states[q], pos, a.alphabet[x], a.states[p])
                          for q, pos, x, p in path)
            return Trace(a.states[q0], steps, True)
    return None


def naive_accepts(a: Automaton, word, bound: int = DEFAULT_NAIVE_BOUND) -> bool:
    """Reference acceptance check: unmemoized recursion straight over the rules.

    Exponential; meant as a differential oracle for :func:`accepts` on short words.
    """
    w = as_word(a, word)
    if len(w) > bound:
        raise BoundExceeded(str(len(w)), f"word longer than naive bound {bound}")

    def run(state: str, rest: Sequence[str]) -> bool:
        visible = a.tau(state)
        if state in a.finals and all(x in visible for x in rest):
            return True
        for i, x in enumerate(rest):
            if any(y not in visible for y in rest[:i]):
                break
            for target in a.delta(state, x):
                if run(target, list(rest[:i]) + list(rest[i + 1:])):
                    return True
        return False

    return any(run(q, list(w)) for q in a.states if q in a.initial)
