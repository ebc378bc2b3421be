"""Automata with translucent letters: the data type, validation and classification.

A single :class:`Automaton` covers every variant (NFA, NFAwtl, DFAwtl, SFAwtl,
NFAwntl, DFAwntl).  Which variant a machine belongs to is a structural
property computed by :func:`classify`, not a separate type.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

ENDMARKER = "$"

Word = tuple[str, ...]

# variant labels, see classify()
NFA_COMPATIBLE = "NFA-compatible"
NFAWTL = "NFAwtl"
DFAWTL = "DFAwtl"
SFAWTL = "SFAwtl"
NFAWNTL = "NFAwntl"
DFAWNTL = "DFAwntl"
LABEL_ORDER = (NFA_COMPATIBLE, NFAWTL, DFAWTL, SFAWTL, NFAWNTL, DFAWNTL)


class AutomatonError(Exception):
    """Base class for every error raised by this package."""


class InvalidAutomaton(AutomatonError):
    """A single violated invariant. ``token`` names the offending item."""

    def __init__(self, token: str = "", detail: str = ""):
        self.token = token
        msg = f"{type(self).__name__}({token!r})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class UnknownState(InvalidAutomaton):
    pass


class UnknownSymbol(InvalidAutomaton):
    pass


class EmptyInitialSet(InvalidAutomaton):
    pass


class DuplicateSymbol(InvalidAutomaton):
    pass


class DuplicateState(InvalidAutomaton):
    pass


class InvalidToken(InvalidAutomaton):
    """Empty token, token containing whitespace, or the reserved endmarker."""


class BoundExceeded(AutomatonError):
    """A word length or enumeration budget was exceeded."""


class ValidationError(AutomatonError):
    """Raised by :func:`validate` with the complete list of violations."""

    def __init__(self, errors: Sequence[InvalidAutomaton]):
        self.errors = list(errors)
        super().__init__("; ".join(str(e) for e in self.errors))


def _bad_token(token) -> bool:
    return (not isinstance(token, str) or not token or token == ENDMARKER
            or any(ch.isspace() for ch in token))


@dataclass(frozen=True)
class Automaton:
    """The septuple ``(Q, Sigma, $, tau, I, F, delta)`` minus the endmarker.

    Fields are stored in canonical form:

    * ``translucency[i]`` is tau of ``states[i]``;
    * ``transitions`` holds one ``(state, symbol, targets)`` entry per pair with a
      non-empty target set, ordered by (state, symbol) declaration order, with
      ``targets`` in state declaration order.  Missing pairs map to the empty set.

    Build instances with :func:`validate` or :func:`build_automaton`; those
    enforce the invariants.  Instances are immutable.
    """

    alphabet: tuple[str, ...]
    states: tuple[str, ...]
    initial: frozenset[str]
    finals: frozenset[str]
    translucency: tuple[frozenset[str], ...]
    transitions: tuple[tuple[str, str, tuple[str, ...]], ...]

    def tau(self, state: str) -> frozenset[str]:
        return self.translucency[self.state_index[state]]

    def delta(self, state: str, symbol: str) -> tuple[str, ...]:
        return self._delta_map.get((state, symbol), ())

    def edges(self):
        """Yield every ``(state, symbol, target)`` triple in canonical order."""
        for q, a, targets in self.transitions:
            for p in targets:
                yield q, a, p

    @cached_property
    def state_index(self) -> dict[str, int]:
        return {q: i for i, q in enumerate(self.states)}

    @cached_property
    def symbol_index(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.alphabet)}

    @cached_property
    def _delta_map(self) -> dict[tuple[str, str], tuple[str, ...]]:
        return {(q, a): t for q, a, t in self.transitions}

    @cached_property
    def tables(self) -> "CompiledTables":
        return CompiledTables.from_automaton(self)

    def encode(self, word: Iterable[str]) -> tuple[int, ...]:
        idx = self.symbol_index
        try:
            return tuple(idx[x] for x in word)
        except KeyError as exc:
            raise UnknownSymbol(exc.args[0], "not in the alphabet") from None

    def decode(self, word: Iterable[int]) -> Word:
        return tuple(self.alphabet[i] for i in word)

    def to_record(self) -> dict:
        """Plain-data form accepted back by :func:`validate`."""
        return {
            "alphabet": list(self.alphabet),
            "states": list(self.states),
            "initial": [q for q in self.states if q in self.initial],
            "final": [q for q in self.states if q in self.finals],
            "translucent": {
                q: [a for a in self.alphabet if a in t]
                for q, t in zip(self.states, self.translucency) if t
            },
            "transitions": list(self.edges()),
        }

    def replace(self, **changes) -> "Automaton":
        """Return a validated copy with some record fields replaced."""
        record = self.to_record()
        record.update(changes)
        return validate(record)


@dataclass(frozen=True)
class CompiledTables:
    """Integer-indexed view used by the search code."""

    n_states: int
    n_symbols: int
    initial: tuple[int, ...]
    final: tuple[bool, ...]
    tau: tuple[frozenset[int], ...]
    delta: tuple[tuple[tuple[int, ...], ...], ...]

    @classmethod
    def from_automaton(cls, a: Automaton) -> "CompiledTables":
        si, ai = a.state_index, a.symbol_index
        delta = [[() for _ in a.alphabet] for _ in a.states]
        for q, x, targets in a.transitions:
            delta[si[q]][ai[x]] = tuple(si[p] for p in targets)
        return cls(
            n_states=len(a.states),
            n_symbols=len(a.alphabet),
            initial=tuple(si[q] for q in a.states if q in a.initial),
            final=tuple(q in a.finals for q in a.states),
            tau=tuple(frozenset(ai[x] for x in t) for t in a.translucency),
            delta=tuple(tuple(row) for row in delta),
        )


def validate(record: Mapping) -> Automaton:
    """Check a plain automaton record and return the canonical :class:`Automaton`.

    The record has keys ``alphabet``, ``states``, ``initial``, ``final``,
    ``translucent`` (mapping state -> letters, optional) and ``transitions``
    (iterable of ``(state, symbol, target)``, optional).  All violations are
    collected and raised together as :class:`ValidationError`.
    """
    errors: list[InvalidAutomaton] = []

    alphabet: list[str] = []
    for x in record.get("alphabet", ()):
        if _bad_token(x):
            errors.append(InvalidToken(str(x), "invalid symbol token"))
        elif x in alphabet:
            errors.append(DuplicateSymbol(x))
        else:
            alphabet.append(x)
    states: list[str] = []
    for q in record.get("states", ()):
        if _bad_token(q):
            errors.append(InvalidToken(str(q), "invalid state name"))
        elif q in states:
            errors.append(DuplicateState(q))
        else:
            states.append(q)
    sset, aset = set(states), set(alphabet)

    def check_state(q) -> bool:
        if q not in sset:
            errors.append(UnknownState(str(q)))
            return False
        return True

    def check_symbol(x) -> bool:
        if x not in aset:
            errors.append(UnknownSymbol(str(x)))
            return False
        return True

    initial = {q for q in record.get("initial", ()) if check_state(q)}
    if not list(record.get("initial", ())):
        errors.append(EmptyInitialSet("initial"))
    finals = {q for q in record.get("final", record.get("finals", ())) if check_state(q)}

    tau: dict[str, set[str]] = {q: set() for q in states}
    for q, letters in dict(record.get("translucent") or {}).items():
        ok = check_state(q)
        good = {x for x in letters if check_symbol(x)}
        if ok:
            tau[q] |= good

    delta: dict[tuple[str, str], set[str]] = {}
    for triple in record.get("transitions", ()):
        q, x, p = triple
        ok = check_state(q) & check_symbol(x) & check_state(p)
        if ok:
            delta.setdefault((q, x), set()).add(p)

    if errors:
        raise ValidationError(errors)

    s_order = {q: i for i, q in enumerate(states)}
    a_order = {x: i for i, x in enumerate(alphabet)}
    transitions = tuple(
        (q, x, tuple(sorted(targets, key=s_order.__getitem__)))
        for (q, x), targets in sorted(delta.items(),
                                      key=lambda kv: (s_order[kv[0][0]], a_order[kv[0][1]]))
    )
    return Automaton(
        alphabet=tuple(alphabet),
        states=tuple(states),
        initial=frozenset(initial),
        finals=frozenset(finals),
        translucency=tuple(frozenset(tau[q]) for q in states),
        transitions=transitions,
    )


def build_automaton(alphabet, states, initial, finals, translucent=None,
                    transitions=()) -> Automaton:
    """Keyword-friendly front end to :func:`validate`.

    ``alphabet`` and ``states`` may be whitespace-separated strings.
    """
    if isinstance(alphabet, str):
        alphabet = alphabet.split()
    if isinstance(states, str):
        states = states.split()
    if isinstance(initial, str):
        initial = initial.split()
    if isinstance(finals, str):
        finals = finals.split()
    translucent = {
        q: (v.split() if isinstance(v, str) else v)
        for q, v in (translucent or {}).items()
    }
    return validate({
        "alphabet": alphabet, "states": states, "initial": initial,
        "final": finals, "translucent": translucent,
        "transitions": list(transitions),
    })


@dataclass(frozen=True)
class VariantProfile:
    single_initial: bool
    deterministic_transitions: bool
    disjoint_translucency: bool
    state_deterministic: bool
    labels: frozenset[str]

    def flags(self) -> dict[str, bool]:
        return {
            "single_initial": self.single_initial,
            "deterministic_transitions": self.deterministic_transitions,
            "disjoint_translucency": self.disjoint_translucency,
            "state_deterministic": self.state_deterministic,
        }

    def sorted_labels(self) -> list[str]:
        return [lab for lab in LABEL_ORDER if lab in self.labels]


def classify(a: Automaton) -> VariantProfile:
    """Compute the structural flags of ``a`` and the variant labels they imply.

    ``NFA-compatible`` marks machines with no translucent letters at all, which
    behave exactly like a classical NFA over the same transition table.
    """
    single = len(a.initial) == 1
    det = all(len(targets) <= 1 for _, _, targets in a.transitions)
    disjoint = all(x not in a.tau(q) for q, x, _ in a.transitions)
    successors: dict[str, set[str]] = {}
    for q, _, targets in a.transitions:
        successors.setdefault(q, set()).update(targets)
    state_det = all(len(s) <= 1 for s in successors.values())

    labels = {NFAWNTL}
    if single and det:
        labels.add(DFAWNTL)
    if disjoint:
        labels.add(NFAWTL)
        if single and det:
            labels.add(DFAWTL)
        if single and state_det:
            labels.add(SFAWTL)
    if not any(a.translucency):
        labels.add(NFA_COMPATIBLE)
    return VariantProfile(single, det, disjoint, state_det, frozenset(labels))


def as_word(alphabet: Sequence[str] | Automaton, word) -> Word:
    """Normalize ``word`` to a tuple of symbol tokens over ``alphabet``.

    Strings are split on commas when they contain one, otherwise into single
    characters.  ``""`` (also the two-character text ``'""'``) is the empty word.
    """
    if isinstance(alphabet, Automaton):
        alphabet = alphabet.alphabet
    if isinstance(word, str):
        if word in ("", '""'):
            letters: Word = ()
        elif "," in word:
            letters = tuple(word.split(","))
        else:
            letters = tuple(word)
    else:
        letters = tuple(word)
    known = set(alphabet)
    for x in letters:
        if x not in known:
            raise UnknownSymbol(x, "not in the alphabet")
    return letters


def format_word(word: Sequence[str], empty: str = "") -> str:
    if not word:
        return empty
    if all(len(x) == 1 for x in word):
        return "".join(word)
    return ",".join(word)
