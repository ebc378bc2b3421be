"""Random automata for differential and property testing."""
from __future__ import annotations

import random
import string
from typing import Optional

from .core import Automaton, build_automaton


def random_automaton(rng: random.Random, max_states: int = 4, max_symbols: int = 3,
                     *, n_states: Optional[int] = None, n_symbols: Optional[int] = None,
                     translucent_p: float = 0.35, transition_p: float = 0.4,
                     target_p: float = 0.35, final_p: float = 0.35,
                     disjoint: bool = False, deterministic: bool = False,
                     no_translucency: bool = False, single_initial: bool = False) -> Automaton:
    """Draw an automaton; by default an unrestricted NFAwntl.

    ``disjoint`` forces NFAwtl, ``deterministic`` forces one initial state and
    at most one target per (state, letter), ``no_translucency`` empties every tau.
    """
    n = n_states or rng.randint(1, max_states)
    m = n_symbols or rng.randint(1, max_symbols)
    states = [f"s{i}" for i in range(n)]
    alphabet = list(string.ascii_lowercase[:m])

    if deterministic or single_initial:
        initial = [rng.choice(states)]
    else:
        initial = [q for q in states if rng.random() < 0.3] or [rng.choice(states)]
    finals = [q for q in states if rng.random() < final_p]

    translucent, transitions = {}, []
    for q in states:
        tau = [] if no_translucency else [x for x in alphabet if rng.random() < translucent_p]
        translucent[q] = tau
        for x in alphabet:
            if disjoint and x in tau:
                continue
            if rng.random() >= transition_p:
                continue
            if deterministic:
                targets = [rng.choice(states)]
            else:
                targets = [p for p in states if rng.random() < target_p] or [rng.choice(states)]
            transitions += [(q, x, p) for p in targets]
    return build_automaton(alphabet, states, initial, finals, translucent, transitions)
