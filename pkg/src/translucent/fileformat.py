"""Line-oriented automaton text format and Graphviz DOT export.

::

    # comment
    alphabet: a b c d
    states: q0 q qa qb qc qd
    initial: q0
    final: q
    translucent q0: b c d
    trans q0 a -> qa

Repeated ``trans`` lines for the same (state, letter) accumulate targets.
A state without a ``translucent`` line has no translucent letters.
"""
from __future__ import annotations

from .core import Automaton, AutomatonError, validate

_HEADERS = ("alphabet", "states", "initial", "final")


class FormatError(AutomatonError):
    """Malformed automaton text; ``line`` is 1-based (0 when not tied to a line)."""

    def __init__(self, line: int, msg: str):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line else msg)


def parse(text: str) -> Automaton:
    seen: dict[str, tuple[int, list[str]]] = {}
    translucent: dict[str, list[str]] = {}
    transitions = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        key = head.strip()
        if sep and key in _HEADERS:
            if key in seen:
                raise FormatError(lineno, f"duplicate '{key}:' line")
            seen[key] = (lineno, rest.split())
        elif sep and key.startswith("translucent"):
            parts = key.split()
            if len(parts) != 2:
                raise FormatError(lineno, "expected 'translucent <state>: <letters>'")
            translucent.setdefault(parts[1], []).extend(rest.split())
        elif key.startswith("trans ") or key == "trans":
            tokens = line.split()
            if len(tokens) != 5 or tokens[3] != "->":
                raise FormatError(lineno, "expected 'trans <state> <letter> -> <state>'")
            transitions.append((tokens[1], tokens[2], tokens[4]))
        else:
            raise FormatError(lineno, f"unrecognized line: {raw.strip()!r}")
    for key in _HEADERS:
        if key not in seen:
            raise FormatError(0, f"missing '{key}:' line")
    return validate({
        "alphabet": seen["alphabet"][1],
        "states": seen["states"][1],
        "initial": seen["initial"][1],
        "final": seen["final"][1],
        "translucent": translucent,
        "transitions": transitions,
    })


def serialize(a: Automaton) -> str:
    lines = [
        "alphabet: " + " ".join(a.alphabet),
        "states: " + " ".join(a.states),
        "initial: " + " ".join(q for q in a.states if q in a.initial),
        "final: " + " ".join(q for q in a.states if q in a.finals),
    ]
    for q, tau in zip(a.states, a.translucency):
        if tau:
            lines.append(f"translucent {q}: " + " ".join(x for x in a.alphabet if x in tau))
    lines += [f"trans {q} {x} -> {p}" for q, x, p in a.edges()]
    return "\n".join(lines) + "\n"


def _escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def _quote(s: str) -> str:
    return '"' + _escape(s) + '"'


def export_dot(a: Automaton, name: str = "A") -> str:
    """DOT digraph: double circles for final states, tau sets in node labels,
    one edge per (state, letter, target), initial states fed from point nodes."""
    out = [f"digraph {_quote(name)} {{", "  rankdir=LR;"]
    for q in a.states:
        tau = [x for x in a.alphabet if x in a.tau(q)]
        label = _escape(q) + ("\\n{" + ",".join(tau) + "}" if tau else "")
        shape = "doublecircle" if q in a.finals else "circle"
        out.append(f'  {_quote(q)} [shape={shape}, label="{label}"];')
    for i, q in enumerate(q for q in a.states if q in a.initial):
        out.append(f'  "__start{i}" [shape=point];')
        out.append(f'  "__start{i}" -> {_quote(q)};')
    for q, x, p in a.edges():
        out.append(f"  {_quote(q)} -> {_quote(p)} [label={_quote(x)}];")
    out.append("}")
    return "\n".join(out) + "\n"
