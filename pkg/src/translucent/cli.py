"""Command-line interface: ``translucent <command> ...``.

Automaton arguments are paths to files in the text format of
:mod:`translucent.fileformat`, or ``corpus:<name>`` for a builtin machine.
Exit codes: 0 success / ACCEPT / EQUAL, 1 REJECT / counterexample / failure,
2 usage or parse error.
"""
from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import corpus
from .constructions import SearchSpaceSpec, search_sfawtl, union
from .core import Automaton, AutomatonError, as_word, classify, format_word
from .engine import accepts, first_trace, naive_accepts
from .fileformat import export_dot, parse, serialize
from .langops import (bounded_equivalent, check_letter_equivalence_lemma,
                      enumerate_language, parikh_image)
from .randomgen import random_automaton

EMPTY = '""'

SEARCH_TARGETS = {
    "a*+b*": (("a", "b"), corpus.a_star_plus_b_star),
    "ab+aaab-concat": (("a", "b"), corpus.ab_aaab),
}


def load(spec: str) -> Automaton:
    if spec.startswith("corpus:"):
        return corpus.get_entry(spec[len("corpus:"):]).automaton
    return parse(Path(spec).read_text(encoding="utf-8"))


def cmd_check(args) -> int:
    a = load(args.file)
    word = as_word(a, args.word)
    ok = accepts(a, word)
    print("ACCEPT" if ok else "REJECT")
    if ok and args.trace:
        for step in first_trace(a, word).steps:
            print(step)
    return 0 if ok else 1


def cmd_enum(args) -> int:
    a = load(args.file)
    lang = enumerate_language(a, args.max_len)
    if args.parikh:
        for vec in sorted(parikh_image(lang, a.alphabet)):
            print(vec)
    else:
        for w in lang:
            print(format_word(w, EMPTY))
    return 0


def cmd_classify(args) -> int:
    profile = classify(load(args.file))
    for flag, value in profile.flags().items():
        print(f"{flag}={str(value).lower()}")
    print("labels=" + ",".join(profile.sorted_labels()))
    return 0


def cmd_equiv(args) -> int:
    cex = bounded_equivalent(load(args.file_a), load(args.file_b), args.max_len)
    if cex is None:
        print("EQUAL")
        return 0
    print(f"COUNTEREXAMPLE {format_word(cex.word, EMPTY)} in={cex.side}")
    return 1


def cmd_union(args) -> int:
    out = serialize(union(load(args.file_a), load(args.file_b)))
    Path(args.output).write_text(out, encoding="utf-8")
    return 0


def cmd_lemma(args) -> int:
    report = check_letter_equivalence_lemma(load(args.file), args.max_len)
    print(report)
    return 0 if report.ok else 1


def cmd_search(args) -> int:
    if args.target in SEARCH_TARGETS:
        alphabet, target = SEARCH_TARGETS[args.target]
    else:
        entry = corpus.get_entry(args.target)
        alphabet, target = entry.automaton.alphabet, entry.oracle
    spec = SearchSpaceSpec(alphabet, args.max_states, args.test_len)
    result = search_sfawtl(target, spec)
    if result.exhausted:
        print(f"EXHAUSTED (bound {args.test_len}, structure line-graph)")
        return 1
    sys.stdout.write(serialize(result.automaton))
    return 0


def cmd_corpus(args) -> int:
    if args.action == "list":
        for name in corpus.list_entries():
            print(name)
        return 0
    if not args.name:
        raise SystemExit("corpus show/verify need an entry name")
    entry = corpus.get_entry(args.name)
    if args.action == "show":
        print(f"# {entry.name}: {entry.provenance}")
        print(f"# language: {entry.oracle_doc}")
        sys.stdout.write(serialize(entry.automaton))
        return 0
    report = corpus.verify_entry(args.name, args.max_len)
    print(report)
    return 0 if report.ok else 1


def cmd_dot(args) -> int:
    sys.stdout.write(export_dot(load(args.file)))
    return 0


def cmd_fuzz(args) -> int:
    """Differential run of the memoized search against the naive recursion."""
    rng = random.Random(args.seed)
    mismatches = 0
    for i in range(args.machines):
        a = random_automaton(rng)
        for n in range(args.max_len + 1):
            for _ in range(args.words):
                w = tuple(rng.choice(a.alphabet) for _ in range(n))
                if accepts(a, w) != naive_accepts(a, w):
                    mismatches += 1
                    print(f"MISMATCH machine {i} word {format_word(w, EMPTY)}")
    print(f"machines={args.machines} mismatches={mismatches}")
    return 0 if mismatches == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="translucent",
                                description="Finite automata with translucent letters.")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized commands")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="test membership of a word")
    s.add_argument("file")
    s.add_argument("word")
    s.add_argument("--trace", action="store_true")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("enum", help="list accepted words up to a length")
    s.add_argument("file")
    s.add_argument("--max-len", type=int, required=True)
    s.add_argument("--parikh", action="store_true")
    s.set_defaults(func=cmd_enum)

    s = sub.add_parser("classify", help="structural flags and variant labels")
    s.add_argument("file")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("equiv", help="bounded language equivalence")
    s.add_argument("file_a")
    s.add_argument("file_b")
    s.add_argument("--max-len", type=int, required=True)
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("union", help="union automaton")
    s.add_argument("file_a")
    s.add_argument("file_b")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_union)

    s = sub.add_parser("lemma-check", help="letter-equivalent sublanguage check")
    s.add_argument("file")
    s.add_argument("--max-len", type=int, required=True)
    s.set_defaults(func=cmd_lemma)

    s = sub.add_parser("search-sfawtl", help="exhaustive search for a small SFAwtl")
    s.add_argument("--target", required=True,
                   help="corpus entry name, 'a*+b*' or 'ab+aaab-concat'")
    s.add_argument("--max-states", type=int, required=True)
    s.add_argument("--test-len", type=int, required=True)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("corpus", help="builtin example machines")
    s.add_argument("action", choices=["list", "show", "verify"])
    s.add_argument("name", nargs="?")
    s.add_argument("--max-len", type=int, default=8)
    s.set_defaults(func=cmd_corpus)

    s = sub.add_parser("dot", help="Graphviz export")
    s.add_argument("file")
    s.set_defaults(func=cmd_dot)

    s = sub.add_parser("fuzz", help="random differential test of the acceptance search")
    s.add_argument("--machines", type=int, default=50)
    s.add_argument("--max-len", type=int, default=6)
    s.add_argument("--words", type=int, default=5, help="random words per length")
    s.set_defaults(func=cmd_fuzz)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (AutomatonError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
