import pytest

from translucent import corpus
from translucent.cli import main
from translucent.core import UnknownSymbol, ValidationError
from translucent.fileformat import FormatError, export_dot, parse, serialize

EX1_TEXT = """\
# L^ab
alphabet: a b c d
states: q0 q qa qb qc qd
initial: q0
final: q

translucent q0: b c d
translucent qa: a c d
translucent qb: b c d
translucent qc: a b c
translucent qd: a b d
trans q0 a -> qa
trans q a -> qa
trans q b -> qb
trans q c -> qc
trans q d -> qd
trans qa b -> q
trans qb a -> q
trans qc d -> q
trans qd c -> q
"""


def test_parse_lab_machine(ex1):
    assert parse(EX1_TEXT) == ex1


def test_parse_missing_initial():
    text = EX1_TEXT.replace("initial: q0\n", "")
    with pytest.raises(FormatError, match="initial"):
        parse(text)


def test_parse_bad_line_number():
    with pytest.raises(FormatError) as exc:
        parse("alphabet: a\nstates: p\nbogus line\n")
    assert exc.value.line == 3


def test_parse_unknown_translucent_symbol():
    with pytest.raises(ValidationError) as exc:
        parse(EX1_TEXT + "translucent q: z\n")
    assert isinstance(exc.value.errors[0], UnknownSymbol)
    assert exc.value.errors[0].token == "z"


def test_repeated_trans_lines_accumulate():
    a = parse("alphabet: a\nstates: p q r\ninitial: p\nfinal: r\n"
              "trans p a -> r\ntrans p a -> q\n")
    assert a.delta("p", "a") == ("q", "r")


@pytest.mark.parametrize("name", ["ex1-Lab", "ex4-dfawntl", "ex6-triple-union", "fig1-ratio"])
def test_round_trip(name):
    a = corpus.get_entry(name).automaton
    text = serialize(a)
    assert parse(text) == a
    assert serialize(parse(text)) == text


def test_dot_dyck(dyck):
    dot = export_dot(dyck)
    assert dot.startswith("digraph")
    assert '"q1" [shape=circle, label="q1\\n{0}"]' in dot
    assert '"q0" [shape=doublecircle, label="q0"]' in dot
    assert dot.count("->") == 3  # two transitions and the start arrow


def test_dot_no_translucency():
    a = corpus.get_entry("sfawtl-astar").automaton
    assert "{" not in export_dot(a).split("\n", 2)[2]


def test_dot_guarded_union(ex6):
    dot = export_dot(ex6)
    nodes = [l for l in dot.splitlines() if "shape=circle" in l or "shape=doublecircle" in l]
    assert len(nodes) == 19
    assert sum(1 for l in dot.splitlines() if "[label=" in l) == len(list(ex6.edges()))


@pytest.fixture
def ex1_file(tmp_path):
    p = tmp_path / "ex1.fa"
    p.write_text(EX1_TEXT)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_cli_check(capsys, ex1_file):
    assert run(capsys, "check", ex1_file, "ba") == (0, "ACCEPT\n")
    assert run(capsys, "check", ex1_file, "aa") == (1, "REJECT\n")
    code, out = run(capsys, "check", ex1_file, "ab", "--trace")
    assert out == "ACCEPT\nq0 1 a -> qa\nqa 1 b -> q\n"


def test_cli_enum(capsys):
    code, out = run(capsys, "enum", "corpus:sfawtl-dyck", "--max-len", "4")
    assert out.splitlines() == ['""', "01", "0011", "0101"]
    code, out = run(capsys, "enum", "corpus:sfawtl-dyck", "--max-len", "4", "--parikh")
    assert out.splitlines() == ["0:0 1:0", "0:1 1:1", "0:2 1:2"]


def test_cli_classify(capsys):
    code, out = run(capsys, "classify", "corpus:ex4-dfawntl")
    assert out.splitlines() == [
        "single_initial=true", "deterministic_transitions=true",
        "disjoint_translucency=false", "state_deterministic=false",
        "labels=NFAwntl,DFAwntl"]


def test_cli_equiv(capsys, ex1_file):
    assert run(capsys, "equiv", ex1_file, "corpus:ex1-Lab", "--max-len", "5") == (0, "EQUAL\n")
    assert run(capsys, "equiv", ex1_file, "corpus:ex1-Lac", "--max-len", "3") == (
        1, "COUNTEREXAMPLE ab in=A\n")


def test_cli_union(capsys, ex1_file, tmp_path):
    out = tmp_path / "u.fa"
    assert run(capsys, "union", ex1_file, "corpus:ex1-Lac", "-o", str(out))[0] == 0
    u = parse(out.read_text())
    assert u.initial == {"1.q0", "2.q0"}


def test_cli_lemma(capsys):
    code, out = run(capsys, "lemma-check", "corpus:ex4-dfawntl", "--max-len", "6")
    assert code == 0 and out.startswith("PASS")


def test_cli_search(capsys):
    code, out = run(capsys, "search-sfawtl", "--target", "sfawtl-dyck",
                    "--max-states", "2", "--test-len", "6")
    assert code == 0 and parse(out) == corpus.get_entry("sfawtl-dyck").automaton
    code, out = run(capsys, "search-sfawtl", "--target", "ab+aaab-concat",
                    "--max-states", "2", "--test-len", "4")
    assert (code, out) == (1, "EXHAUSTED (bound 4, structure line-graph)\n")


def test_cli_corpus(capsys):
    code, out = run(capsys, "corpus", "list")
    assert out.splitlines() == corpus.list_entries()
    code, out = run(capsys, "corpus", "show", "sfawtl-dyck")
    assert parse(out) == corpus.get_entry("sfawtl-dyck").automaton
    code, out = run(capsys, "corpus", "verify", "ex1-Lab", "--max-len", "5")
    assert (code, out) == (0, "PASS ex1-Lab (bound 5)\n")


def test_cli_dot(capsys, ex1_file):
    code, out = run(capsys, "dot", ex1_file)
    assert code == 0 and out.startswith("digraph")


def test_cli_fuzz(capsys):
    code, out = run(capsys, "--seed", "3", "fuzz", "--machines", "5", "--max-len", "4")
    assert code == 0 and out.endswith("mismatches=0\n")


def test_cli_errors(capsys, tmp_path):
    bad = tmp_path / "bad.fa"
    bad.write_text("alphabet: a\n")
    assert main(["classify", str(bad)]) == 2
    assert main(["check", "corpus:ex1-Lab", "xyz"]) == 2
    assert main(["classify", str(tmp_path / "missing.fa")]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["enum"])
    assert exc.value.code == 2
