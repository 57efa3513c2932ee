import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieforge import cli, corpus
from lieforge.fileformat import DefinitionError, definition_from_algebra, parse, serialize
from lieforge.structure import CheckReport
from strategies import algebras

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def h3_file(tmp_path):
    p = tmp_path / "h3.lie"
    p.write_text(corpus.text("h3"))
    return p


# -- parser ------------------------------------------------------------------


def test_parse_h3():
    d = parse("algebra h3 over Q dim 3\n[1,2]=3\n")
    L = d.build()
    assert L.c == corpus.load("h3").c


def test_parse_rationals_and_comments():
    d = parse("# x\nalgebra a over Q dim 2   # trailing\n[2,1] = -1/2*2\n")
    assert d.brackets == {(0, 1): {1: Fraction(1, 2)}}


def test_not_alternating_diagnostic():
    with pytest.raises(DefinitionError, match="NotAlternating") as exc:
        parse("algebra h3 over Q dim 3\n[1,1]=2\n")
    assert exc.value.line == 2


def test_antisymmetry_conflict():
    with pytest.raises(DefinitionError, match="antisymmetry conflict"):
        parse("algebra h3 over Q dim 3\n[1,2]=3\n[2,1]=3\n")
    # consistent repetition is fine
    parse("algebra h3 over Q dim 3\n[1,2]=3\n[2,1]=-3\n")


@pytest.mark.parametrize(
    "text, needle",
    [
        ("algebra x over Q dim 3\n[1,2]=1\n[2,3]=2\n[3,1]=3\n", "JacobiFails"),
        ("algebra x over Fp:4 dim 2\n", "prime"),
        ("algebra x over Q dim 2\n[1,2]=5\n", "out of range"),
        ("[1,2]=1\n", "header"),
        ("", "empty"),
        ("algebra x over Q dim 2\nhello\n", "unrecognized"),
        ("ring r factors 2,2\n[1,2]=1/2*1\n", "integers"),
        ("algebra x over Q dim 1\nrep V on dim 2\nphi 1 = [[0,1],[1]]\n", "entries"),
        ("ring r factors 4,2\n[1,2]=1\n", "RingError"),
    ],
)
def test_diagnostics(text, needle):
    with pytest.raises(DefinitionError, match=needle):
        parse(text)


def test_rep_block_roundtrip():
    d = corpus.definition("abelian-2-module")
    again = parse(serialize(d))
    assert again.reps[0].phi == d.reps[0].phi
    assert len(again.representations()) == 1


@pytest.mark.parametrize("name", corpus.names())
def test_corpus_roundtrip(name):
    d = corpus.definition(name)
    again = parse(serialize(d))
    assert (again.kind, again.name, again.dim, again.brackets) == (d.kind, d.name, d.dim, d.brackets)


@given(algebras(max_dim=5))
@settings(max_examples=30)
def test_serialize_parse_roundtrip(L):
    d = definition_from_algebra(L)
    assert parse(serialize(d)).build().c == L.c


# -- commands ----------------------------------------------------------------


def test_validate(capsys, h3_file, tmp_path):
    code, out, _ = run(capsys, "validate", str(h3_file))
    assert code == 0 and json.loads(out)["valid"]
    bad = tmp_path / "bad.lie"
    bad.write_text("algebra b over Q dim 2\n[1,1] = 1\n")
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 2 and "line 2" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "validate", str(tmp_path / "nope.lie"))
    assert code == 2 and "cannot read" in err


def test_usage_errors(capsys, h3_file):
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2
    code, _, _ = run(capsys, "check")
    assert code == 2
    code, _, _ = run(capsys, "check", str(h3_file), "--corpus")
    assert code == 2


def test_check_h3_all(capsys, h3_file):
    code, out, _ = run(capsys, "check", str(h3_file), "--suite", "all", "--seed", "42", "--samples", "10", "--no-timing")
    report = json.loads(out)
    assert code == 0 and report["passed"]
    assert report["seed"] == 42 and report["schema_version"] == 1
    assert "timing_seconds" not in report


def test_check_is_byte_deterministic(capsys, h3_file, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        run(capsys, "check", str(h3_file), "--suite", "lemma-cent-it", "--seed", "7", "--samples", "8", "--no-timing", "--json", str(p))
    assert a.read_bytes() == b.read_bytes()


def test_check_golden(capsys, h3_file):
    code, out, _ = run(capsys, "check", str(h3_file), "--suite", "centralizers", "--seed", "42", "--samples", "5", "--no-timing")
    assert code == 0
    assert out == (GOLDEN / "check_h3_centralizers.json").read_text()


def test_timing_present_by_default(capsys, h3_file):
    _, out, _ = run(capsys, "check", str(h3_file), "--suite", "jacobi", "--samples", "3")
    assert "timing_seconds" in json.loads(out)


def test_violation_exits_one(capsys, h3_file, monkeypatch):
    def broken(t, seed, samples):
        r = CheckReport("planted")
        r.record(False, {"why": "planted counterexample"})
        return [r]

    monkeypatch.setitem(cli.run_suite.__globals__["RUNNERS"], "jacobi", broken)
    code, out, _ = run(capsys, "check", str(h3_file), "--suite", "jacobi", "--no-timing")
    report = json.loads(out)
    assert code == 1 and not report["passed"]
    assert report["targets"][0]["checks"][0]["violations"] == [{"why": "planted counterexample"}]


def test_analyze_sl2_radicals(capsys, tmp_path):
    p = tmp_path / "sl2.lie"
    p.write_text(corpus.text("sl2"))
    code, out, _ = run(capsys, "analyze", str(p), "--radicals", "--no-timing")
    a = json.loads(out)["analysis"]
    assert code == 0 and a["radicals"]["fitting"] == {"basis": [], "dim": 0}
    assert "series" not in a


def test_analyze_everything(capsys, h3_file):
    code, out, _ = run(capsys, "analyze", str(h3_file), "--no-timing")
    a = json.loads(out)["analysis"]
    assert a["series"]["nilpotency_class"] == 2
    assert a["centralizers"]["center"]["dim"] == 1
    assert a["radicals"]["fitting"]["dim"] == 3


def test_analyze_ring_and_fp(capsys, tmp_path):
    p = tmp_path / "r.lie"
    p.write_text(corpus.text("heis2-ring"))
    code, out, _ = run(capsys, "analyze", str(p), "--no-timing")
    a = json.loads(out)["analysis"]
    assert code == 0 and a["centralizers"]["lattice"]["max_chain"] == 3
    assert a["radicals"]["fitting"]["order"] == 8
    p.write_text(corpus.text("h3-f3"))
    code, out, _ = run(capsys, "analyze", str(p), "--radicals", "--no-timing")
    assert "skipped" in json.loads(out)["analysis"]["radicals"]


def test_corpus_list_and_show(capsys):
    code, out, _ = run(capsys, "corpus", "list")
    assert code == 0 and len(out.splitlines()) == len(corpus.names())
    code, out, _ = run(capsys, "corpus", "show", "aff1")
    assert parse(out).name == "aff1"
    code, _, _ = run(capsys, "corpus", "show", "nothing")
    assert code == 2


def test_bundled_corpus_contents():
    names = set(corpus.names())
    for required in ("abelian-3", "h3", "filiform-4", "aff1", "sl2", "borel-sl2", "h3-plus-q", "rotation-5",
                     "heis2-ring", "z4z2-ring", "heis3-ring"):
        assert required in names


@given(st.text(max_size=60))
@settings(max_examples=60)
def test_parser_never_crashes(text):
    try:
        parse(text)
    except DefinitionError:
        pass
