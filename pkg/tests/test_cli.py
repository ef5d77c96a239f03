"""Command-line interface: verdicts, exit codes, json/human agreement."""

import json
import shutil
from pathlib import Path

from coxwalk.cli import main

FIXTURES = Path(__file__).resolve().parent.parent / "src" / "coxwalk" / "fixtures"


def fixture(name):
    return str(FIXTURES / f"{name}.cox")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_human(capsys):
    code, out, _ = run(capsys, "classify", fixture("case_vi"))
    assert code == 0
    assert "CompactHyperbolic" in out


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", fixture("affine_a2"), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["components"][0]["class"] == "Affine"


def test_classify_components(capsys, tmp_path):
    f = tmp_path / "two.cox"
    f.write_text("a b c d e; a-b b-c a-c d-e:inf\n")
    code, out, _ = run(capsys, "classify", str(f))
    assert code == 0
    assert "Affine" in out  # both components are affine


def test_classify_parse_error(capsys, tmp_path):
    f = tmp_path / "bad.cox"
    f.write_text("a b; a-b:1\n")
    code, _, err = run(capsys, "classify", str(f))
    assert code == 2
    assert "error" in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "classify", "/nonexistent/path.cox")
    assert code == 2


def test_automaton_counts(capsys):
    code, out, _ = run(capsys, "automaton", fixture("a2"), "--count", "3")
    assert code == 0
    assert "states: 6" in out
    assert "1 2 2 2" in out


def test_automaton_export_dot(capsys):
    code, out, _ = run(capsys, "automaton", fixture("i2inf"), "--export", "dot")
    assert code == 0
    assert out.startswith("digraph")


def test_automaton_export_json_roundtrip(capsys):
    code, out, _ = run(capsys, "automaton", fixture("i2inf"), "--export", "json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["states"]) == 3


def test_automaton_cap(capsys):
    code, _, err = run(capsys, "automaton", fixture("a2"), "--cap", "2")
    assert code == 2
    assert "cap" in err


def test_compare(capsys):
    code, out, _ = run(capsys, "compare", fixture("a3"), "e", "s")
    assert code == 0
    assert "word1 < word2" in out


def test_compare_incomparable(capsys):
    code, out, _ = run(capsys, "compare", fixture("a3"), "s", "t")
    assert code == 0
    assert "incomparable" in out


def test_compare_json_agrees_with_human(capsys):
    code, out, _ = run(capsys, "compare", fixture("a3"), "s", "s t", "--json")
    payload = json.loads(out)
    assert payload["leq_forward"] is True
    assert payload["leq_backward"] is False


def test_goodpair_pass(capsys):
    code, out, _ = run(capsys, "goodpair", fixture("case_v"), "uvtut", "utvsut")
    assert code == 0
    assert "good pair: True" in out


def test_goodpair_fail(capsys):
    code, out, _ = run(capsys, "goodpair", fixture("case_v"), "s", "s")
    assert code == 1
    assert "good pair: False" in out
    assert "FAIL" in out


def test_antichain_refusal_affine(capsys):
    code, out, _ = run(capsys, "antichain", fixture("affine_a2"))
    assert code == 0
    assert "no infinite antichain" in out


def test_antichain_goodpair(capsys):
    code, out, _ = run(capsys, "antichain", fixture("triangle_334"), "--kmax", "3")
    assert code == 0
    assert "GoodPair" in out


def test_antichain_coset(capsys):
    code, out, _ = run(capsys, "antichain", fixture("universal_rank3"), "--n", "5")
    assert code == 0
    assert "CosetConstruction" in out


def test_antichain_casevi_wrong_diagram(capsys):
    code, _, err = run(
        capsys, "antichain", fixture("triangle_334"), "--method", "casevi"
    )
    assert code == 2


def test_antichain_coset_inapplicable(capsys):
    code, _, err = run(
        capsys, "antichain", fixture("triangle_334"), "--method", "coset"
    )
    assert code == 2


def test_affine_embed(capsys):
    code, out, _ = run(capsys, "affine-embed", fixture("affine_c2"), "--radius", "3")
    assert code == 0
    assert "order violations: 0" in out


def test_affine_embed_unsupported(capsys, tmp_path):
    f = tmp_path / "atilde5.cox"
    f.write_text("a b c d e f; a-b b-c c-d d-e e-f f-a\n")
    code, _, err = run(capsys, "affine-embed", str(f), "--radius", "2")
    assert code == 3
    assert "unsupported" in err


def test_verify_paper_subset(capsys):
    code, out, _ = run(
        capsys, "verify-paper", "--only", "automaton.state_counts", "growth"
    )
    assert code == 0
    assert "pass" in out
    assert "0 failed" in out


def test_verify_paper_subset_json(capsys):
    code, out, _ = run(
        capsys, "verify-paper", "--json", "--only", "automaton.state_counts"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["failed"] == 0
    assert payload["checks"][0]["check"] == "automaton.state_counts"


def test_verify_paper_bad_filter(capsys):
    code, _, err = run(capsys, "verify-paper", "--only", "nonsense")
    assert code == 2


def test_verify_paper_negative_control(capsys, tmp_path):
    """A corrupted rank-5 fixture must flip the exact facts to FAIL."""
    corrupt = tmp_path / "fixtures"
    corrupt.mkdir()
    for path in FIXTURES.glob("*.cox"):
        shutil.copy(path, corrupt / path.name)
    (corrupt / "case_vi.cox").write_text("s t u v w\ns-t:4 t-u u-v v-w\n")
    code, out, _ = run(
        capsys,
        "verify-paper",
        "--fixtures",
        str(corrupt),
        "--only",
        "case_vi",
    )
    assert code == 1
    assert "FAIL" in out
