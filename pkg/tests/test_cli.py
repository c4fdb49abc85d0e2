"""Behavioral tests for the command line interface.

Exit-code contract: 0 success, 1 usage / unreadable / ill-typed input,
2 domain precondition violated (the input parses but the operation is
mathematically undefined on it), 3 internal invariant failure.  Success
output is canonical JSON on stdout; warnings and verification notes go to
stderr only.
"""

import json
import subprocess
import sys

import pytest

from logmonoid import cli
from logmonoid.errors import InternalCheckError


def run_cli(*argv):
    return subprocess.run([sys.executable, "-m", "logmonoid", *argv],
                          capture_output=True, text=True)


def write_doc(path, doc):
    path.write_text(json.dumps(doc) + "\n")
    return str(path)


N1 = {"kind": "affine-monoid", "free_rank": 1, "torsion": [], "generators": [[1]]}
N2 = {"kind": "affine-monoid", "free_rank": 2, "torsion": [],
      "generators": [[1, 0], [0, 1]]}


# ---------------------------------------------------------------------------
# success paths


def test_gp_on_presentation(tmp_path):
    p = write_doc(tmp_path / "cusp.json", {
        "kind": "monoid-presentation", "ngens": 2,
        "relations": [[[2, 0], [0, 3]]]})
    proc = run_cli("gp", p)
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["kind"] == "abelian-group"
    assert doc["free_rank"] == 1
    assert doc["invariant_factors"] == []
    a, b = (tuple(v) for v in doc["generator_images"])
    assert tuple(2 * x for x in a) == tuple(3 * x for x in b)
    assert proc.stderr == ""


def test_stdout_is_canonical_json(tmp_path):
    p = write_doc(tmp_path / "n2.json", N2)
    proc = run_cli("spec", p)
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert proc.stdout == json.dumps(doc, indent=2) + "\n"


def test_repeated_runs_are_byte_identical(tmp_path):
    p = write_doc(tmp_path / "cone.json",
                  {"kind": "cone", "dim": 2, "rays": [[2, -1], [0, 1]]})
    outs = {run_cli("hilbert", p).stdout for _ in range(3)}
    assert len(outs) == 1


def test_multiple_files_concatenate(tmp_path):
    p1 = write_doc(tmp_path / "a.json", N1)
    p2 = write_doc(tmp_path / "b.json", N2)
    single1 = run_cli("rank", p1).stdout
    single2 = run_cli("rank", p2).stdout
    both = run_cli("rank", p1, p2)
    assert both.returncode == 0
    assert both.stdout == single1 + single2


def test_out_flag_matches_stdout(tmp_path):
    p = write_doc(tmp_path / "n2.json", N2)
    out_file = tmp_path / "result.json"
    via_stdout = run_cli("props", p)
    via_file = run_cli("props", "--out", str(out_file), p)
    assert via_file.returncode == 0
    assert via_file.stdout == ""
    assert out_file.read_text() == via_stdout.stdout


def test_verify_notes_on_stderr(tmp_path):
    p = write_doc(tmp_path / "n2.json", N2)
    proc = run_cli("spec", "--verify", p)
    assert proc.returncode == 0
    assert "verify: spec" in proc.stderr
    assert "ok" in proc.stderr
    # verification must not change the output bytes
    assert proc.stdout == run_cli("spec", p).stdout


def test_nonprimitive_ray_warns_but_succeeds(tmp_path):
    p = write_doc(tmp_path / "cone.json",
                  {"kind": "cone", "dim": 2, "rays": [[2, 0], [0, 3]]})
    proc = run_cli("dual", p)
    assert proc.returncode == 0
    assert "not primitive" in proc.stderr
    doc = json.loads(proc.stdout)
    assert doc["rays"] == [[0, 1], [1, 0]]


def test_help_exits_zero():
    proc = run_cli("--help")
    assert proc.returncode == 0
    assert "logmonoid" in proc.stdout


def test_version_exits_zero():
    proc = run_cli("--version")
    assert proc.returncode == 0


# ---------------------------------------------------------------------------
# exit 1: usage and ill-typed input


def test_missing_file_exits_1(tmp_path):
    proc = run_cli("gp", str(tmp_path / "nope.json"))
    assert proc.returncode == 1
    assert proc.stdout == ""
    assert "error:" in proc.stderr


def test_malformed_json_exits_1(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    proc = run_cli("gp", str(p))
    assert proc.returncode == 1
    assert "error:" in proc.stderr


def test_wrong_kind_exits_1(tmp_path):
    p = write_doc(tmp_path / "cone.json",
                  {"kind": "cone", "dim": 2, "rays": [[1, 0]]})
    proc = run_cli("gp", str(p))
    assert proc.returncode == 1
    assert "expected" in proc.stderr


def test_missing_field_exits_1(tmp_path):
    p = write_doc(tmp_path / "bad.json",
                  {"kind": "affine-monoid", "free_rank": 2})
    proc = run_cli("spec", p)
    assert proc.returncode == 1


def test_non_hom_matrix_exits_1(tmp_path):
    p = write_doc(tmp_path / "hom.json", {
        "kind": "hom", "source": N1, "target": N1, "matrix": [[-1]]})
    proc = run_cli("hom-check", p)
    assert proc.returncode == 1
    assert "not a monoid homomorphism" in proc.stderr


def test_ideal_generator_outside_monoid_exits_1(tmp_path):
    sub = {"kind": "affine-monoid", "free_rank": 1, "torsion": [],
           "generators": [[2], [3]]}
    p = write_doc(tmp_path / "ideal.json",
                  {"kind": "ideal", "monoid": sub, "generators": [[1]]})
    proc = run_cli("blowup", p)
    assert proc.returncode == 1
    assert "not an ideal" in proc.stderr


def test_unknown_command_exits_1():
    proc = run_cli("frobnicate")
    assert proc.returncode == 1


def test_no_arguments_exits_1():
    proc = subprocess.run([sys.executable, "-m", "logmonoid"],
                          capture_output=True, text=True)
    assert proc.returncode == 1


def test_pushout_legs_must_share_source(tmp_path):
    hom1 = {"kind": "hom", "source": N1, "target": N1, "matrix": [[2]]}
    hom2 = {"kind": "hom", "source": N2, "target": N2,
            "matrix": [[1, 0], [0, 1]]}
    p = write_doc(tmp_path / "req.json",
                  {"kind": "pushout-request", "left": hom1, "right": hom2})
    proc = run_cli("pushout", p)
    assert proc.returncode == 1
    assert "share their source" in proc.stderr


# ---------------------------------------------------------------------------
# exit 2: domain errors


def test_blowup_of_empty_ideal_exits_2(tmp_path):
    p = write_doc(tmp_path / "ideal.json",
                  {"kind": "ideal", "monoid": N2, "generators": []})
    proc = run_cli("blowup", p)
    assert proc.returncode == 2
    assert proc.stdout == ""
    assert "domain error:" in proc.stderr


def test_hilbert_of_nonpointed_cone_exits_2(tmp_path):
    p = write_doc(tmp_path / "cone.json",
                  {"kind": "cone", "dim": 2, "rays": [[1, 0], [-1, 0]]})
    proc = run_cli("hilbert", p)
    assert proc.returncode == 2


def test_mult_of_nonsimplicial_cone_exits_2(tmp_path):
    p = write_doc(tmp_path / "cone.json", {
        "kind": "cone", "dim": 3,
        "rays": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, -1]]})
    proc = run_cli("mult", p)
    assert proc.returncode == 2
    assert "simplicial" in proc.stderr


def test_composite_char_exits_2(tmp_path):
    p = write_doc(tmp_path / "hom.json", {
        "kind": "hom", "source": N1, "target": N1, "matrix": [[2]]})
    proc = run_cli("hom-check", "--char", "6", p)
    assert proc.returncode == 2
    assert "prime" in proc.stderr


def test_invalid_fan_exits_2(tmp_path):
    p = write_doc(tmp_path / "fan.json", {
        "kind": "fan", "dim": 2,
        "maximal_cones": [[[1, 0], [1, 2]], [[1, 1], [0, 1]]]})
    proc = run_cli("resolve", p)
    assert proc.returncode == 2
    assert "domain error:" in proc.stderr


# ---------------------------------------------------------------------------
# exit 3: internal check failures


def test_internal_check_failure_exits_3(tmp_path, monkeypatch, capsys):
    # exercised in-process: no handler fails its own invariants on real
    # input, so a failing handler is injected
    p = write_doc(tmp_path / "n2.json", N2)

    def broken(doc, path, args, warn):
        raise InternalCheckError("injected invariant failure")

    monkeypatch.setitem(cli._HANDLERS, "spec", broken)
    code = cli.main(["spec", str(p)])
    captured = capsys.readouterr()
    assert code == 3
    assert "internal check failed" in captured.err
    assert captured.out == ""


def test_unexpected_exception_exits_3(tmp_path, monkeypatch, capsys):
    p = write_doc(tmp_path / "n2.json", N2)

    def crash(doc, path, args, warn):
        raise ZeroDivisionError("boom")

    monkeypatch.setitem(cli._HANDLERS, "props", crash)
    code = cli.main(["props", str(p)])
    captured = capsys.readouterr()
    assert code == 3
    assert "internal error" in captured.err


# ---------------------------------------------------------------------------
# in-process equivalence (the module entry point is a thin wrapper)


def test_main_matches_subprocess(tmp_path, capsys):
    p = write_doc(tmp_path / "cone.json",
                  {"kind": "cone", "dim": 2, "rays": [[1, 0], [1, 2]]})
    code = cli.main(["faces", str(p)])
    captured = capsys.readouterr()
    proc = run_cli("faces", str(p))
    assert code == proc.returncode == 0
    assert captured.out == proc.stdout


def test_monoid_commands_accept_presentations(tmp_path):
    p = write_doc(tmp_path / "pres.json", {
        "kind": "monoid-presentation", "ngens": 2,
        "relations": [[[1, 1], [2, 1]]]})
    proc = run_cli("props", p)
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["kind"] == "predicates"


def test_proper_span_warns(tmp_path):
    p = write_doc(tmp_path / "even.json", {
        "kind": "affine-monoid", "free_rank": 1, "torsion": [],
        "generators": [[2]]})
    proc = run_cli("props", p)
    assert proc.returncode == 0
    assert "proper subgroup" in proc.stderr
