"""Command-line surface: formats, determinism, seeds, and exit codes."""

import json
import subprocess
import sys
import xml.etree.ElementTree as ET
from pathlib import Path

import jsonschema
import pytest

from hexbubble import cli
from hexbubble.solver import find_alpha0, solve

SCHEMA_PATH = Path(__file__).resolve().parent.parent / "docs" / "output_schema.json"


def run_cli(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------- solve


def test_solve_text(capsys):
    code, out, err = run_cli(["solve", "--alpha", "0.3"], capsys)
    assert code == 0 and err == ""
    assert "alpha      = 0.3" in out
    assert "case       = kissing" in out
    assert "perimeter  = 5.197335014" in out
    assert "candidates = embedded" in out  # sorted keys, pipe-separated
    assert " | kissing " in out
    assert "solution 1: kissing" in out


def test_solve_json_schema_and_roundtrip(capsys):
    schema = json.loads(SCHEMA_PATH.read_text())
    for alpha in (0.3, find_alpha0()):
        code, out, _ = run_cli(["solve", "--alpha", repr(alpha), "--format", "json"], capsys)
        assert code == 0
        record = json.loads(out)
        jsonschema.validate(record, schema)
        result = solve(alpha)
        assert record["case"] == result.case
        assert abs(float(record["alpha"]) - alpha) <= 1e-11
        assert abs(float(record["perimeter"]) - result.perimeter) <= 1e-11
        assert abs(float(record["joint_length"]) - result.joint_length) <= 1e-11
        assert len(record["solutions"]) == len(result.solutions)
        for block, entry in zip(record["solutions"], result.solutions):
            assert block["case"] == entry.case
            assert abs(float(block["L1"]) - entry.L1) <= 1e-11
            assert len(block["vertices_a"]) == len(entry.geometry_a.vertices)


def test_solve_both_case_lists_two_solutions(capsys):
    a0 = find_alpha0()
    code, out, _ = run_cli(["solve", "--alpha", repr(a0), "--format", "json"], capsys)
    assert code == 0
    record = json.loads(out)
    assert record["case"] == "both"
    assert [b["case"] for b in record["solutions"]] == ["embedded", "kissing"]


# ---------------------------------------------------------------- sweep


def test_sweep_csv_deterministic(tmp_path, capsys):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    for out in (out1, out2):
        code, _, err = run_cli(
            ["sweep", "--from", "0.1", "--to", "0.2", "--steps", "12", "--out", str(out)],
            capsys,
        )
        assert code == 0 and err == ""
    b1, b2 = out1.read_bytes(), out2.read_bytes()
    assert b1 == b2
    assert b"\r" not in b1
    lines = b1.decode("ascii").splitlines()
    assert lines[0] == "alpha,case,perimeter,L1,L2"
    assert len(lines) == 13  # header + one row per grid point
    assert lines[1].startswith("0.1,embedded,")
    assert lines[-1].startswith("0.2,kissing,")


# ---------------------------------------------------------------- verify


def test_verify_quick_deterministic(capsys):
    code1, out1, _ = run_cli(["verify", "--suite", "quick", "--seed", "3"], capsys)
    code2, out2, _ = run_cli(["verify", "--suite", "quick", "--seed", "3"], capsys)
    assert code1 == code2 == 0
    assert out1 == out2
    assert "hexbubble verification" in out1
    assert "suite: quick" in out1
    assert "seed: 3" in out1
    assert "result: PASS (10/10)" in out1
    assert sum(1 for ln in out1.splitlines() if ln.startswith("PASS ")) == 10


def test_verify_full_passes(capsys):
    code, out, _ = run_cli(["verify", "--suite", "full", "--seed", "0"], capsys)
    assert code == 0
    assert "result: PASS (16/16)" in out


def test_verify_seed_env_override(monkeypatch, capsys):
    monkeypatch.setenv("HEXBUBBLE_SEED", "42")
    code, out, _ = run_cli(["verify", "--suite", "quick", "--seed", "7"], capsys)
    assert code == 0
    assert "seed: 42" in out
    monkeypatch.setenv("HEXBUBBLE_SEED", "not-an-int")
    code, out, err = run_cli(["verify", "--suite", "quick"], capsys)
    assert code == 2
    assert "HEXBUBBLE_SEED" in err


def test_verify_catches_distorted_formula(monkeypatch, capsys):
    import hexbubble.kissing as kissing_mod

    real = kissing_mod.equal_perimeters

    def distorted(L, alpha):
        p3, p4, p5, p6 = real(L, alpha)
        return p3 + 1e-6, p4, p5, p6

    monkeypatch.setattr(kissing_mod, "equal_perimeters", distorted)
    code, out, _ = run_cli(["verify", "--suite", "quick", "--seed", "0"], capsys)
    assert code == 1
    assert "FAIL p3-dominance" in out
    assert "result: FAIL" in out


# ---------------------------------------------------------------- render


def test_render_single_case(tmp_path, capsys):
    out = tmp_path / "pair.svg"
    code, _, _ = run_cli(["render", "--alpha", "0.5", "--out", str(out)], capsys)
    assert code == 0
    text = out.read_text()
    assert text.startswith("<?xml")
    assert "scale: 100 SVG user units per plane unit" in text
    root = ET.fromstring(text)
    ns = "{http://www.w3.org/2000/svg}"
    polys = root.findall(f".//{ns}polygon")
    assert len(polys) == 2
    fills = {p.get("fill") for p in polys}
    assert fills == {"#1f77b4", "#d62728"}
    lines = root.findall(f".//{ns}line")
    assert any(l.get("stroke") == "#2ca02c" for l in lines)


def test_render_transition_shows_both_panels(tmp_path, capsys):
    out = tmp_path / "both.svg"
    code, _, _ = run_cli(["render", "--alpha", repr(find_alpha0()), "--out", str(out)], capsys)
    assert code == 0
    root = ET.fromstring(out.read_text())
    ns = "{http://www.w3.org/2000/svg}"
    assert len(root.findall(f".//{ns}polygon")) == 4


# ---------------------------------------------------------------- iso


def test_iso_default(capsys):
    code, out, _ = run_cli(["iso"], capsys)
    assert code == 0
    assert "L0        = 0.620403239401" in out
    assert "perimeter = 3.72241943641" in out


def test_iso_volume_scaling(capsys):
    _, out1, _ = run_cli(["iso"], capsys)
    code, out4, _ = run_cli(["iso", "--volume", "4"], capsys)
    assert code == 0
    L1 = float(out1.splitlines()[0].split("=")[1])
    L4 = float(out4.splitlines()[0].split("=")[1])
    P1 = float(out1.splitlines()[1].split("=")[1])
    P4 = float(out4.splitlines()[1].split("=")[1])
    assert abs(L4 - 2.0 * L1) <= 1e-11
    assert abs(P4 - 2.0 * P1) <= 1e-11


def test_iso_svg(tmp_path, capsys):
    out = tmp_path / "hex.svg"
    code, _, _ = run_cli(["iso", "--out", str(out)], capsys)
    assert code == 0
    text = out.read_text()
    assert "isoperimetric hexagon" in text
    root = ET.fromstring(text)
    ns = "{http://www.w3.org/2000/svg}"
    assert len(root.findall(f".//{ns}polygon")) == 1


# ---------------------------------------------------------------- exit codes


def test_exit_codes(tmp_path, capsys):
    assert run_cli(["no-such-command"], capsys)[0] == 2
    assert run_cli(["solve", "--alpha", "1.5"], capsys)[0] == 2
    assert run_cli(["solve", "--alpha", "zero"], capsys)[0] == 2
    assert run_cli(["solve"], capsys)[0] == 2  # --alpha is required
    assert run_cli(["iso", "--volume", "-1"], capsys)[0] == 2
    assert run_cli(["sweep", "--from", "0.5", "--to", "0.1", "--steps", "3",
                    "--out", str(tmp_path / "x.csv")], capsys)[0] == 2
    code, _, err = run_cli(
        ["sweep", "--from", "0.1", "--to", "0.2", "--steps", "3",
         "--out", "/nonexistent-dir/x.csv"], capsys)
    assert code == 3
    assert "cannot write" in err
    assert run_cli(
        ["render", "--alpha", "0.5", "--out", "/nonexistent-dir/x.svg"], capsys
    )[0] == 3


def test_console_script_help():
    proc = subprocess.run(["hexbubble", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "solve" in proc.stdout and "verify" in proc.stdout
