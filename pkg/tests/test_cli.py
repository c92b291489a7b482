from __future__ import annotations

import csv
import io
import json
import shutil
import subprocess

import pytest

from alcove.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_report_b2(capsys):
    code, out, _ = run(capsys, "report", "b2")
    assert code == 0
    assert "ALL GOLDEN CHECKS PASS" in out


def test_usage_errors_exit_with_two(capsys):
    assert run(capsys, "contract", "verify", "--region", "m=x")[0] == 2
    assert run(capsys, "contract", "verify", "--region", "k=2")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "datum", "preset", "E8")[0] == 2
    code, _, err = run(capsys, "ep", "pair", "--u", "t=0,0", "--v", "t=0,0;chi=E")
    assert code == 2 and "bad-character" in err


def test_viz_needs_rank_two(capsys):
    code, _, err = run(capsys, "viz", "sigma", "--datum", "A1")
    assert code == 2
    assert "rank-not-2" in err


def test_viz_writes_svg(capsys, tmp_path):
    out = tmp_path / "sigma.svg"
    code, _, _ = run(capsys, "viz", "sigma", "--region-of", "3/2,3/2;2,2", "--gamma", "3/2,0;3/2,1/2",
                     "--out", str(out))
    assert code == 0
    text = out.read_text()
    assert text.startswith("<svg") and "<!-- 44 hyperplanes -->" in text


def test_output_is_deterministic(capsys):
    first = run(capsys, "ell", "affine", "--datum", "G2")[1]
    second = run(capsys, "ell", "affine", "--datum", "G2")[1]
    assert first == second
    assert json.loads(first)


def test_datum_round_trip_through_a_file(capsys, tmp_path):
    code, out, _ = run(capsys, "datum", "preset", "B2")
    assert code == 0
    path = tmp_path / "b2.json"
    path.write_text(out)
    code, out, _ = run(capsys, "datum", "validate", "--file", str(path))
    assert code == 0 and json.loads(out)["ok"] is True
    assert run(capsys, "datum", "validate", "--file", str(tmp_path / "missing.json"))[0] == 2


def test_character_table_csv(capsys):
    code, out, _ = run(capsys, "weyl", "chartable")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert [r[0] for r in rows[1:]] == ["eps0", "eps1", "eps2", "eps3", "E"]


def test_affine_commands(capsys):
    code, out, _ = run(capsys, "affine", "length", "--word", "s1,s2,s0")
    data = json.loads(out)
    assert code == 0 and data["roots"] == data["word"] == data["gallery"] == 3
    for cmd in ("verify-lengths", "verify-lemma21", "verify-regions", "verify-lemma22"):
        code, out, _ = run(capsys, "affine", cmd, "--maxlen", "3")
        assert code == 0 and json.loads(out)["failures"] == []


def test_chain_and_contraction_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "chains", "verify", "--datum", "A2")
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = run(capsys, "contract", "verify", "--pins", "paper", "--region", "m=2")
    data = json.loads(out)
    assert code == 0 and data["identity_ok"] and data["bound_ok"]
    target = tmp_path / "table.json"
    assert run(capsys, "contract", "build", "--pins", "paper", "--out", str(target))[0] == 0
    assert json.loads(target.read_text())


def test_ep_pair_all_methods(capsys):
    # for X = Z the sign character is Ind_0(det), since rho^vee = 1 is integral
    code, out, _ = run(capsys, "ep", "pair", "--datum", "A1", "--u", "t=0;chi=det", "--v", "t=0;chi=eps0",
                       "--method", "all")
    data = json.loads(out)
    assert code == 0 and data["agree"]
    assert set(data["values"].values()) == {"-1"}


def test_elliptic_commands(capsys):
    code, out, _ = run(capsys, "ell", "measure")
    assert code == 0 and json.loads(out)["total"] == "1"
    code, out, _ = run(capsys, "ell", "affine", "--method", "geometric")
    assert code == 0
    code, out, _ = run(capsys, "ell", "finite")
    assert code == 0


@pytest.mark.skipif(shutil.which("alcove") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["alcove", "report", "b2"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "ALL GOLDEN CHECKS PASS" in proc.stdout
