from __future__ import annotations

import runpy
import sys
from pathlib import Path

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


def _run(name, argv, monkeypatch):
    monkeypatch.setattr(sys, "argv", [name] + argv)
    try:
        runpy.run_path(str(SCRIPTS / name), run_name="__main__")
    except SystemExit as exc:
        return exc.code
    return 0


def test_figure_data(tmp_path, monkeypatch, capsys):
    assert _run("figure_data.py", ["--e", "3", "--out", str(tmp_path)], monkeypatch) == 0
    assert (tmp_path / "rho_e3.csv").read_text().splitlines()[:3] == ["a,rho", "0,3", "1,2.61803398875"]
    assert (tmp_path / "pairs_e3.csv").read_text().splitlines() == ["a,small,big", "2,1,2"]


def test_length_two_modules(monkeypatch, capsys):
    assert _run("length_two_modules.py", ["--p", "3", "--n", "3", "--format", "csv"], monkeypatch) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "lam,mu,koszul_up_to_N,first_failure,dims"
    assert lines[1].startswith("1,0,false,1") or lines[1].startswith("1,0,False,1")
    assert len(lines) == 1 + 4


def test_verify_subset(monkeypatch, capsys):
    assert _run("verify.py", ["--only", "1", "7"], monkeypatch) == 0
    assert "2/2 passed" in capsys.readouterr().out
