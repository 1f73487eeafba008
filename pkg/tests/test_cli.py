import json
import subprocess
import sys

import pytest

from torpersist.cli import main

E = {"field": {"kind": "prime", "p": 101}, "vars": [{"name": "x", "weight": 1}, {"name": "y", "weight": 1}],
     "relations": ["x^2", "y^2"]}
G = dict(E, relations=["x^2", "x*y", "y^2"])


@pytest.fixture
def files(tmp_path):
    e, g = tmp_path / "E.json", tmp_path / "G.json"
    e.write_text(json.dumps(E))
    g.write_text(json.dumps(G))
    mod = tmp_path / "Ex.json"
    mod.write_text(json.dumps({"targets": [0], "sources": [1], "entries": [["x"]]}))
    return tmp_path, str(e), str(g), str(mod)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_ring_info(files, capsys):
    _, e, g, _ = files
    code, out = run(capsys, "ring", "info", e)
    info = json.loads(out)
    assert code == 0 and info["type"] == 1 and info["gorenstein"] and info["m3zero"]
    assert info["hilbert_series"]["numerator"]["coefficients"] == [1, 2, 1]
    info = json.loads(run(capsys, "ring", "info", g)[1])
    assert info["type"] == 2


def test_module_resolve(files, capsys):
    tmp, e, _, mod = files
    code, out = run(capsys, "module", "resolve", e, "k", "--steps", "3")
    assert code == 0 and "total:" in out
    out_file = tmp / "res.json"
    run(capsys, "module", "resolve", e, mod, "--steps", "4", "--json", "--out", str(out_file))
    data = json.loads(out_file.read_text())
    assert data["exact"] and data["minimal"]
    assert [row[2] for row in data["betti"]["entries"]] == [1] * 5


def test_tor_and_ext(files, capsys):
    _, e, g, mod = files
    rep = json.loads(run(capsys, "tor", e, mod, "--lo", "1", "--window", "4")[1])
    assert rep["op"] == "tor" and sum(v for _, _, v in rep["entries"]) == 8
    rep = json.loads(run(capsys, "ext", g, "omega", "--lo", "1", "--window", "1")[1])
    assert rep["entries"] and rep["entries"][0][0] == 1
    rep = json.loads(run(capsys, "tor", e, "k", "k", "--lo", "1", "--window", "1")[1])
    assert rep["entries"] == [[1, 1, 2]]


def test_powers(files, capsys):
    _, _, g, _ = files
    code, out = run(capsys, "powers", "wedge2", g, "m")
    data = json.loads(out)
    assert code == 0 and data["decomposition"]["pass"]
    assert data["hilbert"] == [[2, 1]]
    data = json.loads(run(capsys, "powers", "s2", g, "m")[1])
    assert data["hilbert"] == [[2, 3]]


def test_series_checks(files, capsys):
    _, e, g, _ = files
    code, out = run(capsys, "series", "check", "hilbert-poincare", e, "k", "--window", "4")
    assert code == 0 and json.loads(out)["pass"]
    code, out = run(capsys, "series", "check", "epsilon", "--eps-r", "1,1", "--eps-m", "2,1")
    assert json.loads(out)["rhs_at_1"] == 6
    code, out = run(capsys, "series", "check", "ab97", g, "k")
    assert code == 3 and not json.loads(out)["pass"]
    code, _ = run(capsys, "series", "check", "ab97", g)
    assert code == 0
    code, out = run(capsys, "series", "check", "poincare-s2", e, "k", "--window", "3")
    assert code == 0
    code, out = run(capsys, "series", "check", "lemma", e, "R")
    assert json.loads(out)["pass"]


def test_experiment_outputs(files, capsys):
    tmp = files[0]
    out, csv = tmp / "rep.json", tmp / "rep.csv"
    code, _ = run(capsys, "experiment", "m3zero", "--seed", "4", "--trials", "8", "--out", str(out), "--csv", str(csv))
    assert code == 0
    first = out.read_bytes()
    run(capsys, "experiment", "m3zero", "--seed", "4", "--trials", "8", "--out", str(out))
    assert out.read_bytes() == first
    assert csv.read_text().count("\n") == 9


def test_console_entry_point(files):
    _, e, _, _ = files
    proc = subprocess.run([sys.executable, "-m", "torpersist.cli", "ring", "info", e], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["length"] == 4
