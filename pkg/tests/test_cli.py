import json

import pytest

from rainbowsat.cli import run
from rainbowsat.core import LabelledColouredGraph, parse_graph


def _gen(tmp_path, name, *args):
    out = tmp_path / name
    assert run(["gen", *args, "-o", str(out)]) == 0
    return out


def test_gadget_then_rainbow(tmp_path, capsys):
    g = _gen(tmp_path, "g.json", "clique-gadget", "--s", "3")
    assert run(["check", "rainbow", "--graph", str(g), "--pattern", "K5"]) == 1
    assert run(["check", "rainbow", "--graph", str(g), "--pattern", "K4"]) == 0
    witness = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert sorted(witness) == ["0", "1", "2", "3"]


def test_saturation_mono_triangle(tmp_path, capsys):
    g = tmp_path / "mono.json"
    g.write_text('{"n":3,"edges":[[0,1,0],[1,2,0],[0,2,0]]}')
    assert run(["check", "saturation", "--graph", str(g), "--pattern", "K3"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["is_saturated"] is True


def test_pattern_file(tmp_path):
    g = tmp_path / "mono.json"
    g.write_text('{"n":3,"edges":[[0,1,0],[1,2,0],[0,2,0]]}')
    h = tmp_path / "k3.json"
    h.write_text('{"n":3,"edges":[[0,1],[1,2],[0,2]]}')
    assert run(["check", "saturation", "--graph", str(g), "--pattern", str(h)]) == 0
    assert run(["check", "saturation", "--graph", str(g), "--pattern", str(h), "--palette", "2"]) == 0


def test_min_n_error(capsys):
    assert run(["gen", "construction31", "--pattern", "K3", "--edge", "0,1", "--n", "3"]) == 2
    assert "minimum n is 4" in capsys.readouterr().err


def test_usage_errors(tmp_path):
    assert run(["check", "rainbow", "--graph", str(tmp_path / "missing.json"), "--pattern", "K3"]) == 2
    assert run(["gen", "clique", "--r", "10", "--n", "40", "--bogus"]) == 2
    assert run(["check", "rainbow", "--graph", "x", "--pattern", "nosuchpattern"]) == 2
    assert run(["gen", "clique-gadget", "--s", "3", "-o", str(tmp_path / "nodir" / "g.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"n":3,"edges":[[0,0,1]]}')
    assert run(["export", "dot", "--graph", str(bad)]) == 2


def test_required_edge_and_forbidden(tmp_path, capsys):
    g = _gen(tmp_path, "g.json", "clique-gadget", "--s", "3")
    assert run(["check", "rainbow", "--graph", str(g), "--pattern", "K4", "--require-edge", "0,3"]) == 0
    capsys.readouterr()
    assert run(["check", "rainbow", "--graph", str(g), "--pattern", "K3", "--forbid-colour", "0"]) == 0
    assert run(["check", "rainbow", "--graph", str(g), "--pattern", "K3", "--require-edge", "0,0"]) == 2


GENERATORS = [
    ("c31.json", ["construction31", "--pattern", "paw", "--edge", "0,1", "--n", "9"]),
    ("pend.json", ["pendant", "--pattern", "P4", "--n", "8"]),
    ("gad.json", ["clique-gadget", "--s", "3"]),
    ("clq.json", ["clique", "--r", "10", "--n", "19"]),
]


@pytest.mark.parametrize("name, args", GENERATORS)
def test_pipes_compose(tmp_path, capsys, name, args):
    g = _gen(tmp_path, name, *args)
    assert isinstance(parse_graph(g.read_text()), LabelledColouredGraph)
    assert run(["check", "rainbow", "--graph", str(g), "--pattern", "K3"]) in (0, 1)
    assert run(["check", "saturation", "--graph", str(g), "--pattern", "P3"]) in (0, 1)
    assert run(["export", "dot", "--graph", str(g), "-o", str(tmp_path / "g.dot")]) == 0
    assert (tmp_path / "g.dot").read_text().startswith("graph")


def test_absorb_and_disconnect(tmp_path, capsys):
    c31 = _gen(tmp_path, "c.json", "construction31", "--pattern", "K3", "--edge", "0,1", "--n", "5")
    out, log = tmp_path / "a.json", tmp_path / "log.json"
    assert run(["absorb", "--graph", str(c31), "--pattern", "K3", "-o", str(out), "--log", str(log)]) == 0
    assert isinstance(json.loads(log.read_text()), list)
    assert run(["check", "saturation", "--graph", str(out), "--pattern", "K3"]) == 0
    d = _gen(tmp_path, "d.json", "disconnect", "--pattern", "K3+K2", "--inner", str(out))
    assert parse_graph(d.read_text()).n == 9
    assert run(["check", "rainbow", "--graph", str(d), "--pattern", "K3+K2"]) == 1


def test_absorb_precondition(tmp_path):
    g = tmp_path / "r.json"
    g.write_text('{"n":3,"edges":[[0,1,0],[1,2,1],[0,2,2]]}')
    assert run(["absorb", "--graph", str(g), "--pattern", "K3", "-o", str(tmp_path / "o.json")]) == 2


def test_exact(capsys):
    assert run(["exact", "--n", "3", "--pattern", "K3"]) == 0
    assert json.loads(capsys.readouterr().out)["min_edges"] == 3
    assert run(["exact", "--n", "4", "--pattern", "K3", "--max-edges", "2"]) == 1
    assert run(["exact", "--n", "7", "--pattern", "K3"]) == 2


def test_threads_flag(tmp_path, capsys):
    g = _gen(tmp_path, "c.json", "construction31", "--pattern", "K4", "--edge", "0,1", "--n", "8")
    assert run(["--threads", "2", "check", "saturation", "--graph", str(g), "--pattern", "K4"]) == 1
    rep = json.loads(capsys.readouterr().out)
    assert rep["bad_nonedges"]
