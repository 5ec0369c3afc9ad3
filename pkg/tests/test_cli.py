from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from surfalg import fixtures
from surfalg.cli import main
from surfalg.io import load_quiver

FIX = fixtures.__path__[0]


def run(argv, capsys, monkeypatch, stdin=""):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def path(name):
    return f"{FIX}/{name}.json"


def test_dim_prints_bare_number(capsys, monkeypatch):
    assert run(["dim", path("markov")], capsys, monkeypatch) == (0, "36\n", "")


def test_star_piped_into_orbits(capsys, monkeypatch):
    code, star_doc, _ = run(["star", path("loop_pair_swapped")], capsys, monkeypatch)
    assert code == 0
    code, out, _ = run(["orbits", "--perm", "g", "-"], capsys, monkeypatch, stdin=star_doc)
    data = json.loads(out)
    assert data["perm"] == "g"
    assert sorted(map(len, data["orbits"])) == [2, 2, 2]
    assert sorted(data["weights"]) == [1, 2, 3]


def test_garbage_is_reported_as_json(tmp_path, capsys, monkeypatch):
    bad = tmp_path / "bad.json"
    bad.write_text("garbage")
    code, out, err = run(["validate", str(bad)], capsys, monkeypatch)
    assert code == 1 and out == ""
    report = json.loads(err)
    assert report["error"] == "DocumentError" and report["pointer"] == "/"


def test_invalid_quiver_lists_problems(capsys, monkeypatch):
    d = json.loads(fixtures.text("markov"))
    d["f"]["alpha1"] = d["f"]["alpha2"]
    code, _, err = run(["validate", "-"], capsys, monkeypatch, stdin=json.dumps(d))
    assert code == 1
    report = json.loads(err)
    assert report["problems"] and all({"code", "detail"} <= set(p) for p in report["problems"])


def test_usage_errors(capsys, monkeypatch):
    code, _, err = run(["dim", "/no/such/file.json"], capsys, monkeypatch)
    assert code == 2 and "cannot read" in err
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_weighted_relations_refused(capsys, monkeypatch):
    code, _, err = run(["relations", path("eight_vertex"), "--kind", "weighted"], capsys, monkeypatch)
    assert code == 1 and json.loads(err)["error"] == "NotTriangulation"


def test_relations_text(capsys, monkeypatch):
    code, out, _ = run(["relations", path("square_border"), "--kind", "border", "--format", "text"],
                       capsys, monkeypatch)
    assert code == 0
    assert "mu*mu = 1/2 * mu*gamma*xi*sigma*rho*alpha*eta*beta" in out.splitlines()


def test_reduce_outputs(capsys, monkeypatch):
    code, out, _ = run(["reduce", path("eight_vertex"), "--keep", "1,2"], capsys, monkeypatch)
    assert code == 0
    data = json.loads(out)
    docs = data if isinstance(data, list) else [data]
    assert sum(len(d["vertices"]) for d in docs) == 2
    code, out, _ = run(["reduce", path("disk"), "--keep", "1,2,3,4"], capsys, monkeypatch)
    assert load_quiver(out).wbq == load_quiver(fixtures.text("disk")).wbq


def test_envelope_metadata(capsys, monkeypatch):
    code, out, _ = run(["envelope", path("markov")], capsys, monkeypatch)
    doc = load_quiver(out)
    assert doc.metadata == {"selection": ["1", "2", "3"]}
    assert len(doc.wbq.vertices) == 9


def test_brauer_commands(capsys, monkeypatch):
    code, out, _ = run(["to-brauer", path("markov")], capsys, monkeypatch)
    g = json.loads(out)
    assert len(g["vertices"]) == 1 and len(g["edges"]) == 3
    code, out, _ = run(["from-brauer", "-"], capsys, monkeypatch, stdin=out)
    assert len(json.loads(out)["vertices"]) == 3
    code, out, _ = run(["barycentric", path("four_edge_brauer")], capsys, monkeypatch)
    assert len(json.loads(out)["vertices"]) == 6
    code, out, _ = run(["green-walks", path("four_edge_brauer")], capsys, monkeypatch)
    assert code == 0 and len(json.loads(out)) == 3


def test_iso_and_surface(capsys, monkeypatch):
    code, out, _ = run(["iso", path("markov"), path("tetrahedral")], capsys, monkeypatch)
    assert json.loads(out) == {"isomorphic": False}
    code, out, _ = run(["iso", path("tetrahedral"), path("tetrahedral")], capsys, monkeypatch)
    assert json.loads(out)["isomorphic"] is True
    code, out, _ = run(["surface", path("markov")], capsys, monkeypatch)
    assert json.loads(out)["genus"] == 1
    code, _, err = run(["surface", path("loop_pair_fixed")], capsys, monkeypatch)
    assert code == 1 and json.loads(err)["error"] == "TooSmall"


def test_cartan_and_gabriel(capsys, monkeypatch):
    code, out, _ = run(["cartan", path("markov")], capsys, monkeypatch)
    assert json.loads(out)["matrix"] == [[4, 4, 4]] * 3
    starred = run(["star", path("loop_pair_fixed")], capsys, monkeypatch)[1]
    code, out, _ = run(["gabriel", "-"], capsys, monkeypatch, stdin=starred)
    # the two eps loops are virtual and drop out
    assert code == 0 and len(json.loads(out)["arrows"]) == 4


def test_dot_formats(capsys, monkeypatch):
    code, out, _ = run(["export-dot", path("square_border")], capsys, monkeypatch)
    assert out.startswith("digraph") and out.count("->") == 8
    code, out, _ = run(["star", path("markov"), "--format", "dot"], capsys, monkeypatch)
    assert out.count("->") == 18
    code, out, _ = run(["export-dot", path("four_edge_brauer")], capsys, monkeypatch)
    assert out.startswith("graph") and out.count(" -- ") == 4


def test_random_is_deterministic(capsys, monkeypatch):
    a = run(["random", "--vertices", "5", "--seed", "9"], capsys, monkeypatch)[1]
    b = run(["random", "--vertices", "5", "--seed", "9"], capsys, monkeypatch)[1]
    assert a == b
    assert run(["validate", "-"], capsys, monkeypatch, stdin=a)[0] == 0
    g = run(["random", "--vertices", "4", "--seed", "2", "--brauer"], capsys, monkeypatch)[1]
    assert len(json.loads(g)["edges"]) == 4


def test_sharp_and_double_star(capsys, monkeypatch):
    code, out, _ = run(["sharp", path("square_border")], capsys, monkeypatch)
    assert len(json.loads(out)["vertices"]) == 8
    code, _, err = run(["sharp", path("markov")], capsys, monkeypatch)
    assert code == 1 and json.loads(err)["error"] == "EmptyBorder"
    code, out, _ = run(["double-star", path("loop_pair_swapped")], capsys, monkeypatch)
    assert len(json.loads(out)["vertices"]) == 9


def test_console_script_pipeline():
    star = subprocess.run(["surfalg", "star", path("loop_pair_swapped")], capture_output=True, text=True, check=True)
    orb = subprocess.run(["surfalg", "orbits", "--perm", "g", "-"], input=star.stdout,
                         capture_output=True, text=True, check=True)
    assert len(json.loads(orb.stdout)["orbits"]) == 3
