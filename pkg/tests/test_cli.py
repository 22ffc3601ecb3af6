"""In-process exercises of every CLI subcommand."""

import io
import json

import pytest

from eulerizer import fixtures
from eulerizer.cli import main


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    lines = [json.loads(line) for line in out.splitlines() if line.strip()]
    return code, lines[-1] if lines else None


@pytest.fixture
def octa_path(tmp_path):
    p = tmp_path / "octa.json"
    p.write_text(fixtures.octahedron().to_json())
    return str(p)


def _fixture_path(tmp_path, name, *params):
    p = tmp_path / f"{name}.json"
    p.write_text(fixtures.generate(name, *params).to_json())
    return str(p)


def test_validate_reports_a_closed_surface(capsys, octa_path):
    code, doc = _run(capsys, "validate", octa_path)
    assert code == 0
    assert doc["surfaceType"] == "Closed2Graph"
    assert doc["eulerCharacteristic"] == 2


def test_validate_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(fixtures.wheel(6).to_json()))
    code, doc = _run(capsys, "validate", "-")
    assert code == 0
    assert doc["surfaceType"] == "2GraphWithBoundary"
    assert doc["boundaryCycles"] == [[1, 2, 3, 4, 5, 6]]


def test_gen_writes_stdout_and_files(capsys, tmp_path):
    code, doc = _run(capsys, "gen", "wheel", "6")
    assert code == 0
    assert len(doc["vertices"]) == 7

    target = tmp_path / "out.json"
    code, doc = _run(capsys, "gen", "torus", "5", "5", "-o", str(target))
    assert code == 0 and doc is None
    saved = json.loads(target.read_text())
    assert len(saved["vertices"]) == 25


def test_gen_rejects_unknown_fixture(capsys):
    code, doc = _run(capsys, "gen", "teapot")
    assert code == 1
    assert doc["error"] == "BadParams"
    assert "known" in doc


def test_refine_emits_graph_and_move(capsys, octa_path):
    code, doc = _run(capsys, "refine", octa_path, "--edge", "1,2")
    assert code == 0
    assert doc["move"]["refinedEdge"] == [1, 2]
    assert doc["move"]["newVertex"] == 7
    assert len(doc["graph"]["vertices"]) == 7


def test_refine_rejects_non_edges(capsys, octa_path):
    code, doc = _run(capsys, "refine", octa_path, "--edge", "1,6")
    assert code == 1
    assert doc["error"] == "NotAnEdge"


def test_eulerize_closed_run(capsys, tmp_path):
    path = _fixture_path(tmp_path, "icosahedron")
    code, doc = _run(capsys, "eulerize", path, "--seed", "1")
    assert code == 0
    assert doc["seed"] == 1
    assert doc["mode"] == "closed"
    assert doc["surfaceType"] == "Closed2Graph"
    assert doc["oddCount"] == 0
    cuts = [s for s in doc["log"]["steps"] if s["cut"]]
    assert len(cuts) == 11


def test_eulerize_ball_run(capsys, tmp_path):
    path = _fixture_path(tmp_path, "wheel", "6")
    code, doc = _run(capsys, "eulerize", path, "--ball")
    assert code == 0
    assert doc["mode"] == "ball"
    assert doc["surfaceType"] == "2GraphWithBoundary"
    assert doc["oddCount"] == 0


def test_eulerize_ball_refusal_is_a_domain_error(capsys, tmp_path):
    path = _fixture_path(tmp_path, "wheel", "10")
    code, doc = _run(capsys, "eulerize", path, "--ball", "--seed", "3")
    assert code == 1
    assert doc == {"error": "RefusedBoundaryNotMod3", "boundaryLength": 10, "seed": 3}


def test_seed_resolution_order(capsys, tmp_path, monkeypatch):
    path = _fixture_path(tmp_path, "icosahedron")
    monkeypatch.setenv("EULERIZER_SEED", "1")
    code, doc = _run(capsys, "eulerize", path)
    assert code == 0 and doc["seed"] == 1

    code, doc = _run(capsys, "eulerize", path, "--seed", "0")
    assert code == 0 and doc["seed"] == 0  # flag beats the environment

    monkeypatch.setenv("EULERIZER_SEED", "pi")
    code, doc = _run(capsys, "eulerize", path)
    assert code == 1 and doc["error"] == "BadParams"


def test_components_partitions_the_octahedron(capsys, octa_path):
    code, doc = _run(capsys, "components", octa_path)
    assert code == 0
    comps = doc["components"]
    assert [len(c["edges"]) for c in comps] == [4, 4, 4]
    assert not any(c["boundary"] for c in comps)


def test_ergodic_modes(capsys, tmp_path):
    path = _fixture_path(tmp_path, "bunimovich")
    code, doc = _run(capsys, "ergodic", path, "--mode", "billiard")
    assert code == 0 and doc == {"mode": "billiard", "ergodic": True}
    code, doc = _run(capsys, "ergodic", path)
    assert code == 0 and doc == {"mode": "closed", "ergodic": False}


def test_color3_success_and_conflict(capsys, octa_path, tmp_path):
    code, doc = _run(capsys, "color3", octa_path)
    assert code == 0
    assert doc["colors"] == {str(v): c for v, c in
                             {1: 0, 2: 1, 3: 2, 4: 2, 5: 1, 6: 0}.items()}

    path = _fixture_path(tmp_path, "icosahedron")
    code, doc = _run(capsys, "color3", path)
    assert code == 1
    assert doc["error"] == "ColoringConflict"


def test_distance_between_torus_vertices(capsys, tmp_path):
    path = _fixture_path(tmp_path, "ergodic_torus")
    code, doc = _run(capsys, "distance", path, "--from", "1", "--to", "60")
    assert code == 0
    assert doc == {"from": 1, "to": 60, "distance": 4}


def test_gauss_bonnet_totals_chi(capsys, octa_path):
    code, doc = _run(capsys, "gauss-bonnet", octa_path)
    assert code == 0
    assert doc["total"] == "2"
    assert doc["perVertex"]["1"] == "1/3"


def test_missing_file_is_a_domain_error(capsys):
    code, doc = _run(capsys, "validate", "/nonexistent/rock.json")
    assert code == 1
    assert doc["error"] == "BadParams"


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as err:
        main(["refine"])  # missing required --edge
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main([])
    assert err.value.code == 2
