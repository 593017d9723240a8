import json
from fractions import Fraction

import pytest

from polyindex.cli import main
from polyindex.documents import polytope_to_document
from polyindex.families import irregular_hexagon


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


@pytest.fixture
def hexagon_file(tmp_path):
    path = tmp_path / "hexagon.json"
    path.write_text(json.dumps(polytope_to_document(irregular_hexagon())))
    return str(path)


def test_family_to_file_and_hull(capsys, tmp_path):
    out = tmp_path / "square.json"
    code, _, _ = run(capsys, "family", "regular_2n_gon", "--n", "2", "-o", str(out))
    assert code == 0
    report = run_json(capsys, "hull", "-i", str(out))
    assert report["command"] == "hull"
    assert report["results"]["facet_count"] == 4


def test_norm_command(capsys, tmp_path):
    doc = {"dim": 2, "scalar": "rational",
           "vertices": [[1, 1], [-1, 1], [-1, -1], [1, -1]]}
    path = tmp_path / "sq.json"
    path.write_text(json.dumps(doc))
    report = run_json(capsys, "norm", "-i", str(path), "--point", "2,0")
    assert report["results"]["value"] == 2


def test_dual_command(capsys, hexagon_file):
    report = run_json(capsys, "dual", "-i", hexagon_file)
    assert ["2/3", "1/3"] in report["results"]["vertices"]


def test_bound_command_hexagon(capsys, hexagon_file):
    report = run_json(capsys, "bound", "-i", hexagon_file)
    res = report["results"]
    assert [e["value"] for e in res["vertex_bounds"]] == ["5/17", "4/7", "9/13"]
    assert res["lower"] == "5/17"
    assert res["upper"] == 1
    assert res["status"] == "gap"


def test_family_bound_pipe_equivalent(capsys, tmp_path):
    # family --with-witness writes a document whose embedded witness the
    # bound command picks up, as if piped.
    doc_path = tmp_path / "bp.json"
    code, _, _ = run(capsys, "family", "bipyramid_square_prism", "--with-witness",
                     "-o", str(doc_path))
    assert code == 0
    report = run_json(capsys, "bound", "-i", str(doc_path))
    assert report["results"]["lower"] == "1/2"
    assert report["results"]["upper"] == "1/2"
    assert report["results"]["status"] == "tight"


def test_radius_command(capsys, tmp_path):
    code, _, _ = run(capsys, "family", "bipyramid_square_prism", "--with-witness",
                     "-o", str(tmp_path / "bp.json"))
    assert code == 0
    report = run_json(capsys, "radius", "-i", str(tmp_path / "bp.json"))
    assert report["results"]["operator_norm"] == 1
    assert report["results"]["numerical_radius"] == "1/2"
    assert len(report["results"]["profile"]) == 10


def test_witness_flag_overrides_embedded(capsys, tmp_path, hexagon_file):
    op_path = tmp_path / "op.json"
    op_path.write_text(json.dumps({"dim": 2, "scalar": "rational",
                                   "matrix": [[1, 0], [0, 1]]}))
    report = run_json(capsys, "bound", "-i", hexagon_file, "--witness", str(op_path))
    assert report["results"]["upper"] == 1


def test_policy_subset(capsys, hexagon_file):
    # In the plane every vertex has exactly two incident edges, so the
    # first-d subset equals the full set and the bounds agree.
    full = run_json(capsys, "bound", "-i", hexagon_file)
    sub = run_json(capsys, "bound", "-i", hexagon_file, "--policy", "subset")
    assert full["results"]["lower"] == sub["results"]["lower"]
    assert sub["config"]["policy"] == "subset"


def test_search_seed_determinism(capsys, hexagon_file):
    a = run_json(capsys, "bound", "-i", hexagon_file, "--search", "150", "--seed", "7")
    b = run_json(capsys, "bound", "-i", hexagon_file, "--search", "150", "--seed", "7")
    assert a == b
    assert Fraction(a["results"]["upper"]) < 1


def test_family_prism_with_height(capsys):
    doc = run_json(capsys, "family", "oblique_prism", "--n", "3", "--l", "1/2",
                   "--height", "2")
    assert doc["dim"] == 3
    zs = {round(v[2], 9) for v in doc["vertices"]}
    assert zs == {2.0, -2.0}


def test_family_height_keeps_witness_sharp(capsys, tmp_path):
    path = tmp_path / "p.json"
    code, _, _ = run(capsys, "family", "oblique_prism", "--n", "3", "--l", "0",
                     "--height", "1/2", "--with-witness", "-o", str(path))
    assert code == 0
    report = run_json(capsys, "bound", "-i", str(path))
    assert abs(report["results"]["lower"] - 0.5) < 1e-7
    assert abs(report["results"]["upper"] - 0.5) < 1e-7


def test_family_linf_sum(capsys, tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    run(capsys, "family", "regular_2n_gon", "--n", "2", "-o", str(a))
    run(capsys, "family", "regular_2n_gon", "--n", "2", "-o", str(b))
    doc = run_json(capsys, "family", "linf_sum", "--a", str(a), "--b", str(b))
    assert doc["dim"] == 4
    assert len(doc["vertices"]) == 16


def test_text_format(capsys, hexagon_file):
    code, out, _ = run(capsys, "bound", "-i", hexagon_file, "--format", "text")
    assert code == 0
    assert "lower: 5/17" in out
    assert "status: gap" in out


def test_exit_code_2_on_malformed_document(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"dim": 2, "scalar": "rational",
                                "vertices": [[1, 0.5], [-1, -0.5]]}))
    code, _, err = run(capsys, "hull", "-i", str(path))
    assert code == 2
    assert "vertices[0][1]" in err


def test_exit_code_2_on_missing_file(capsys):
    code, _, err = run(capsys, "hull", "-i", "/nonexistent/nowhere.json")
    assert code == 2
    assert "cannot read" in err


def test_exit_code_2_on_invalid_polytope(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"dim": 2, "scalar": "rational",
                                "vertices": [[1, 0], [-1, 0], [2, 0], [-2, 0]]}))
    code, _, err = run(capsys, "hull", "-i", str(path))
    assert code == 2
    assert "full-dimensional" in err


def test_family_unknown_kind(capsys):
    code, _, err = run(capsys, "family", "dodecahedron")
    assert code == 2
    assert "unknown family" in err


def test_eps_env_var(capsys, hexagon_file, monkeypatch):
    monkeypatch.setenv("POLYINDEX_EPS", "1e-6")
    report = run_json(capsys, "bound", "-i", hexagon_file)
    assert report["results"]["lower"] == "5/17"  # rational path unaffected


def test_verify_passes(capsys):
    report = run_json(capsys, "verify")
    assert report["results"]["passed"] is True
    checks = report["results"]["checks"]
    assert len(checks) >= 19
    assert all(c["pass"] for c in checks)


def test_verify_text_table(capsys):
    code, out, _ = run(capsys, "verify", "--format", "text")
    assert code == 0
    assert "checks passed" in out
