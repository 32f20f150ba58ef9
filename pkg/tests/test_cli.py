import json
from pathlib import Path

import pytest

from steenrod_kit.cli import EXIT_FAIL, EXIT_INPUT, EXIT_OK, main
from steenrod_kit.documents import CACHE_ENV_VAR, CACHE_FILENAME, load_corpus, save_complex


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_ENV_VAR, str(tmp_path / "cache"))
    yield tmp_path / "cache"


@pytest.fixture()
def corpus_file(tmp_path):
    def write(name):
        path = tmp_path / f"{name}.json"
        save_complex(load_corpus(name), path)
        return str(path)

    return write


def test_diag_standard_simplex(capsys):
    assert main(["diag", "--n", "1", "--simplex", "0,1,2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "-[0,1,2]⊗[0,1] - [0,1,2]⊗[1,2] + [0,2]⊗[0,1,2]" in out


def test_diag_writes_the_cache(isolated_cache):
    assert main(["diag", "--n", "2", "--simplex", "0,1,2,3"]) == EXIT_OK
    cache_file = Path(isolated_cache) / CACHE_FILENAME
    assert cache_file.exists()
    doc = json.loads(cache_file.read_text())
    assert "2,3" in doc["entries"]


def test_diag_cell_of_a_document(capsys, corpus_file):
    path = corpus_file("rp2")
    assert main(["diag", "--n", "1", "--input", path, "--cell", "2,0", "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["query"].startswith("xi(e1")
    assert "⊗" in payload["value"]


def test_diag_argument_errors(capsys, corpus_file):
    assert main(["diag", "--n", "1"]) == EXIT_INPUT
    assert main(["diag", "--simplex", "0,x"]) == EXIT_INPUT
    path = corpus_file("circle")
    assert main(["diag", "--input", path]) == EXIT_INPUT
    assert main(["diag", "--input", path, "--cell", "9,9"]) == EXIT_INPUT
    assert "error:" in capsys.readouterr().err


def test_homology_text_and_json(capsys, corpus_file):
    path = corpus_file("torus")
    assert main(["homology", "--input", path]) == EXIT_OK
    out = capsys.readouterr().out
    assert "H_1 = Z + Z" in out or "H_1 = Z^2" in out
    assert main(["homology", "--input", path, "--ring", "f2", "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert [r["group"] for r in payload["homology"]] != []


def test_sq_defaults_to_f2_and_rejects_others(capsys, corpus_file):
    path = corpus_file("rp2")
    assert main(["sq", "--input", path, "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    entries = {(r["i"], r["p"]): r["matrix"] for r in payload["squares"]}
    assert entries[(1, 1)] == [[1]]  # the Bockstein on the projective plane
    assert main(["sq", "--input", path, "--ring", "z"]) == EXIT_INPUT


def test_info_reports_degeneracy_freeness(capsys, corpus_file):
    path = corpus_file("counterexample")
    assert main(["info", "--input", path, "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["kind"] == "simplicial"
    assert payload["degeneracy_free"] is False
    assert payload["core_cells"] == {"0": 1, "1": 1}
    delta_path = corpus_file("torus")
    assert main(["info", "--input", delta_path, "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["kind"] == "delta" and payload["degeneracy_free"] is True


def test_verify_single_invariant(capsys):
    assert main(["verify", "--only", "prop-c4", "--max-k", "4"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "PASS (0 failures)" in out


def test_verify_json_reports_items(capsys):
    assert main(["verify", "--only", "golden-b2", "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] and payload["failures"] == 0
    assert payload["items"][0]["name"] == "golden-b2"


def test_verify_unknown_invariant_is_an_input_error(capsys):
    assert main(["verify", "--only", "no-such-check"]) == EXIT_INPUT


def test_missing_input_file(capsys):
    assert main(["homology", "--input", "/nonexistent/space.json"]) == EXIT_INPUT
