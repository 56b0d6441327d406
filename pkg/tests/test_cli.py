import json
import subprocess
import sys

import pytest

from latlevel import corpus
from latlevel.cli import main


@pytest.fixture
def files(tmp_path):
    out = {}
    for name in ["L1", "L2", "B3-minus-13", "N5"]:
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(corpus.emit(name)))
        out[name] = str(path)
    sets = tmp_path / "L1_sets.json"
    sets.write_text(json.dumps({
        "ground": list("12345"),
        "sets": [[], ["1"], ["2"], ["3"], ["1", "2"], ["2", "3"], ["1", "2", "3"], ["2", "3", "4"], ["2", "3", "5"], ["2", "3", "4", "5"]],
    }))
    out["L1_sets"] = str(sets)
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"elements": ["a", "b", "c", "d"], "covers": [["a", "c"], ["b", "c"], ["a", "d"], ["b", "d"]]}))
    out["bad"] = str(bad)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_level_L1(capsys, files):
    code, out, _ = run(capsys, "level", "--input", files["L1"])
    assert code == 0
    assert "h = (1, 5, 4)" in out and "LEVEL: yes" in out


def test_level_L2(capsys, files):
    code, out, _ = run(capsys, "level", "--input", files["L2"])
    assert code == 0
    assert "h = (1, 4, 6, 2)" in out and "LEVEL: no" in out
    assert "S-facets: {1,2} {1,3,4} {2,3,4}" in out


def test_validate_pentagon(capsys, files):
    code, out, _ = run(capsys, "validate", "--input", files["N5"])
    assert code == 0
    assert "meet_distributive: false" in out and "witness: 1" in out
    code, out, _ = run(capsys, "validate", "--input", files["N5"], "--json")
    assert json.loads(out) == {"valid": True, "join_irreducibles": ["a", "b", "c"], "meet_distributive": False, "witness": "1"}


def test_validate_failure_exit(capsys, files):
    code, out, _ = run(capsys, "validate", "--input", files["bad"], "--json")
    assert code == 1 and json.loads(out)["valid"] is False


def test_usage_errors(capsys, files, tmp_path):
    assert run(capsys, "nope")[0] == 2
    assert run(capsys, "level")[0] == 2
    assert run(capsys, "level", "--input", str(tmp_path / "missing.json"))[0] == 2
    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    assert run(capsys, "level", "--input", str(junk))[0] == 2
    assert run(capsys, "level", "--input", files["L1"], "--format", "sets")[0] == 2
    assert run(capsys, "corpus", "Nope")[0] == 2


def test_not_meet_distributive_needs_force(capsys, files):
    code, _, err = run(capsys, "hvector", "--input", files["N5"])
    assert code == 1 and "NotMeetDistributive" in err
    code, out, err = run(capsys, "hvector", "--input", files["N5"], "--force", "--json")
    assert code == 0 and "WARNING" in err
    assert sum(json.loads(out)["h"]) == 5


def test_sets_format_autodetect(capsys, files):
    _, a, _ = run(capsys, "dual-ideal", "--input", files["L1"], "--json")
    _, b, _ = run(capsys, "dual-ideal", "--input", files["L1_sets"], "--json")
    assert json.loads(a)["generators"] == json.loads(b)["generators"]
    _, c, _ = run(capsys, "dual-ideal", "--input", files["L1_sets"], "--format", "sets", "--json")
    assert json.loads(b) == json.loads(c)


def test_dual_ideal_text_and_json(capsys, files):
    _, text, _ = run(capsys, "dual-ideal", "--input", files["L1"])
    _, js, _ = run(capsys, "dual-ideal", "--input", files["L1"], "--json")
    gens = json.loads(js)["generators"]
    assert "iii   x_2*y_1*y_3" in text
    assert {"family": "iii", "x": [2], "y": [1, 3]} in gens
    assert len(gens) == len(text.strip().splitlines()) - 1


def test_level_json_schema(capsys, files):
    code, out, _ = run(capsys, "level", "--input", files["L2"], "--json")
    doc = json.loads(out)
    assert set(doc) == {"h", "f_dual", "a_invariant", "s_facets", "is_level"}
    assert doc["h"][:4] == [1, 4, 6, 2] and doc["is_level"] is False
    assert doc["s_facets"] == [[1, 2], [1, 3, 4], [2, 3, 4]]


def test_scomplex_closure_scan(capsys, files):
    code, out, _ = run(capsys, "scomplex", "--input", files["L1"], "--json")
    assert code == 0 and json.loads(out)["facets"] == [[1, 2], [1, 3], [2, 3], [4, 5]]
    code, out, _ = run(capsys, "closure", "--input", files["L1"], "--json")
    doc = json.loads(out)
    assert code == 0 and len(doc["elements"]) == 14
    code, out, _ = run(capsys, "scan", "--n", "3", "--json")
    assert [1, 3, 3, 0] not in json.loads(out)["h_vectors"]


def test_oracle_check(capsys, files):
    code, out, _ = run(capsys, "oracle-check", "--input", files["L2"], "--json")
    doc = json.loads(out)
    assert code == 0 and len(doc["checks"]) == 5 and all(c["pass"] for c in doc["checks"])
    code, out, _ = run(capsys, "oracle-check", "--input", files["N5"])
    assert code == 0 and "not meet-distributive" in out


def test_corpus_emit(capsys, tmp_path):
    code, out, _ = run(capsys, "corpus", "L1")
    assert code == 0 and len(json.loads(out)["elements"]) == 10
    _, out, _ = run(capsys, "corpus", "B3-minus-13")
    assert len(json.loads(out)["elements"]) == 7
    _, out, _ = run(capsys, "corpus", "Bn(2)")
    assert len(json.loads(out)["elements"]) == 4
    path = tmp_path / "jp.json"
    assert run(capsys, "corpus", "JP(5)", "--output", str(path))[0] == 0
    assert json.loads(path.read_text()) == corpus.emit("JP(5)")


def test_max_ground(capsys, files, monkeypatch):
    assert run(capsys, "level", "--input", files["L1"], "--max-ground", "4")[0] == 1
    monkeypatch.setenv("LATLEVEL_MAX_GROUND", "4")
    assert run(capsys, "level", "--input", files["L1"])[0] == 1
    assert run(capsys, "level", "--input", files["L1"], "--max-ground", "64")[0] == 0
    assert run(capsys, "level", "--input", files["L1"], "--max-ground", "500")[0] == 2


def test_deterministic(capsys, files):
    for cmd in ["validate", "dual-ideal", "hvector", "scomplex", "level", "oracle-check", "closure"]:
        first = run(capsys, cmd, "--input", files["L2"], "--json")
        assert run(capsys, cmd, "--input", files["L2"], "--json") == first


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "latlevel", "hvector", "--input", files["B3-minus-13"]], capture_output=True, text=True)
    assert proc.returncode == 0 and "h = (1, 3, 3)" in proc.stdout
