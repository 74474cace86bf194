import json
import subprocess
import sys

import pytest

from checkerboard.cli import EXIT_INVALID, EXIT_OK, EXIT_USAGE, main

TREE_A = "1 1 1 2 2 1 1 2 3 2 2 2 3"
TREE_B = "1 1 1 2 2 1 1 3 2 4 3 3 3 4"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_linking_graph_json(capsys):
    code, out, _ = run(capsys, "linking-graph", "1 1 1", "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["edges"] == [{"id": 1, "tail": 1, "head": 2}] and len(data["vertices"]) == 2


def test_linking_graph_dot(capsys):
    code, out, _ = run(capsys, "linking-graph", "1 2 1 2 1", "--dot")
    assert code == EXIT_OK and out.startswith("digraph")


def test_invariants_of_trefoil_word(capsys):
    code, out, _ = run(capsys, "invariants", "--braid", "1 2 1 2", "--matrices")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["fingerprint"]["alexander"] == {"offset": 0, "coeffs": [1, -1, 1]}
    assert data["fingerprint"]["signature"] == 2
    assert data["seifert"] == [[-1, 0], [1, -1]]


def test_isomorphic_same_unoriented_tree(capsys, tmp_path):
    paths = []
    for name, word in (("a", TREE_A), ("b", TREE_B)):
        _, out, _ = run(capsys, "linking-graph", word)
        p = tmp_path / f"{name}.json"
        p.write_text(out)
        paths.append(str(p))
    assert run(capsys, "isomorphic", *paths, "--unoriented", "--mirror")[1].strip() == "isomorphic"
    assert run(capsys, "isomorphic", *paths, "--oriented", "--mirror")[1].strip() == "not isomorphic"
    assert run(capsys, "isomorphic", paths[0], TREE_A)[1].strip() == "isomorphic"


def test_validate_exit_codes(capsys, tmp_path):
    code, out, _ = run(capsys, "validate", "--braid", "1 2 1 2 1")
    assert code == EXIT_OK and json.loads(out)["valid"]
    bad = {
        "vertices": [{"id": 1, "rotation": [{"edge": 3, "dir": "fwd"}, {"edge": 1, "dir": "fwd"}]},
                     {"id": 2, "rotation": [{"edge": 1, "dir": "rev"}, {"edge": 2, "dir": "fwd"}]},
                     {"id": 3, "rotation": [{"edge": 2, "dir": "rev"}, {"edge": 3, "dir": "rev"}]}],
        "edges": [{"id": 1, "tail": 1, "head": 2}, {"id": 2, "tail": 2, "head": 3}, {"id": 3, "tail": 1, "head": 3}],
        "outer": {"edge": 1, "dir": "rev"},
    }
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(bad))
    code, out, _ = run(capsys, "validate", str(p))
    assert code == EXIT_INVALID and not json.loads(out)["valid"]
    assert run(capsys, "invariants", str(p))[0] == EXIT_INVALID


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "parse", "1 x 2")[0] == EXIT_USAGE
    assert run(capsys, "move", "reverse-bridge", "--braid", "1 1 1")[0] == EXIT_USAGE
    assert run(capsys, "move", "reverse-bridge", "--braid", "1 2 1 2 1", "--edge", "1")[0] == EXIT_USAGE
    assert run(capsys, "generate", "torus", "2")[0] == EXIT_USAGE
    assert run(capsys, "validate")[0] == EXIT_USAGE
    junk = tmp_path / "junk.json"
    junk.write_text("{}")
    assert run(capsys, "validate", str(junk))[0] == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["census", "--genus", "0"])
    assert exc.value.code == EXIT_USAGE


def test_other_commands(capsys):
    code, out, _ = run(capsys, "parse", "n=4; 1 1")
    assert code == EXIT_OK and json.loads(out)["strands"] == 4
    code, out, _ = run(capsys, "oracle", "1 1 1")
    assert json.loads(out)["genus"] == 1
    code, out, _ = run(capsys, "twist-order", "--braid", "1 1 1")
    assert json.loads(out) == {"twist_order": [1, 2], "verified": True}
    code, out, _ = run(capsys, "surface", "--braid", "1 1 1")
    assert json.loads(out)["boundary_components"] == 1
    code, out, _ = run(capsys, "generate", "torus", "2", "3")
    assert json.loads(out)["standard"] == "1 1 1"
    code, out, _ = run(capsys, "generate", "cycle", "4")
    assert len(json.loads(out)["edges"]) == 4
    code, out, _ = run(capsys, "move", "mutants", "--braid", "1 1 1 2 2 2 1 1 1", "--vertex", "2")
    assert code in (EXIT_OK, EXIT_USAGE)
    code, out, _ = run(capsys, "move", "reverse-all", "--braid", "1 2 1 2 1")
    assert code == EXIT_OK


def test_census_command(capsys, tmp_path):
    out_path = tmp_path / "c.jsonl"
    plot = tmp_path / "c.png"
    code, out, err = run(capsys, "census", "--genus", "2", "--out", str(out_path), "--csv", str(tmp_path / "c.csv"),
                         "--plot", str(plot))
    assert code == EXIT_OK
    assert "---- census summary ----" in err and "genus 2: 5 graph classes, 1 fingerprint classes" in err
    assert len(out_path.read_text().splitlines()) == 6
    assert plot.stat().st_size > 0


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "checkerboard", "linking-graph", "1 1 1"], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["outer"]
