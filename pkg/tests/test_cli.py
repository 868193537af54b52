from __future__ import annotations

import json
import subprocess
import sys

from otglab import graph_from_json, shift_graph

RUN = [sys.executable, "-m", "otglab"]


def run_cli(*args, env=None):
    import os

    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run(
        RUN + list(args), capture_output=True, text=True, env=full_env
    )


def test_gen_sh_json_round_trip():
    res = run_cli("gen", "sh", "--r", "2", "--n", "5")
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    assert graph_from_json(doc) == shift_graph(2, 5)


def test_gen_dot_output():
    res = run_cli("gen", "lsh", "--k", "2", "--n", "3", "--format", "dot")
    assert res.returncode == 0
    assert res.stdout.startswith("digraph")
    assert '"(0,1)" -> "(1,2)";' in res.stdout


def test_gen_otg_matches_shift():
    res = run_cli("gen", "otg", "--a", "0,1", "--b", "1,2", "--theta", "4")
    assert res.returncode == 0
    assert graph_from_json(json.loads(res.stdout)) == shift_graph(2, 4)


def test_gen_usage_error():
    res = run_cli("gen", "sh", "--r", "3", "--n", "2")
    assert res.returncode == 2


def test_chi_values():
    res = run_cli("chi", "--r", "2", "--n", "5")
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    assert doc["chi"] == 3
    assert len(doc["witness"]) == 10
    assert doc["nodes_explored"] > 0


def test_chi_k6():
    res = run_cli("chi", "--r", "1", "--n", "6")
    assert json.loads(res.stdout)["chi"] == 6


def test_chi_from_file(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps(shift_graph(2, 8).to_json()))
    res = run_cli("chi", "--input", str(path))
    assert res.returncode == 0
    assert json.loads(res.stdout)["chi"] == 3


def test_chi_budget_exit_code():
    res = run_cli("chi", "--r", "2", "--n", "8", "--budget", "1")
    assert res.returncode == 3
    doc = json.loads(res.stdout)
    assert doc["chi"] is None
    assert doc["lower"] <= doc["upper"]


def test_chi_env_budget():
    res = run_cli("chi", "--r", "2", "--n", "8", env={"OTG_BUDGET": "1"})
    assert res.returncode == 3
    # explicit flag beats the environment
    res2 = run_cli(
        "chi", "--r", "2", "--n", "8", "--budget", "100000", env={"OTG_BUDGET": "1"}
    )
    assert res2.returncode == 0
    assert json.loads(res2.stdout)["chi"] == 3


def test_chi_missing_args():
    assert run_cli("chi").returncode == 2


def test_decompose_report():
    res = run_cli("decompose", "--a", "0,1", "--b", "1,2")
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    assert doc["cover"]["k"] == 2
    assert len(doc["classes"]) == 1


def test_decompose_three_classes():
    res = run_cli("decompose", "--a", "0,2,4", "--b", "1,3,5")
    doc = json.loads(res.stdout)
    assert doc["cover"]["k"] == 1
    assert len(doc["classes"]) == 3


def test_decompose_equal_pair_is_usage_error():
    res = run_cli("decompose", "--a", "0,1", "--b", "0,1")
    assert res.returncode == 2
    assert "differ" in res.stderr


def test_embed_verified():
    res = run_cli("embed", "--a", "0,1", "--b", "1,2", "--N", "4")
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    assert doc["verified"] is True
    assert doc["frame"] == [2, 4, 5, 5]
    assert len(doc["images"]) == 6
    assert doc["cover"]["k"] == 2


def test_embed_clique_pattern():
    res = run_cli("embed", "--a", "0,2", "--b", "3,5", "--N", "5")
    doc = json.loads(res.stdout)
    assert doc["verified"] is True
    assert doc["cover"]["k"] == 1
    assert len(doc["images"]) == 5


def test_embed_equal_pair_errors():
    res = run_cli("embed", "--a", "0,1", "--b", "0,1", "--N", "3")
    assert res.returncode == 2


def test_embed_bad_tuple_syntax():
    res = run_cli("embed", "--a", "0,,1", "--b", "1,2", "--N", "4")
    assert res.returncode == 2


def test_suite_runs_clean():
    res = run_cli("suite", "--seed", "7", "--count", "30")
    assert res.returncode == 0
    assert "failures: 0" in res.stdout


def test_suite_count_zero():
    res = run_cli("suite", "--count", "0")
    assert res.returncode == 0
    assert "cases: 0" in res.stdout


def test_suite_byte_determinism():
    a = run_cli("suite", "--seed", "5", "--count", "25")
    b = run_cli("suite", "--seed", "5", "--count", "25")
    c = run_cli("suite", "--seed", "5", "--count", "25", "--workers", "4")
    assert a.stdout == b.stdout == c.stdout
    aj = run_cli("suite", "--seed", "5", "--count", "25", "--format", "json")
    bj = run_cli("suite", "--seed", "5", "--count", "25", "--format", "json", "--workers", "4")
    assert aj.stdout == bj.stdout


def test_suite_sweep():
    res = run_cli("suite", "--seed", "7", "--count", "20", "--sweep")
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    assert doc["ok"] is True


def test_verify_embedding_document(tmp_path):
    res = run_cli("embed", "--a", "0,1", "--b", "1,2", "--N", "4")
    path = tmp_path / "emb.json"
    path.write_text(res.stdout)
    check = run_cli("verify", str(path))
    assert check.returncode == 0
    assert json.loads(check.stdout)["ok"] is True

    doc = json.loads(res.stdout)
    doc["images"][0]["values"] = doc["images"][1]["values"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    check2 = run_cli("verify", str(bad))
    assert check2.returncode == 1
    assert json.loads(check2.stdout)["ok"] is False


def test_verify_cover_document(tmp_path):
    res = run_cli("decompose", "--a", "0,2,4", "--b", "1,3,5")
    path = tmp_path / "dec.json"
    path.write_text(res.stdout)
    check = run_cli("verify", str(path))
    assert check.returncode == 0


def test_verify_coloring_document(tmp_path):
    g = shift_graph(2, 5)
    chi = run_cli("chi", "--r", "2", "--n", "5")
    witness = json.loads(chi.stdout)["witness"]
    doc = {
        "graph": g.to_json(),
        "coloring": {"palette": max(witness) + 1, "colors": witness},
    }
    path = tmp_path / "col.json"
    path.write_text(json.dumps(doc))
    assert run_cli("verify", str(path)).returncode == 0

    doc["coloring"]["colors"] = [0] * len(witness)
    path.write_text(json.dumps(doc))
    assert run_cli("verify", str(path)).returncode == 1


def test_verify_unknown_document(tmp_path):
    path = tmp_path / "junk.json"
    path.write_text(json.dumps({"what": 1}))
    assert run_cli("verify", str(path)).returncode == 2


def test_verify_missing_file():
    assert run_cli("verify", "/no/such/file.json").returncode == 2


def test_verify_malformed_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert run_cli("verify", str(path)).returncode == 2


def test_unknown_subcommand_is_usage_error():
    assert run_cli("frobnicate").returncode == 2
