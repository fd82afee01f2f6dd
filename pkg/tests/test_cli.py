import json
import subprocess
import sys

import pytest

from kcore.cli import main


def run(args, capsys):
    code = main([str(a) for a in args])
    out, err = capsys.readouterr()
    return code, out, err


def test_transform_reference(data_dir, capsys):
    code, out, _ = run(["transform", "--game", data_dir / "reference_game.json"], capsys)
    assert code == 0
    assert "12   2/5 (0.4)" in out
    assert "monotone: yes" in out and "infinitely monotone: yes" in out
    assert "additivity degree: 3" in out


def test_transform_json_unanimity(data_dir, capsys):
    code, out, _ = run(["transform", "--game", data_dir / "unanimity_n3.json", "--format", "json"], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["additivity_degree"] == 3
    assert rep["monotone"] and all(rep["k_monotone"].values()) and rep["infinitely_monotone"]
    assert rep["game"]["1,2"] == "0" and rep["mobius"]["1,2,3"] == "1"


def test_transform_rejects_nonzero_empty_set(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "entries": {"": "1", "1": "1"}}')
    code, _, err = run(["transform", "--game", bad], capsys)
    assert code == 2 and "empty set" in err


def test_transform_malformed(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2,\n "entries": {"1": 0.5,}}')
    code, _, err = run(["transform", "--game", bad], capsys)
    assert code == 2 and "line 2" in err
    code, _, err = run(["transform", "--game", tmp_path / "missing.json"], capsys)
    assert code == 2


def test_orders_all(capsys):
    code, out, _ = run(["orders", "--n", 3, "--k", 2], capsys)
    assert code == 0 and len(out.splitlines()) == 720


def test_orders_truncation_flagged(capsys):
    code, out, err = run(["orders", "--n", 4, "--k", 2, "--filter", "strongly_compatible", "--cap", 100], capsys)
    assert code == 0 and len(out.splitlines()) == 100
    assert "truncated" in err
    code, out, _ = run(["orders", "--n", 4, "--k", 2, "--filter", "strongly_compatible", "--cap", 100,
                        "--format", "json"], capsys)
    assert json.loads(out)["truncated"] is True


def test_orders_guard(capsys):
    code, _, err = run(["orders", "--n", 4, "--k", 2], capsys)
    assert code == 3 and "guard" in err


def test_orders_atlas_dumps(data_dir, capsys):
    code, out, _ = run(["orders", "--atlas", "--order", data_dir / "order_n3_example.json",
                        "--order", data_dir / "order_n4_lattice.json"], capsys)
    assert code == 0
    assert "A(3) = {3, 13, 23, 123}  [lattice, top 123]" in out
    assert "A(13) = ∅  [empty]" in out
    assert "A(34) = {34, 134, 234, 1234}" in out
    code, out, _ = run(["orders", "--atlas", "--order", data_dir / "order_n4_nonlattice.json"], capsys)
    assert "A(23) = {23, 123, 234}  [not a lattice]" in out


def test_orders_needs_arguments(capsys):
    code, _, err = run(["orders"], capsys)
    assert code == 2


def test_vertices_theorem(data_dir, capsys):
    code, out, _ = run(["vertices", "--game", data_dir / "reference_game.json", "--k", 2,
                        "--mode", "theorem-n-1", "--format", "json"], capsys)
    rep = json.loads(out)
    assert code == 0 and len(rep["vertices"]) == 3
    assert all(v["vertex"] and v["rank"] == 6 for v in rep["vertices"])
    assert rep["vertices"][0]["mobius"]["1,2"] == "3/10"


def test_vertices_theorem_k_mismatch(data_dir, capsys):
    code, _, err = run(["vertices", "--game", data_dir / "reference_game.json", "--k", 1, "--mode", "theorem-n-1"], capsys)
    assert code == 2 and "k = n-1" in err


def test_vertices_compare_convex(data_dir, capsys):
    code, out, _ = run(["vertices", "--game", data_dir / "convex_n3.json", "--k", 1,
                        "--mode", "orders", "--compare", "oracle", "--format", "json"], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["compare"]["identical"] is True
    # strictly supermodular, so the six marginal vectors are distinct
    assert len(rep["vertices"]) == 6


def test_vertices_oracle_reports_ray(data_dir, capsys):
    code, out, _ = run(["vertices", "--game", data_dir / "reference_game.json", "--k", 2,
                        "--mode", "oracle", "--variant", "plain", "--format", "json"], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["feasible"] and not rep["bounded"]
    # (1,0,0,-1,0,0) over 1,2,3,12,13,23
    assert {"1": "1", "2": "0", "1,2": "-1", "3": "0", "1,3": "0", "2,3": "0"} in rep["rays"]
    code, out, _ = run(["vertices", "--game", data_dir / "reference_game.json", "--k", 2,
                        "--mode", "oracle", "--variant", "infinite"], capsys)
    assert "bounded: yes" in out


def test_vertices_orders_variant_conflict(data_dir, capsys):
    code, _, _ = run(["vertices", "--game", data_dir / "reference_game.json", "--k", 2,
                      "--mode", "orders", "--variant", "monotone"], capsys)
    assert code == 2


def test_out_file_and_determinism(data_dir, tmp_path, capsys):
    paths = [tmp_path / "a.txt", tmp_path / "b.txt"]
    for p in paths:
        code, out, _ = run(["vertices", "--game", data_dir / "reference_game.json", "--k", 2,
                            "--mode", "oracle", "--out", p], capsys)
        assert code == 0 and out == ""
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_random_seeded(tmp_path, capsys):
    outs = []
    for _ in range(2):
        code, out, _ = run(["random", "--n", 3, "--seed", 5, "--kind", "monotone"], capsys)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]
    game = tmp_path / "g.json"
    game.write_text(outs[0])
    code, out, _ = run(["transform", "--game", game], capsys)
    assert "monotone: yes" in out


@pytest.mark.parametrize("args", [["--help"], ["vertices", "--help"]])
def test_help(args, capsys):
    with pytest.raises(SystemExit) as exc:
        main(args)
    assert exc.value.code == 0


def test_module_entry_point(data_dir):
    res = subprocess.run([sys.executable, "-m", "kcore.cli", "transform", "--game",
                          str(data_dir / "majority_n3.json")], capture_output=True, text=True)
    assert res.returncode == 0
    assert "2-monotone: no" in res.stdout
