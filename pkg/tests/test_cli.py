import json
import subprocess
import sys

import pytest

from tractlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_axioms_sign(capsys):
    code, out, _ = run(capsys, "axioms", "--tract", "builtin:sign", "--bound", "5", "--check", "SF")
    assert code == 0
    assert out == "SF holds (bound 5)\n"


def test_axioms_product_fails_with_witness(capsys):
    code, out, _ = run(capsys, "axioms", "--tract", "builtin:sign_product", "--bound", "5",
                       "--check", "SF")
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == ("SF FAILS (bound 5); witness: alpha=(1,1), beta=(1,-1), "
                        "gamma=(1,-1) + (-1,-1)")
    assert lines[1] == ("  least witness with |alpha+beta| >= 4: alpha=(1,1) + (1,1), "
                        "beta=(1,-1) + (1,-1), gamma=(1,-1) + (-1,-1)")


def test_axioms_json_shape(capsys):
    code, data = run_json(capsys, "axioms", "--tract", "builtin:p_prime", "--bound", "4")
    assert code == 1
    assert data["verb"] == "axioms" and data["bound"] == 4 and data["ok"] is False
    names = [r["axiom"] for r in data["reports"]]
    assert names == ["T1", "T2", "T3", "I", "F", "SF", "MSF"]
    sf = data["reports"][5]
    assert sf["witness"] == {"alpha": [["1", 1]], "beta": [["1", 2]], "gamma": [["-1", 2]]}
    assert set(sf) >= {"axiom", "holds", "bound_checked", "witness"}


def test_closure_and_sigma(capsys):
    code, data = run_json(capsys, "closure", "--tract", "builtin:sign_product", "--bound", "5")
    assert code == 0
    assert data["by_norm"] == {"0": 1, "2": 2, "3": 8, "4": 19, "5": 36}
    assert data["equals_tract"] is True and data["size"] == 66
    code, data = run_json(capsys, "sigma", "--tract", "builtin:sign_product", "--bound", "6")
    assert code == 0 and data["stages"] == [126, 174, 186] and not data["fixed_point_is_input"]


def test_hyperfield_verbs(capsys):
    code, data = run_json(capsys, "stringent", "--hyperfield", "builtin:sign_product", "--bound", "4")
    assert code == 0 and data["stringent"] is False and data["SF"] is False
    code, out, _ = run(capsys, "hap", "--hyperfield", "builtin:sign", "--bound", "5")
    assert code == 0 and out.startswith("HAP holds (bound 5)")


def test_certificate_verbs(capsys):
    code, data = run_json(capsys, "strong-perfect", "--fmatroid", "builtin:u23_sign")
    assert code == 0
    assert data["verdict"] == "certified" and data["pairs_checked"] == 9840
    assert data["coord_bound"] == 2 and data["oracle_bound"] == 12
    code, out, _ = run(capsys, "perfect", "--fmatroid", "builtin:u23_gf3")
    assert code == 0
    assert out == ("perfection of u23_gf3: certified (coord bound 1, 3 vectors, 9 covectors, "
                   "27 pairs, oracle bound 3)\n")


def test_wedge_and_minors(capsys):
    code, out, _ = run(capsys, "wedge-check", "--fmatroid", "builtin:u12_sign")
    assert code == 0 and out == "wedge holds (bound 2)\n"
    code, out, _ = run(capsys, "minors-check", "--fmatroid", "builtin:u12_gf2", "--coord-bound", "1")
    assert code == 0 and out == "minors holds (bound 1)\nsupp holds (bound 1)\n"


def test_broken_signature_file(tmp_path, capsys):
    obj = {"tract": "builtin:sign", "ground": [1, 2],
           "circuits": [{"values": {"1": "1", "2": "1"}}],
           "cocircuits": [{"values": {"1": "1", "2": "1"}}]}
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(obj))
    for verb in ("perfect", "strong-perfect", "wedge-check", "minors-check"):
        code, out, _ = run(capsys, verb, "--fmatroid", str(path))
        assert code == 1
        assert out.startswith("DP1-DP3 FAILS; witness: axiom=DP3")


@pytest.mark.parametrize("argv", [
    ["axioms", "--tract", "builtin:sign", "--check", "XYZ"],
    ["axioms", "--tract", "builtin:nope"],
    ["axioms", "--tract", "builtin:sign", "--bound", "0"],
    ["axioms"],
    ["closure", "--tract", "builtin:sign", "--bound", "2"],
    ["perfect", "--fmatroid", "builtin:nope"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2


def test_bounded_oracle_exits_2(tmp_path, capsys):
    obj = {"elements": ["0", "1", "-1"],
           "mul": [["0", "0", "0"], ["0", "1", "-1"], ["0", "-1", "1"]],
           "null": {"kind": "explicit", "bound": 3, "sums": [[], ["1", "-1"], ["1", "1", "-1"]]}}
    path = tmp_path / "t.json"
    path.write_text(json.dumps(obj))
    assert main(["axioms", "--tract", str(path), "--bound", "3"]) == 0
    code, _, err = run(capsys, "axioms", "--tract", str(path), "--bound", "5")
    assert code == 2 and "exceeds oracle bound 3" in err


def test_malformed_json_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("[1, 2")
    code, out, err = run(capsys, "axioms", "--tract", str(path))
    assert code == 2 and out == "" and "malformed JSON" in err


def test_jobs_flag_and_env(monkeypatch, capsys):
    argv = ["axioms", "--tract", "builtin:sign_product", "--bound", "4", "--format", "json"]
    main(argv)
    base = capsys.readouterr().out
    main(argv + ["--jobs", "4"])
    assert capsys.readouterr().out == base
    monkeypatch.setenv("TRACTLAB_JOBS", "3")
    main(argv)
    assert capsys.readouterr().out == base
    monkeypatch.setenv("TRACTLAB_JOBS", "zero")
    assert main(argv) == 2


def test_output_is_byte_deterministic():
    cmd = [sys.executable, "-m", "tractlab", "axioms", "--tract", "builtin:sign_product",
           "--bound", "4", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=False)
    b = subprocess.run(cmd, capture_output=True, check=False, env={"PYTHONHASHSEED": "123",
                                                                   **_env()})
    assert a.returncode == b.returncode == 1
    assert a.stdout == b.stdout and a.stdout


def _env():
    import os
    return {k: v for k, v in os.environ.items() if k != "PYTHONHASHSEED"}


def test_demo(capsys):
    code, out, _ = run(capsys, "demo")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 14 and all(ln.startswith("PASS") for ln in lines[:13])
    assert lines[-1] == "13/13 criteria pass"
