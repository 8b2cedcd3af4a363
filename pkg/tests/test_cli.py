import json
import subprocess
import sys

import pytest

from arbors.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariants_json(capsys):
    code, out, _ = run(capsys, "invariants", "(2 (2) (1) (1))", "--which", "ehrhart,h")
    assert code == 0
    data = json.loads(out)
    assert data["elements"] == 330
    assert data["h"]["coeffs"] == [[1, 1], [18, 1], [81, 1], [130, 1], [81, 1], [18, 1], [1, 1]]
    assert set(data) >= {"ehrhart", "h"} and "zeta" not in data


def test_invariants_text(capsys):
    code, out, _ = run(capsys, "invariants", "(1 (1 (1)))", "--which=m", "--format", "text")
    assert code == 0
    assert "elements: 14" in out


def test_unknown_which_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["invariants", "(1)", "--which", "bogus"])
    assert exc.value.code == 2


def test_bad_arbor_exit_code(capsys):
    code, _, err = run(capsys, "invariants", "(1 (0))")
    assert code == 2
    assert "error" in err


def test_polytope_with_checks(capsys):
    code, out, _ = run(capsys, "polytope", "(1 (1))", "--checks")
    assert code == 0
    data = json.loads(out)
    assert data["vertex_count"] == 4 and data["lattice_points"] == 5
    assert all(r["passed"] for r in data["checks"])


def test_poset_and_volume(capsys):
    code, out, _ = run(capsys, "poset", "(1 (1) (1))")
    assert code == 0 and json.loads(out)["m_triangle_matches_recursion"]
    code, out, _ = run(capsys, "volume", "(2 (2) (1) (1))", "--format", "text")
    assert code == 0 and "83/6" in out


def test_guard_exit_code(capsys):
    code, _, err = run(capsys, "poset", "(2 (2) (1) (1))", "--guard-elements", "50")
    assert code == 2 and "guard" in err


def test_families(capsys):
    for argv in (["families", "fuss", "2", "7", "3"], ["families", "typeb", "3", "2"], ["families", "nc", "B", "4"]):
        code, _, _ = run(capsys, *argv)
        assert code == 0
    code, _, _ = run(capsys, "families", "fuss", "2", "6", "3")
    assert code == 2


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "3")
    assert json.loads(out) == {"n": 3, "count": 5, "arbors": ["(1 (1 (1)))", "(1 (1) (1))", "(1 (2))", "(2 (1))", "(3)"]}


def test_checks(capsys):
    for name in ("golden", "halo", "hochschild"):
        code, out, _ = run(capsys, "check", name, "--max", "5")
        assert code == 0 and json.loads(out)["passed"]
    code, out, _ = run(capsys, "check", "involution", "--max-size", "5")
    assert code == 0 and json.loads(out)["checked"] == 58


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"checks": ["golden"], "format": "text"}))
    code, _, err = run(capsys, "check", "roots", "--config", str(cfg))
    assert code == 2 and "disabled" in err
    code, out, _ = run(capsys, "check", "golden", "--config", str(cfg))
    assert code == 0 and "passed" in out


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "arbors", "enumerate", "2"], capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["count"] == 2
