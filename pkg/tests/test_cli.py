import io
import json
import subprocess
import sys

import pytest

from cyclebound import BooleanNetwork, build_family
from cyclebound.cli import main
from cyclebound.families import nonspecial_example


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def example_file(tmp_path):
    p = tmp_path / "example.txt"
    p.write_text(nonspecial_example().to_text())
    return str(p)


def test_generate_then_params(capsys, monkeypatch):
    _, text, _ = run(capsys, "generate", "kstar", "4")
    code, out, _ = run(capsys, "params", "-", stdin=text, monkeypatch=monkeypatch)
    assert code == 0
    assert out.splitlines()[0].startswith("tau=4 nu=4 nu*=1")


def test_params_json_example(capsys, example_file):
    code, out, _ = run(capsys, "params", example_file, "--json")
    data = json.loads(out)
    assert code == 0 and data["schema"] == 1
    assert data["nu"] == 3 and data["nu_star"] == 2 and data["tau"] == 3
    assert len(data["special_packing"]) == 2


def test_tprime_pipeline(capsys, monkeypatch):
    _, g, _ = run(capsys, "generate", "tprime", "4")
    _, net, err = run(capsys, "construct", "tprime", "-", stdin=g, monkeypatch=monkeypatch)
    assert "9 fixed points" in err
    f = BooleanNetwork.from_json(net)
    assert f.n == 4
    code, out, _ = run(capsys, "fixpoints", "-", "--json", stdin=net, monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["count"] == 9


def test_construct_with_packing(capsys, example_file):
    code, out, _ = run(capsys, "construct", "special-packing", example_file, "--packing", "1,2,3;4,5")
    assert code == 0
    assert json.loads(out)["construction"]["fixed_points"] >= 4
    code, _, err = run(capsys, "construct", "special-packing", example_file,
                       "--packing", "1,2,3;4,5;6")
    assert code == 2 and json.loads(err)["error"] == "NotSpecialError"


def test_bounds(capsys, example_file):
    code, out, _ = run(capsys, "bounds", example_file, "--json")
    data = json.loads(out)
    assert data["lower"]["best"] >= 4 and data["upper"] >= data["lower"]["best"]


def test_oracle_and_signed(capsys, tmp_path):
    p = tmp_path / "k3.txt"
    p.write_text("3\n" + "".join(f"{u} {v} -1\n" for u in range(3) for v in range(3) if u != v))
    code, out, _ = run(capsys, "oracle", str(p), "--json")
    assert code == 0 and json.loads(out)["phi"] == 3
    code, out, _ = run(capsys, "signed-params", str(p), "--json")
    data = json.loads(out)
    assert data["tau_plus"] == 2 and data["upper_bound"] == 3


def test_verify_random_sweep(capsys):
    code, out, _ = run(capsys, "verify", "--random", "5", "--n", "4", "--seed", "3", "--json")
    data = json.loads(out)
    assert code == 0 and data["ok"] and len(data["reports"]) == 5
    again = run(capsys, "verify", "--random", "5", "--n", "4", "--seed", "3", "--json")[1]
    assert again == out


def test_errors_are_json(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("2\n0 5\n")
    code, _, err = run(capsys, "params", str(bad))
    assert code == 2 and json.loads(err)["error"] == "ValueError"
    code, _, err = run(capsys, "generate", "nope", "3")
    assert code == 2
    code, _, err = run(capsys, "verify")
    assert code == 2


def test_cap_flag(capsys, tmp_path):
    p = tmp_path / "g.txt"
    p.write_text(build_family("loops", 5).to_text())
    code, _, err = run(capsys, "oracle", str(p), "--cap", "3")
    assert code == 2 and json.loads(err)["error"] == "CapExceeded"


def test_console_script_entry_point():
    out = subprocess.run([sys.executable, "-m", "cyclebound.cli", "generate", "cycle", "3"],
                         capture_output=True, text=True, check=True).stdout
    assert out.splitlines()[0] == "3"
