import csv
import io
import json
import subprocess
import sys

import pytest

from fscode.cli import main

CODE = {"q": 2, "m": 9, "h": 3, "n_t": 3, "k": 4, "s": 2}


@pytest.fixture
def files(tmp_path):
    code = tmp_path / "code.json"
    code.write_text(json.dumps(CODE))
    msg = tmp_path / "f.json"
    msg.write_text(json.dumps([11, 22, 33, 44]))
    return tmp_path, code, msg


def test_roundtrip_success(files, capsys):
    _, code, msg = files
    rc = main(["roundtrip", "--config", str(code), "--message", str(msg), "--delta", "0", "--gamma", "2", "--seed", "7"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "result: unique [11, 22, 33, 44]" in out
    d_I = int(out.split("d_I = ")[1].split()[0])
    assert d_I >= 2
    assert "holds" in out


def test_roundtrip_zero_message(files, capsys):
    tmp, code, _ = files
    z = tmp / "z.json"
    z.write_text("[]")
    assert main(["roundtrip", "--config", str(code), "--message", str(z)]) == 0
    assert "result: unique []" in capsys.readouterr().out


def test_roundtrip_list_mode(files, capsys):
    _, code, msg = files
    assert main(["roundtrip", "--config", str(code), "--message", str(msg), "--gamma", "2", "--mode", "list"]) == 0
    assert "result: list of" in capsys.readouterr().out


def test_roundtrip_failure_exit_code(files, capsys):
    _, code, msg = files
    # far beyond the radius the decoder cannot return the sent message
    codes = {main(["roundtrip", "--config", str(code), "--message", str(msg), "--gamma", "6", "--seed", str(s)])
             for s in range(5)}
    assert codes == {2}


def test_malformed_json(files, capsys):
    tmp, code, _ = files
    bad = tmp / "bad.json"
    bad.write_text("{not json")
    assert main(["roundtrip", "--config", str(code), "--message", str(bad)]) == 64
    assert "malformed JSON" in capsys.readouterr().err
    assert main(["roundtrip", "--config", str(tmp / "missing.json"), "--message", str(bad)]) == 64


def test_bad_message_degree(files):
    tmp, code, _ = files
    big = tmp / "big.json"
    big.write_text("[1,2,3,4,5]")
    assert main(["roundtrip", "--config", str(code), "--message", str(big)]) == 1


def test_bounds(files, capsys):
    _, code, _ = files
    assert main(["bounds", "--config", str(code), "--nr", "5", "--tau", "2", "--mu", "1,2,3"]) == 0
    out = capsys.readouterr().out
    assert "mu=1: 1/32 ~ 0.03125" in out
    assert "mu=2: 1/4096 ~ 0.0002441" in out
    assert "mu=3: 1/524288 ~ 1.907e-06" in out
    assert "5.82077e-11" in out
    assert main(["bounds", "--config", str(code), "--nr", "3", "--tau", "0"]) == 0
    assert "ball volume (n_r=3, tau=0): 1" in capsys.readouterr().out


def test_radius(files):
    tmp, _, _ = files
    out = tmp / "fig1.csv"
    assert main(["radius", "--h", "10", "--s", "4", "--mu", "1", "--grid", "0:1:0.01", "--out", str(out)]) == 0
    rows = list(csv.DictReader(io.StringIO(out.read_text())))
    assert len(rows) == 101
    assert float(rows[0]["tau_f"]) == 4
    assert float(rows[20]["tau_f"]) == pytest.approx(2.84571)


def test_simulate(files, capsys):
    tmp, _, _ = files
    cfg = tmp / "sim.json"
    cfg.write_text(json.dumps(dict(CODE, delta=0, gamma=2, mode="unique", mu=2, trials=200, master_seed=1, workers=1)))
    out = tmp / "stats.json"
    csvp = tmp / "stats.csv"
    assert main(["simulate", "--config", str(cfg), "--seed", "99", "--out", str(out), "--csv", str(csvp)]) == 0
    data = json.loads(out.read_text())
    assert data["config"]["master_seed"] == 99
    assert data["stats"]["trials"] == 200
    assert len(csvp.read_text().strip().split("\n")) == 2


def test_simulate_invalid_config(files, capsys):
    tmp, _, _ = files
    cfg = tmp / "sim.json"
    cfg.write_text(json.dumps({"trials": 0}))
    assert main(["simulate", "--config", str(cfg)]) == 1
    assert "ConfigInvalid" in capsys.readouterr().err


def test_module_entry_point(files):
    _, code, msg = files
    p = subprocess.run([sys.executable, "-m", "fscode", "roundtrip", "--config", str(code), "--message", str(msg),
                        "--gamma", "1"], capture_output=True, text=True)
    assert p.returncode == 0, p.stderr
    assert "result: unique" in p.stdout
