import json
import subprocess
import sys

import numpy as np
import pytest

from jfrt import cli
from jfrt.errors import ConvergenceFailure
from jfrt.experiments.io import read_signal_csv


@pytest.fixture
def smooth(tmp_path):
    prefix = tmp_path / "sm"
    assert cli.main(["synth", "--kind", "smooth", "--n", "10", "--t", "16", "--seed", "2",
                     "--out-prefix", str(prefix)]) == 0
    return prefix


def test_parse_grid():
    assert cli.parse_grid("0.9:1.1:0.05") == [0.9, 0.95, 1.0, 1.05, 1.1]
    assert cli.parse_grid("0,0.5, 1") == [0.0, 0.5, 1.0]
    assert cli.parse_grid("2:2:1") == [2.0]
    with pytest.raises(Exception):
        cli.parse_grid("1:0:0.1")


def test_transform_round_trip(tmp_path, smooth):
    fwd, back = tmp_path / "y.csv", tmp_path / "x.csv"
    args = ["--alpha", "0.905", "--beta", "1.2"]
    assert cli.main(["transform", "--signal", f"{smooth}_signal.csv", "--graph", f"{smooth}_edges.csv",
                     "--out", str(fwd), *args]) == 0
    assert cli.main(["transform", "--signal", str(fwd), "--graph", f"knn:5:{smooth}_coords.csv",
                     "--inverse", "--out", str(back), *args]) == 0
    X = read_signal_csv(f"{smooth}_signal.csv")
    assert np.linalg.norm(read_signal_csv(back) - X) <= 1e-8 * np.linalg.norm(X)


def test_denoise_sweep_outputs(tmp_path, smooth):
    out = tmp_path / "sweep.csv"
    assert cli.main(["denoise-sweep", "--signal", f"{smooth}_signal.csv", "--coords", f"{smooth}_coords.csv",
                     "--alpha-grid", "0.9:1.1:0.1", "--beta-grid", "1", "--tau-g-grid", "0,1",
                     "--tau-t-grid", "0.5", "--snr-db", "0", "--seed", "4", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "alpha,beta,tau_g,tau_t,mse_percent" and len(lines) == 7
    summary = json.loads(out.with_suffix(".json").read_text())
    assert summary["grid_shape"] == [3, 1, 2, 1]
    assert summary["argmin"]["mse_percent"] == min(float(l.split(",")[-1]) for l in lines[1:])


def test_cluster_outputs(tmp_path):
    prefix = tmp_path / "mo"
    assert cli.main(["synth", "--kind", "motion3", "--n", "10", "--t", "150", "--seed", "1",
                     "--out-prefix", str(prefix)]) == 0
    out = tmp_path / "c.csv"
    assert cli.main(["cluster", "--signals", f"{prefix}_x.csv", f"{prefix}_y.csv", f"{prefix}_z.csv",
                     "--labels", f"{prefix}_labels.csv", "--coords", f"{prefix}_coords.csv",
                     "--alpha-grid", "1", "--beta-grid", "0,1", "--repeats", "2", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "method,alpha,beta,repeat,accuracy" and len(lines) == 1 + 3 * 2
    assert json.loads(out.with_suffix(".json").read_text())["repeats"] == 2


def test_validation_exit_code(tmp_path, smooth, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("1,2\nx,3\n")
    code = cli.main(["transform", "--signal", str(bad), "--graph", f"{smooth}_edges.csv",
                     "--alpha", "1", "--beta", "1", "--out", str(tmp_path / "o.csv")])
    assert code == 2
    assert "bad.csv:2:" in capsys.readouterr().err
    code = cli.main(["transform", "--signal", f"{smooth}_signal.csv", "--graph", "knn:x:c.csv",
                     "--alpha", "1", "--beta", "1", "--out", str(tmp_path / "o.csv")])
    assert code == 2


def test_numerical_exit_code(tmp_path, smooth, monkeypatch):
    def fail(*_):
        raise ConvergenceFailure("eigensolver did not converge")

    monkeypatch.setattr(cli, "gft_from_laplacian", fail)
    code = cli.main(["transform", "--signal", f"{smooth}_signal.csv", "--graph", f"{smooth}_edges.csv",
                     "--alpha", "1", "--beta", "1", "--out", str(tmp_path / "o.csv")])
    assert code == 3


def test_argparse_errors_exit_2():
    proc = subprocess.run([sys.executable, "-m", "jfrt", "denoise-sweep", "--alpha-grid", "1:0:1"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
