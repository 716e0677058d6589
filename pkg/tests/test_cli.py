"""Command-line interface tests: exit codes, file round trips, determinism."""

import subprocess
import sys

import numpy as np
import pytest

from rdpg_misspec.cli import main
from rdpg_misspec.netio import read_matrix, write_matrix

MINIMAL_CONFIG = """\
model = weighted_dirichlet
n_grid = 60
dims = 5
r = 5
noise = normal:1.0
replicates = 2
base_seed = 11
"""


class TestGenerate:
    def test_sbm_is_deterministic(self, tmp_path, capsys):
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        argv = ["generate", "--model", "sbm", "--n", "50", "--r", "2", "--seed", "7"]
        assert main(argv + ["--out", str(a)]) == 0
        assert main(argv + ["--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_binary_rho_out_of_range_exits_2(self, tmp_path, capsys):
        code = main(
            ["generate", "--model", "binary", "--n", "10", "--r", "2",
             "--rho", "1.5", "--seed", "1", "--out", str(tmp_path / "x.txt")]
        )
        assert code == 2
        assert "rho out of range" in capsys.readouterr().err

    def test_sbm_file_round_trips_bit_exactly(self, tmp_path, capsys):
        out = tmp_path / "net.txt"
        assert main(["generate", "--model", "sbm", "--n", "40", "--r", "3",
                     "--seed", "3", "--out", str(out)]) == 0
        m, kind, symmetric = read_matrix(str(out))
        assert kind == "binary" and symmetric
        rewritten = tmp_path / "net2.txt"
        write_matrix(str(rewritten), m, kind, symmetric)
        assert out.read_bytes() == rewritten.read_bytes()

    def test_grdpg_requires_signature(self, tmp_path, capsys):
        code = main(["generate", "--model", "grdpg", "--n", "10", "--r", "2",
                     "--out", str(tmp_path / "g.txt")])
        assert code == 2


class TestEmbed:
    def test_embedding_written_with_requested_shape(self, tmp_path, capsys):
        net = tmp_path / "net.txt"
        main(["generate", "--model", "weighted", "--n", "30", "--r", "3",
              "--seed", "5", "--out", str(net)])
        out = tmp_path / "coords.txt"
        assert main(["embed", "--in", str(net), "--d", "3", "--out", str(out)]) == 0
        coords, kind, symmetric = read_matrix(str(out))
        assert coords.shape == (30, 3) and kind == "coords" and not symmetric

    def test_nonsymmetric_input_exits_4(self, tmp_path, capsys):
        bad = tmp_path / "bad.txt"
        write_matrix(str(bad), np.array([[0.0, 1.0], [0.0, 0.0]]), "weighted", False)
        assert main(["embed", "--in", str(bad), "--d", "1", "--out", str(tmp_path / "c.txt")]) == 4


class TestExperiment:
    def test_minimal_config_writes_two_row_csv(self, tmp_path, capsys):
        cfg = tmp_path / "exp.cfg"
        cfg.write_text(MINIMAL_CONFIG)
        out = tmp_path / "trials.csv"
        assert main(["experiment", "--config", str(cfg), "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 3  # header + 2 replicates
        assert lines[0].startswith("model,n,d,r,k,noise,gamma,rho,replicate,seed")
        summary = capsys.readouterr().out
        assert summary.startswith("condition mean sem errbar count")

    def test_rerun_is_bit_identical(self, tmp_path, capsys):
        cfg = tmp_path / "exp.cfg"
        cfg.write_text(MINIMAL_CONFIG)
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert main(["experiment", "--config", str(cfg), "--out", str(a)]) == 0
        assert main(["experiment", "--config", str(cfg), "--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_malformed_config_exits_2_with_line(self, tmp_path, capsys):
        cfg = tmp_path / "exp.cfg"
        cfg.write_text("model = weighted_dirichlet\nnonsense\n")
        assert main(["experiment", "--config", str(cfg), "--out", str(tmp_path / "o.csv")]) == 2
        assert "line 2" in capsys.readouterr().err


class TestDiagnosticsCommands:
    def test_semicircle_wigner_sup_error_is_small(self, tmp_path, capsys):
        out = tmp_path / "curve.csv"
        code = main(["semicircle", "--model", "wigner", "--n", "500",
                     "--eta", "1.0", "--seed", "2", "--out", str(out)])
        assert code == 0
        text = capsys.readouterr().out
        sup = float(text.split("sup_error=")[1])
        assert sup < 0.05
        header = out.read_text().splitlines()[0]
        assert header == "E,eta,emp_re,emp_im,ref_re,ref_im,abs_err"

    def test_semicircle_zero_eta_exits_2(self, capsys):
        assert main(["semicircle", "--model", "wigner", "--n", "50", "--eta", "0"]) == 2

    def test_deloc_on_exact_low_rank_exits_3(self, tmp_path, capsys):
        net = tmp_path / "net.txt"
        main(["generate", "--model", "weighted", "--n", "40", "--r", "2",
              "--noise", "zero", "--seed", "5", "--out", str(net)])
        assert main(["deloc", "--in", str(net), "--r", "2", "--window", "3"]) == 3
        assert "degenerate" in capsys.readouterr().err.lower()

    def test_deloc_profile_csv(self, tmp_path, capsys):
        out = tmp_path / "profile.csv"
        code = main(["deloc", "--model", "weighted", "--n", "200", "--r", "5",
                     "--window", "4", "--seed", "8", "--out", str(out)])
        assert code == 0
        assert "scaled_max=" in capsys.readouterr().out
        lines = out.read_text().splitlines()
        assert lines[0] == "position,eigenvalue,max_abs_entry"
        assert len(lines) == 5

    def test_deloc_binary_is_labeled_conjecture_support(self, capsys):
        code = main(["deloc", "--model", "binary", "--n", "150", "--r", "3",
                     "--window", "3", "--seed", "9"])
        assert code == 0
        assert "conjecture support" in capsys.readouterr().out


class TestRate:
    def test_rate_summarizes_existing_csv(self, tmp_path, capsys):
        cfg = tmp_path / "exp.cfg"
        cfg.write_text(MINIMAL_CONFIG.replace("n_grid = 60", "n_grid = 50,70,90"))
        out = tmp_path / "trials.csv"
        main(["experiment", "--config", str(cfg), "--out", str(out)])
        capsys.readouterr()
        assert main(["rate", "--csv", str(out), "--tail-fraction", "1.0"]) == 0
        text = capsys.readouterr().out
        assert "rate model=weighted_dirichlet d=5" in text

    def test_missing_csv_exits_2(self, capsys):
        assert main(["rate", "--csv", "/nonexistent/trials.csv"]) == 2


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "rdpg_misspec.cli", "--help"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "generate" in proc.stdout
