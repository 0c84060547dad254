import subprocess
import sys

import pytest

from rtstdma.cli import main


def parse_kv(text):
    return dict(line.split("=", 1) for line in text.splitlines())


def test_analytic_defaults(capsys):
    assert main(["analytic"]) == 0
    kv = parse_kv(capsys.readouterr().out)
    assert kv["m_max_star"] == "184.615385"
    assert kv["m_max_threshold"] == "184"
    assert kv["t_frame_star_ms"] == "81.25"
    assert kv["load_star"] == "0.923077"


def test_analytic_config(tmp_path, capsys):
    cfg = tmp_path / "a.cfg"
    cfg.write_text("t_frame_ms = 200\nm_max = 100\n")
    assert main(["analytic", "--config", str(cfg)]) == 0
    kv = parse_kv(capsys.readouterr().out)
    assert float(kv["m_max_star"]) == pytest.approx(369.230769, abs=1e-6)


def test_trace(tmp_path, capsys):
    inst = tmp_path / "fig3.txt"
    inst.write_text("n_c=8\n1: 3,5,6\n2: 1,3\n3: 1,4\n4: 6,8\n5: 6,8\n")
    assert main(["trace", str(inst)]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "residual=6,8"


def test_sweep_to_file(tmp_path):
    cfg = tmp_path / "s.cfg"
    cfg.write_text("sweep_values = 10,193\n")
    out = tmp_path / "s.csv"
    assert main(["sweep-mmax", "--config", str(cfg), "--frames", "3", "--seed", "5",
                 "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 5
    assert lines[1].startswith("10,rts_tdma,10,0,3,5,")
    assert lines[3].endswith(",false")


def test_sweep_tframe_stdout(tmp_path, capsys):
    cfg = tmp_path / "t.cfg"
    cfg.write_text("sweep_values = 120\nm_max = 20\n")
    assert main(["sweep-tframe", "--config", str(cfg), "--frames", "2"]) == 0
    assert capsys.readouterr().out.count("\n") == 3


@pytest.mark.parametrize("argv", [
    ["trace", "/nonexistent/instance"],
    ["sweep-mmax", "--config", "/nonexistent/cfg"],
])
def test_errors_exit_nonzero(argv, capsys):
    assert main(argv) != 0
    assert "error" in capsys.readouterr().err


def test_bad_config_value(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("tau_c_ms = -1\n")
    assert main(["sweep-mmax", "--config", str(cfg)]) == 2
    assert "tau_c" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rtstdma", "analytic"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "m_max_star=184.615385" in proc.stdout
