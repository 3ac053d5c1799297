import json
import subprocess
import sys
from pathlib import Path

from superorbit.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_partition_ascii(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--algebra", "sl",
                           "--partition", "2|1")
    assert code == 0
    assert "reachable:              yes" in out
    assert "partition criterion:    yes" in out


def test_analyze_json_deterministic(capsys):
    args = ("analyze", "--algebra", "psl", "--partition", "3|3",
            "--format", "json")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    d = json.loads(out1)
    assert d["algebra"] == "psl(3|3)"
    assert d["flags"]["reachable"] is True


def test_analyze_exceptional_orbit(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--algebra", "G3",
                           "--orbit", "x1", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["flags"] == {"reachable": True, "strongly_reachable": True,
                          "panyushev_generated": False,
                          "panyushev_layerwise": False,
                          "e_in_bracket_grade1": True}


def test_analyze_d21_zero_orbit_all_checks(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--algebra", "D21",
                           "--orbit", "0", "--format", "md")
    assert code == 0
    assert out.splitlines()[-1].count("✓") == 3


def test_unknown_orbit_exits_2_with_label_map(capsys):
    code, _out, err = run_cli(capsys, "analyze", "--algebra", "F4",
                              "--orbit", "nope")
    assert code == 2
    assert "valid labels" in err
    assert "E+R(e1,e2)" in err


def test_invalid_osp_partition_exits_2(capsys):
    code, _out, err = run_cli(capsys, "analyze", "--algebra", "osp",
                              "--partition", "2|2")
    assert code == 2
    assert "multiplicity" in err


def test_malformed_partition_exits_2(capsys):
    code, _out, err = run_cli(capsys, "analyze", "--algebra", "sl",
                              "--partition", "oops")
    assert code == 2


def test_tables_match_goldens(tmp_path, capsys):
    code, _out, _ = run_cli(capsys, "tables", "--alpha", "symbolic",
                            "--out", str(tmp_path))
    assert code == 0
    for name in ("table_d21.md", "table_g3.md", "table_f4.md"):
        assert (tmp_path / name).read_bytes() == (GOLDEN / name).read_bytes()


def test_enumerate_markdown(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--family", "psl", "--max", "2")
    assert code == 0
    rows = [ln for ln in out.splitlines() if ln.startswith("| ")]
    assert len(rows) == 1 + 4  # header plus the four partitions of (2|2)


def test_verify_jacobi_g3(capsys):
    code, out, _ = run_cli(capsys, "verify", "jacobi", "--algebra", "G3")
    assert code == 0
    assert "0 violations" in out


def test_verify_unknown_theorem(capsys):
    code, _out, err = run_cli(capsys, "verify", "not-a-theorem")
    assert code == 2


def test_verify_osp_derived_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "osp-derived", "--max", "5")
    assert code == 0
    assert "0 counterexamples" in out


def test_verify_theorem1_reports_counterexamples(capsys):
    # the falsified partitions are reported and flip the exit code
    code, out, _ = run_cli(capsys, "verify", "theorem1", "--max", "5")
    assert code == 1
    assert "counterexample" in out


def test_cache_round_trip(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("SUPERORBIT_CACHE", str(tmp_path))
    args = ("analyze", "--algebra", "G3", "--orbit", "E", "--format", "json")
    code1, out1, _ = run_cli(capsys, *args)
    assert code1 == 0
    assert (tmp_path / "G3-symbolic.json").exists()
    code2, out2, _ = run_cli(capsys, *args)  # served from cache
    assert out1 == out2


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "superorbit.cli",
                           "analyze", "--algebra", "sl", "--partition", "2|1",
                           "--format", "json"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["flags"]["reachable"] is True
