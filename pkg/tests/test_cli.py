import json

import pytest

from dmsteer.cli import EXIT_CHECK_FAILED, EXIT_CONFIG, EXIT_IO, EXIT_OK, main
from dmsteer.sweep import read_records


def test_sweep_to_file(tmp_path):
    out = tmp_path / "s.csv"
    rc = main(["sweep", "--pair", "2,4", "--pair", "1,2", "--dx", "0.05,0.1", "--t-range", "0:10:11", "--out", str(out)])
    assert rc == EXIT_OK
    with open(out, encoding="utf-8") as fh:
        recs = read_records(fh)
    assert len(recs) == 2 * 2 * 11
    meta = json.loads((tmp_path / "s.csv.meta.json").read_text())
    assert meta["pairs"] == ["2-4", "1-2"] and meta["t_range"] == [0.0, 10.0, 11]


def test_sweep_dx_range_jsonl_with_discrepancy(tmp_path):
    out = tmp_path / "s.jsonl"
    rc = main(["sweep", "--pair", "2,3", "--dx-range", "0.1:1:4", "--t-range", "0:3:5", "--format", "jsonl",
               "--out", str(out), "--discrepancy"])
    assert rc == EXIT_OK
    with open(out, encoding="utf-8") as fh:
        assert len(read_records(fh, "jsonl")) == 20
    lines = (tmp_path / "s.jsonl.discrepancy.jsonl").read_text().splitlines()
    assert len(lines) == 20
    assert set(json.loads(lines[0])) == {"pair", "dx", "t", "trace_defect", "max_entry_delta", "min_eigenvalue"}


def test_sweep_to_stdout(capsys):
    assert main(["sweep", "--pair", "1-2", "--dx", "1", "--t-range", "0:1:3"]) == EXIT_OK
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "pair,dx,t,h_x,h_y,h_z,i_s,negativity,steerable"
    assert len(out) == 4


def test_stdout_discrepancy_block(capsys):
    assert main(["sweep", "--pair", "2,4", "--dx", "1", "--t-range", "0:1:3", "--discrepancy"]) == EXIT_OK
    blocks = capsys.readouterr().out.split("\n\n")
    assert len(blocks) == 2
    assert blocks[1].startswith("pair,dx,t,trace_defect")


def test_preset(tmp_path):
    out = tmp_path / "f5.csv"
    assert main(["preset", "fig5", "--out", str(out)]) == EXIT_OK
    with open(out, encoding="utf-8") as fh:
        assert len(read_records(fh)) == 3 * 3001


@pytest.mark.parametrize(
    "argv",
    [
        ["sweep", "--pair", "2,3", "--t-range", "0:1:3"],
        ["sweep", "--pair", "2,3", "--dx", "1", "--dx-range", "0:1:2", "--t-range", "0:1:3"],
        ["sweep", "--pair", "2,3", "--dx", "1", "--t-range", "0:1"],
        ["sweep", "--pair", "2,3", "--dx", "x", "--t-range", "0:1:3"],
        ["sweep", "--pair", "3,2", "--dx", "1", "--t-range", "0:1:3"],
        ["sweep", "--pair", "2,3", "--dx", "1", "--t-range", "1:0:3"],
        ["preset", "fig7"],
        ["frobnicate"],
    ],
)
def test_config_errors_exit_2(argv, capsys):
    assert main(argv) == EXIT_CONFIG


def test_io_error_exit_3(tmp_path):
    out = tmp_path / "missing" / "dir" / "s.csv"
    assert main(["sweep", "--pair", "2,3", "--dx", "1", "--t-range", "0:1:3", "--out", str(out)]) == EXIT_IO


def test_check_passes(capsys):
    assert main(["check"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines and all(line.startswith("PASS") for line in lines)


def test_check_reports_failure(monkeypatch, capsys):
    from dmsteer import checks

    failing = checks.CheckResult("forced", False, "injected")
    monkeypatch.setattr(checks, "SUITE", checks.SUITE + (lambda: failing,))
    assert main(["check"]) == EXIT_CHECK_FAILED
    assert "FAIL  forced: injected" in capsys.readouterr().out
