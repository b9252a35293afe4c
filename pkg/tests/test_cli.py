"""Command-line behaviour: exit codes, formats, determinism."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from clinchsim.cli import main
from clinchsim.datasets import fixture_path

SIM_ARGS = [
    "simulate",
    "--races", "4",
    "--reps", "60",
    "--seed", "7",
    "--threads", "1",
]


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_help_exits_zero():
    for argv in (["--help"], ["simulate", "--help"], ["sweep", "--help"],
                 ["history", "--help"], ["rules", "--help"], ["dataset-validate", "--help"]):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 0


def test_unknown_command_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["simulate", "--no-such-flag"])
    assert info.value.code == 1


def test_simulate_emits_one_csv_row_per_rule(capsys):
    code, out, err = run_cli(capsys, *SIM_ARGS)
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == (
        "rule,dataset,method,races,reps,seed,risk_averse,mean_uninteresting,"
        "se_mean,p_no_win,se_p_no_win,p_ge3,se_p_ge3"
    )
    assert len(lines) == 1 + 8  # default rule set
    first = lines[1].split(",")
    assert first[:7] == ["S1", "standard", "M2", "4", "60", "7", "true"]


def test_simulate_output_is_byte_deterministic(capsys):
    _, first, _ = run_cli(capsys, *SIM_ARGS)
    _, second, _ = run_cli(capsys, *SIM_ARGS)
    assert first == second


def test_csv_and_json_encode_identical_values(capsys):
    _, csv_text, _ = run_cli(capsys, *SIM_ARGS, "--rules", "S4,G:1.3")
    _, json_text, _ = run_cli(capsys, *SIM_ARGS, "--rules", "S4,G:1.3", "--format", "json")
    rows = json.loads(json_text)
    csv_lines = csv_text.strip().split("\n")
    header = csv_lines[0].split(",")
    assert len(rows) == len(csv_lines) - 1 == 2
    for row, line in zip(rows, csv_lines[1:]):
        cells = dict(zip(header, line.split(",")))
        assert cells["rule"] == row["rule"]
        assert cells["risk_averse"] == ("true" if row["risk_averse"] else "false")
        for field in ("mean_uninteresting", "p_no_win", "p_ge3", "se_mean"):
            assert float(cells[field]) == row[field]  # repr round-trips exactly


def test_raw_flag_disables_the_transform(capsys):
    _, out, _ = run_cli(capsys, *SIM_ARGS, "--raw", "--rules", "S4")
    line = out.strip().split("\n")[1].split(",")
    assert line[6] == "false"
    # Without the transform the reference champion keeps real wins, so the
    # no-win probability collapses.
    assert float(line[9]) < 0.02


def test_simulate_rejects_bad_values(capsys):
    code, _, err = run_cli(capsys, *SIM_ARGS[:2], "0")
    assert code == 1
    code, _, err = run_cli(capsys, "simulate", "--reps", "0")
    assert code == 1
    code, _, err = run_cli(capsys, "simulate", "--method", "3")
    assert code == 1
    assert "method" in err
    code, _, err = run_cli(capsys, "simulate", "--rules", "S7")
    assert code == 1


def test_simulate_missing_dataset_is_a_data_error(capsys):
    code, _, err = run_cli(capsys, "simulate", "--dataset", "nowhere.csv", "--reps", "5")
    assert code == 2
    assert "data error" in err


def test_out_writes_the_file_instead_of_stdout(tmp_path, capsys):
    target = tmp_path / "report.csv"
    code, out, _ = run_cli(capsys, *SIM_ARGS, "--rules", "S4", "--out", str(target))
    assert code == 0
    assert out == ""
    text = target.read_text(encoding="utf-8")
    assert text.startswith("rule,")
    assert text.endswith("\n")


def test_sweep_concatenates_rows_per_length(capsys):
    code, out, _ = run_cli(
        capsys, "sweep", "--races", "3..5", "--reps", "40", "--rules", "S2,S4",
        "--seed", "7",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 1 + 3 * 2
    assert [line.split(",")[3] for line in lines[1:]] == ["3", "3", "4", "4", "5", "5"]
    # Each length runs under its own derived seed, echoed in the row.
    seeds = {line.split(",")[5] for line in lines[1:]}
    assert len(seeds) == 3


def test_sweep_range_syntax_errors(capsys):
    code, _, err = run_cli(capsys, "sweep", "--races", "5")
    assert code == 1
    assert "3..20" in err
    code, _, _ = run_cli(capsys, "sweep", "--races", "9..6")
    assert code == 1


def test_history_of_a_bundled_fixture(capsys):
    code, out, _ = run_cli(capsys, "history", "--fixture", "f1-2002", "--rule", "S2")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "season,rule,driver,points,wins,is_champion,clinch_index"
    top = lines[1].split(",")
    assert top == ["2002", "S2", "1", "144", "11", "true", "11"]
    runner = lines[2].split(",")
    assert runner[3] == "77"
    assert runner[5] == "false"


def test_history_flag_validation(capsys, tmp_path):
    code, _, _ = run_cli(capsys, "history")
    assert code == 1
    code, _, _ = run_cli(
        capsys, "history", "--fixture", "f1-2002", "--data", str(tmp_path / "x.csv")
    )
    assert code == 1
    code, _, err = run_cli(capsys, "history", "--fixture", "f1-1234")
    assert code == 2
    assert "unknown fixture" in err


def test_history_needs_a_season_pick_on_multi_season_data(capsys):
    path = fixture_path("standard")
    code, _, err = run_cli(capsys, "history", "--data", str(path))
    assert code == 1
    assert "--season" in err
    code, out, _ = run_cli(capsys, "history", "--data", str(path), "--season", "2016")
    assert code == 0
    assert out.strip().split("\n")[1].split(",")[6] == "21"
    code, _, err = run_cli(capsys, "history", "--data", str(path), "--season", "1999")
    assert code == 2


def test_rules_table_shows_exact_and_float_scores(capsys):
    code, out, _ = run_cli(capsys, "rules", "--show", "S2", "--show", "G:1")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "rule,place,score,exact"
    assert len(lines) == 1 + 10 + 10
    assert lines[1].split(",") == ["S2", "1", "10.0", "10"]
    assert lines[11].split(",") == ["G:1", "1", "10.0", "10"]


def test_rules_normalized_column(capsys):
    code, out, _ = run_cli(capsys, "rules", "--show", "S4", "--normalized")
    lines = out.strip().split("\n")
    assert lines[0].endswith(",normalized,normalized_exact")
    row = lines[2].split(",")  # second place
    assert row[4] == "72.0"
    assert row[5] == "72"


def test_rules_requires_a_spec(capsys):
    code, _, _ = run_cli(capsys, "rules")
    assert code == 1


def test_dataset_validate_passes_on_bundled_pools(capsys):
    for name in ("standard", "small_margin"):
        code, out, err = run_cli(capsys, "dataset-validate", "--dataset", name)
        assert code == 0, err
        assert "false" not in out.split("\n")[0]


def test_dataset_validate_reports_mismatches(capsys, tmp_path):
    source = fixture_path("standard").read_text(encoding="utf-8").splitlines()
    kept = [line for line in source if not line.startswith("2016,21,")]
    damaged = tmp_path / "damaged.csv"
    damaged.write_text("\n".join(kept) + "\n", encoding="utf-8")
    code, out, err = run_cli(capsys, "dataset-validate", "--dataset", str(damaged))
    assert code == 1
    assert "races: expected 21, got 20" in err
    assert "2016,races,21,20,true,false" in out


def test_dataset_validate_load_failure(capsys, tmp_path):
    code, _, err = run_cli(capsys, "dataset-validate", "--dataset", str(tmp_path / "no.csv"))
    assert code == 2


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "clinchsim", "rules", "--show", "S1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("rule,place,score,exact")
