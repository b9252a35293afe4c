"""Experiment orchestration: engines, threading, seeds, and aggregates."""

from __future__ import annotations

from dataclasses import replace

import pytest

from clinchsim.domain import ValidationError
from clinchsim.montecarlo import (
    DEFAULT_SEED,
    ExperimentConfig,
    active_engine_name,
    compiled_available,
    run_experiment,
    sweep_races,
)
from clinchsim.rng import derive_seed

SMALL = ExperimentConfig(
    dataset="standard",
    method="M2",
    races_n=5,
    replications=200,
    rules=("S2", "S4", "G:1.3"),
)


def test_default_seed_is_the_documented_constant():
    assert DEFAULT_SEED == 1950
    assert ExperimentConfig(dataset="standard", method="M1", races_n=3).master_seed == 1950


def test_config_validation():
    with pytest.raises(ValidationError):
        ExperimentConfig(dataset="standard", method="M3", races_n=5)
    with pytest.raises(ValidationError):
        ExperimentConfig(dataset="standard", method="M1", races_n=0)
    with pytest.raises(ValidationError):
        ExperimentConfig(dataset="standard", method="M1", races_n=5, replications=0)
    with pytest.raises(ValidationError):
        ExperimentConfig(dataset="standard", method="M1", races_n=5, rules=())
    with pytest.raises(ValidationError):
        ExperimentConfig(dataset="standard", method="M1", races_n=5, threads=0)


def test_identical_configs_reproduce_bitwise():
    first = run_experiment(SMALL)
    second = run_experiment(SMALL)
    assert first.per_rule == second.per_rule


def test_report_shape_and_ranges():
    report = run_experiment(SMALL)
    assert [s.rule for s in report.per_rule] == ["S2", "S4", "G:1.3"]
    for stats in report.per_rule:
        assert 0.0 <= stats.mean_uninteresting <= SMALL.races_n - 1
        for p in (stats.p_champion_no_win, stats.p_uninteresting_ge3):
            assert 0.0 <= p <= 1.0
        for se in (stats.se_mean_uninteresting, stats.se_p_no_win, stats.se_ge3):
            assert se >= 0.0
    assert report.stats_for("S4") is report.per_rule[1]
    with pytest.raises(KeyError):
        report.stats_for("S1")


def test_single_replication_has_zero_standard_errors():
    report = run_experiment(replace(SMALL, replications=1))
    stats = report.per_rule[0]
    assert stats.se_mean_uninteresting == 0.0
    # A one-sample proportion is 0 or 1, so its plug-in error is 0 as well.
    assert stats.se_p_no_win == 0.0
    assert stats.se_ge3 == 0.0


@pytest.mark.skipif(not compiled_available(), reason="compiled kernel not built")
def test_engines_agree_bitwise(monkeypatch):
    configs = [
        SMALL,
        replace(SMALL, dataset="small_margin", method="M1"),
        replace(SMALL, risk_averse=False),
    ]
    for config in configs:
        monkeypatch.delenv("CLINCHSIM_FORCE_PYTHON", raising=False)
        compiled = run_experiment(config)
        assert compiled.engine == "compiled"
        monkeypatch.setenv("CLINCHSIM_FORCE_PYTHON", "1")
        python = run_experiment(config)
        assert python.engine == "python"
        assert compiled.per_rule == python.per_rule


def test_thread_count_never_changes_results():
    reports = [
        run_experiment(replace(SMALL, replications=400, threads=t)) for t in (1, 3)
    ]
    assert reports[0].per_rule == reports[1].per_rule


@pytest.mark.skipif(not compiled_available(), reason="compiled kernel not built")
def test_huge_scores_fall_back_to_exact_arithmetic(monkeypatch):
    monkeypatch.delenv("CLINCHSIM_FORCE_PYTHON", raising=False)
    # int64 accumulation would overflow, so the run must route to the
    # unbounded-integer engine on its own.
    huge = replace(SMALL, replications=20, rules=(f"V:{2**61},1",))
    report = run_experiment(huge)
    assert report.engine == "python"


def test_engine_name_reflects_the_environment(monkeypatch):
    monkeypatch.setenv("CLINCHSIM_FORCE_PYTHON", "1")
    assert active_engine_name() == "python"
    monkeypatch.delenv("CLINCHSIM_FORCE_PYTHON")
    expected = "compiled" if compiled_available() else "python"
    assert active_engine_name() == expected


def test_sweep_derives_documented_per_length_seeds():
    config = replace(SMALL, replications=100)
    reports = sweep_races(config, [3, 4])
    assert [r.config.races_n for r in reports] == [3, 4]
    for report in reports:
        assert report.config.master_seed == derive_seed(config.master_seed, report.config.races_n)

    # The echoed seed regenerates any single row without the sweep.
    rerun = run_experiment(
        replace(config, races_n=4, master_seed=derive_seed(config.master_seed, 4))
    )
    assert rerun.per_rule == reports[1].per_rule


def test_sweep_rejects_bad_ranges():
    with pytest.raises(ValidationError):
        sweep_races(SMALL, [])
    with pytest.raises(ValidationError):
        sweep_races(SMALL, [2])
    with pytest.raises(ValidationError):
        sweep_races(SMALL, [31])
