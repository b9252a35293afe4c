"""clinchsim: championship scoring rules and the risks they trade off.

A season ruleset faces two design risks pulling in opposite directions.
Concentrate reward at the front and the title tends to be settled early,
leaving "uninteresting" races after the clinch.  Spread reward down the
field and a champion can emerge who never won a single race.  This package
simulates seasons resampled from historical race pools, evaluates them under
arbitrary positional scoring rules, and measures both risks with exact,
reproducible arithmetic.
"""

from .domain import (
    Dataset,
    RaceResult,
    ScoringRule,
    SeasonMetrics,
    SeasonOutcome,
    StandingsRow,
    ValidationError,
)
from .datasets import (
    DatasetError,
    ReferenceRow,
    ValidationReport,
    builtin_dataset,
    load_dataset,
    load_reference,
    validate_against_reference,
)
from .evaluate import champion, clinch_index, score_season, season_metrics
from .montecarlo import (
    DEFAULT_SEED,
    ExperimentConfig,
    ExperimentReport,
    RuleStats,
    run_experiment,
    sweep_races,
)
from .racegen import (
    enumerate_m2_distribution,
    generate_season,
    risk_averse_transform,
    sample_race_m1,
    sample_race_m2,
)
from .rng import RngStream, derive_seed
from .scoring import (
    DEFAULT_RULE_SPECS,
    geometric_rule,
    normalize_to_100,
    parse_rule_spec,
    points_for,
    preset_rule,
)

__version__ = "0.1.0"

__all__ = [
    "Dataset",
    "RaceResult",
    "ScoringRule",
    "SeasonMetrics",
    "SeasonOutcome",
    "StandingsRow",
    "ValidationError",
    "DatasetError",
    "ReferenceRow",
    "ValidationReport",
    "builtin_dataset",
    "load_dataset",
    "load_reference",
    "validate_against_reference",
    "champion",
    "clinch_index",
    "score_season",
    "season_metrics",
    "DEFAULT_SEED",
    "ExperimentConfig",
    "ExperimentReport",
    "RuleStats",
    "run_experiment",
    "sweep_races",
    "enumerate_m2_distribution",
    "generate_season",
    "risk_averse_transform",
    "sample_race_m1",
    "sample_race_m2",
    "RngStream",
    "derive_seed",
    "DEFAULT_RULE_SPECS",
    "geometric_rule",
    "normalize_to_100",
    "parse_rule_spec",
    "points_for",
    "preset_rule",
    "__version__",
]
