"""Command-line interface.

Subcommands::

    simulate          run one experiment, one output row per rule
    sweep             run experiments over a range of season lengths
    history           standings, champion, and clinch race for a season file
    rules             show score vectors for rule specs
    dataset-validate  compare a race pool against the reference table

Every command supports ``--format csv|json`` and ``--out FILE``.  Output is
deterministic byte for byte for a fixed command line: seeds default to a
fixed constant, floats are rendered with shortest round-trip precision, and
row order follows the input order.  Exit codes: 0 on success, 1 on usage
errors (including validation mismatches in ``dataset-validate``), 2 on
data loading errors.  Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .datasets import (
    DatasetError,
    fixture_path,
    load_dataset,
    load_reference,
    resolve_dataset,
    validate_against_reference,
)
from .domain import SeasonOutcome, ValidationError, fraction_to_str
from .evaluate import clinch_index, score_season
from .montecarlo import (
    DEFAULT_SEED,
    ExperimentConfig,
    ExperimentReport,
    run_experiment,
    sweep_races,
)
from .scoring import DEFAULT_RULE_SPECS, PRESETS, normalize_to_100, parse_rule_spec

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

REPORT_HEADER = [
    "rule",
    "dataset",
    "method",
    "races",
    "reps",
    "seed",
    "risk_averse",
    "mean_uninteresting",
    "se_mean",
    "p_no_win",
    "se_p_no_win",
    "p_ge3",
    "se_p_ge3",
]


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, Fraction):
        return fraction_to_str(value)
    return str(value)


def _jsonable(value):
    if isinstance(value, Fraction):
        return fraction_to_str(value)
    return value


def _emit(rows: list[dict], header: list[str], fmt: str, out: str | None) -> None:
    if fmt == "json":
        payload = [{key: _jsonable(row[key]) for key in header} for row in rows]
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [",".join(header)]
        for row in rows:
            lines.append(",".join(_cell(row[key]) for key in header))
        text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def split_rule_specs(text: str) -> list[str]:
    """Split a comma-separated rule list, keeping V: vectors intact.

    A bare number continues the preceding V: vector; anything else starts a
    new spec.
    """
    specs: list[str] = []
    for part in (p.strip() for p in text.split(",")):
        if not part:
            continue
        upper = part.upper()
        starts_new = (
            upper in PRESETS or upper.startswith("G:") or upper.startswith("V:")
        )
        if not starts_new and specs and specs[-1].upper().startswith("V:"):
            specs[-1] += "," + part
        else:
            specs.append(part)
    return specs


def report_rows(report: ExperimentReport) -> list[dict]:
    cfg = report.config
    rows = []
    for stats in report.per_rule:
        rows.append(
            {
                "rule": stats.rule,
                "dataset": cfg.dataset,
                "method": cfg.method,
                "races": cfg.races_n,
                "reps": cfg.replications,
                "seed": cfg.master_seed,
                "risk_averse": cfg.risk_averse,
                "mean_uninteresting": stats.mean_uninteresting,
                "se_mean": stats.se_mean_uninteresting,
                "p_no_win": stats.p_champion_no_win,
                "se_p_no_win": stats.se_p_no_win,
                "p_ge3": stats.p_uninteresting_ge3,
                "se_p_ge3": stats.se_ge3,
            }
        )
    return rows


def _parse_method(raw: str) -> str:
    text = raw.strip().upper()
    if text in ("1", "M1"):
        return "M1"
    if text in ("2", "M2"):
        return "M2"
    raise ValidationError(f"method must be 1 or 2, got {raw!r}")


def _add_common_run_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--dataset", default="standard", help="builtin pool name or CSV path")
    sub.add_argument("--method", default="2", help="race generation method: 1 or 2")
    sub.add_argument("--reps", type=int, default=100_000, help="replications per experiment")
    sub.add_argument(
        "--rules",
        default=",".join(DEFAULT_RULE_SPECS),
        help="comma-separated rule specs: S1|S2|S3|S4|M1993|G:<p>|V:<v1,v2,...>",
    )
    sub.add_argument(
        "--seed", type=int, default=DEFAULT_SEED, help=f"master seed (default {DEFAULT_SEED})"
    )
    sub.add_argument(
        "--raw",
        action="store_true",
        help="skip the risk-averse transform (it is applied by default)",
    )
    sub.add_argument("--reference-rule", default="S4", help="rule deciding the transform champion")
    sub.add_argument("--threads", type=int, default=1, help="worker threads")


def _add_output_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--out", default=None, help="write output to a file instead of stdout")


def _build_config(args, races_n: int) -> ExperimentConfig:
    if args.reps < 1:
        raise ValidationError("replications must be >= 1")
    return ExperimentConfig(
        dataset=args.dataset,
        method=_parse_method(args.method),
        races_n=races_n,
        replications=args.reps,
        rules=tuple(split_rule_specs(args.rules)),
        risk_averse=not args.raw,
        reference_rule=args.reference_rule,
        master_seed=args.seed,
        threads=args.threads,
    )


def _cmd_simulate(args) -> int:
    if args.races < 1:
        raise ValidationError("races per season must be >= 1")
    config = _build_config(args, args.races)
    for spec in config.rules:
        parse_rule_spec(spec)
    report = run_experiment(config)
    _emit(report_rows(report), REPORT_HEADER, args.format, args.out)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    match = re.fullmatch(r"(\d+)\.\.(\d+)", args.races.strip())
    if not match:
        raise ValidationError(f"--races expects a range like 3..20, got {args.races!r}")
    lo, hi = int(match.group(1)), int(match.group(2))
    if lo > hi:
        raise ValidationError(f"empty season-length range {args.races!r}")
    config = _build_config(args, races_n=lo)
    for spec in config.rules:
        parse_rule_spec(spec)
    reports = sweep_races(config, range(lo, hi + 1))
    rows = []
    for report in reports:
        rows.extend(report_rows(report))
    _emit(rows, REPORT_HEADER, args.format, args.out)
    return EXIT_OK


def _season_from_dataset(dataset, label: str | None) -> tuple[str, SeasonOutcome]:
    if label is None:
        if len(dataset.seasons) != 1:
            raise ValidationError(
                f"{dataset.name} spans seasons {', '.join(dataset.seasons)}; pick one with --season"
            )
        label = dataset.seasons[0]
    races = [race for race in dataset.races if race.source_season == label]
    if not races:
        raise DatasetError(f"season {label!r} not present in {dataset.name}")
    return label, SeasonOutcome(tuple(races))


def _cmd_history(args) -> int:
    if (args.fixture is None) == (args.data is None):
        raise ValidationError("exactly one of --fixture or --data is required")
    if args.fixture is not None:
        path = fixture_path(args.fixture)
        if not path.exists():
            raise DatasetError(f"unknown fixture {args.fixture!r} (no file {path})")
        dataset = load_dataset(path)
    else:
        dataset = load_dataset(args.data)
    rule = parse_rule_spec(args.rule)
    label, season = _season_from_dataset(dataset, args.season)
    standings = score_season(season, rule)
    # Residual full ties would need a lot; report the lowest driver id
    # deterministically instead, which matters only for artificial data.
    champ = standings[0].driver
    clinched = clinch_index(season, rule, champ)
    rows = [
        {
            "season": label,
            "rule": rule.name,
            "driver": row.driver,
            "points": row.points,
            "wins": row.wins,
            "is_champion": row.driver == champ,
            "clinch_index": clinched,
        }
        for row in standings
    ]
    header = ["season", "rule", "driver", "points", "wins", "is_champion", "clinch_index"]
    _emit(rows, header, args.format, args.out)
    return EXIT_OK


def _cmd_rules(args) -> int:
    specs: list[str] = []
    for chunk in args.show:
        specs.extend(split_rule_specs(chunk))
    if not specs:
        raise ValidationError("nothing to show; pass --show with at least one rule spec")
    rows = []
    header = ["rule", "place", "score", "exact"]
    if args.normalized:
        header += ["normalized", "normalized_exact"]
    for spec in specs:
        rule = parse_rule_spec(spec)
        normalized = normalize_to_100(rule)
        for place, score in enumerate(rule.scores, start=1):
            row = {
                "rule": rule.name,
                "place": place,
                "score": float(score),
                "exact": score,
            }
            if args.normalized:
                row["normalized"] = float(normalized[place - 1])
                row["normalized_exact"] = normalized[place - 1]
            rows.append(row)
    _emit(rows, header, args.format, args.out)
    return EXIT_OK


def _cmd_dataset_validate(args) -> int:
    dataset = resolve_dataset(args.dataset)
    reference = load_reference(args.reference)
    # The bundled reference spans more seasons than either builtin pool;
    # only the seasons the pool declares are in scope.
    present = set(dataset.seasons)
    scoped = [row for row in reference if row.season in present]
    report = validate_against_reference(dataset, scoped)
    rows = [
        {
            "season": row.season,
            "field": row.field,
            "expected": row.expected,
            "actual": row.actual,
            "checked": row.checked,
            "ok": row.ok,
        }
        for row in report.rows
    ]
    header = ["season", "field", "expected", "actual", "checked", "ok"]
    _emit(rows, header, args.format, args.out)
    if not report.ok:
        for row in report.mismatches:
            print(
                f"mismatch: season {row.season} {row.field}: expected {row.expected}, got {row.actual}",
                file=sys.stderr,
            )
        return EXIT_USAGE
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(
        prog="clinchsim",
        description="Simulate championship seasons and compare scoring rules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    simulate = sub.add_parser("simulate", help="run one experiment")
    simulate.add_argument("--races", type=int, default=20, help="races per season")
    _add_common_run_flags(simulate)
    _add_output_flags(simulate)
    simulate.set_defaults(func=_cmd_simulate)

    sweep = sub.add_parser("sweep", help="run experiments over a season-length range")
    sweep.add_argument("--races", required=True, help="inclusive range, e.g. 3..20")
    _add_common_run_flags(sweep)
    _add_output_flags(sweep)
    sweep.set_defaults(func=_cmd_sweep)

    history = sub.add_parser("history", help="analyze one historical season")
    history.add_argument("--fixture", default=None, help="bundled fixture name, e.g. f1-2002")
    history.add_argument("--data", default=None, help="season CSV path")
    history.add_argument("--season", default=None, help="season label inside the file")
    history.add_argument("--rule", default="S4", help="rule spec to score under")
    _add_output_flags(history)
    history.set_defaults(func=_cmd_history)

    rules = sub.add_parser("rules", help="show rule score vectors")
    rules.add_argument(
        "--show", action="append", default=[], help="rule specs (repeatable, comma-separable)"
    )
    rules.add_argument(
        "--normalized", action="store_true", help="include scores normalized to 100 for first place"
    )
    _add_output_flags(rules)
    rules.set_defaults(func=_cmd_rules)

    validate = sub.add_parser(
        "dataset-validate", help="check a pool against the season reference table"
    )
    validate.add_argument("--dataset", default="standard", help="builtin pool name or CSV path")
    validate.add_argument("--reference", default=None, help="reference CSV path (default: bundled)")
    _add_output_flags(validate)
    validate.set_defaults(func=_cmd_dataset_validate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"clinchsim: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DatasetError as exc:
        print(f"clinchsim: data error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
