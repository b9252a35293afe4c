"""Replicated season simulation with per-rule aggregates.

One experiment runs ``replications`` independent seasons.  Replication ``r``
owns the random stream ``(master_seed, r)``: it generates one season, applies
the risk-averse transform (on by default), then evaluates the same season
under every requested rule in order.  Sharing the season across rules makes
cross-rule comparisons paired, which is how the headline trade-off figures
are meant to be read.

Determinism contract: identical configuration (seed included) produces a
bitwise-identical report for any thread count and either engine.  This works
because per-replication streams never depend on scheduling, and the
accumulators are exact integers, so summing partial blocks is
order-independent.  Final means and standard errors are computed once from
the integer totals.

Two engines exist: a compiled Cython kernel (used when built, roughly two
orders of magnitude faster) and a pure-Python fallback composed from the
public API.  Set ``CLINCHSIM_FORCE_PYTHON=1`` to force the fallback.  Rules
whose scaled integer scores could overflow 64-bit accumulation are routed to
the Python engine automatically, which computes with unbounded integers.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from math import lcm

import numpy as np

from . import _mc_python
from .datasets import resolve_dataset
from .domain import Dataset, ScoringRule, ValidationError
from .rng import derive_seed
from .scoring import DEFAULT_RULE_SPECS, parse_rule_spec

try:
    from . import _mc_kernel
except ImportError:  # extension not built; pure Python still works
    _mc_kernel = None

__all__ = [
    "DEFAULT_SEED",
    "ExperimentConfig",
    "RuleStats",
    "ExperimentReport",
    "run_experiment",
    "sweep_races",
    "compiled_available",
    "active_engine_name",
]

# Fixed default seed, chosen once and documented: the year of the first
# Formula One world championship.  Never derived from the clock.
DEFAULT_SEED = 1950

# Integer accumulation headroom: a rule is kernel-eligible only if a full
# season of maximal scores stays far below int64 range.
_INT64_BUDGET = 1 << 62


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything needed to reproduce one experiment."""

    dataset: str
    method: str
    races_n: int
    replications: int = 100_000
    rules: tuple[str, ...] = DEFAULT_RULE_SPECS
    risk_averse: bool = True
    reference_rule: str = "S4"
    master_seed: int = DEFAULT_SEED
    threads: int = 1

    def __post_init__(self):
        if not isinstance(self.rules, tuple):
            object.__setattr__(self, "rules", tuple(self.rules))
        if self.method not in ("M1", "M2"):
            raise ValidationError(f"method must be M1 or M2, got {self.method!r}")
        if self.races_n < 1:
            raise ValidationError("races per season must be >= 1")
        if self.replications < 1:
            raise ValidationError("replications must be >= 1")
        if not self.rules:
            raise ValidationError("at least one rule is required")
        if self.threads < 1:
            raise ValidationError("threads must be >= 1")


@dataclass(frozen=True)
class RuleStats:
    """Aggregates for one rule: the two risks plus a tail probability."""

    rule: str
    mean_uninteresting: float
    se_mean_uninteresting: float
    p_champion_no_win: float
    se_p_no_win: float
    p_uninteresting_ge3: float
    se_ge3: float


@dataclass(frozen=True)
class ExperimentReport:
    """Per-rule aggregates plus the configuration that produced them."""

    config: ExperimentConfig
    per_rule: tuple[RuleStats, ...]
    engine: str = field(default="python", compare=False)

    def stats_for(self, rule_name: str) -> RuleStats:
        for stats in self.per_rule:
            if stats.rule == rule_name:
                return stats
        raise KeyError(rule_name)


def compiled_available() -> bool:
    return _mc_kernel is not None


def active_engine_name() -> str:
    """Engine the next run would use, ignoring per-rule overflow routing."""
    if os.environ.get("CLINCHSIM_FORCE_PYTHON"):
        return "python"
    return "compiled" if compiled_available() else "python"


def _scaled_table(rule: ScoringRule, d_count: int) -> list[int]:
    """Integer score-by-place table; index 0 is the unclassified score (0).

    Scores are multiplied by the least common denominator.  Positive scaling
    changes neither the champion nor the clinch comparisons, so the scaled
    integer decisions match the exact rational ones.
    """
    scale = lcm(*(s.denominator for s in rule.scores))
    table = [0] * (d_count + 1)
    for place in range(1, d_count + 1):
        if place <= rule.places:
            value = rule.scores[place - 1] * scale
            table[place] = value.numerator
    return table


def _blocks(r_lo: int, r_hi: int, threads: int) -> list[tuple[int, int]]:
    """Split a replication index range into contiguous chunks."""
    total = r_hi - r_lo
    if threads <= 1 or total <= 1:
        return [(r_lo, r_hi)]
    chunks = min(total, threads * 4)
    size = (total + chunks - 1) // chunks
    out = []
    lo = r_lo
    while lo < r_hi:
        hi = min(lo + size, r_hi)
        out.append((lo, hi))
        lo = hi
    return out


def _rule_stats(name: str, acc: list[int], r_total: int) -> RuleStats:
    sum_u, sum_u_sq, count_no_win, count_ge3 = acc
    mean = sum_u / r_total
    if r_total > 1:
        spread = r_total * sum_u_sq - sum_u * sum_u
        se_mean = math.sqrt(spread / (r_total * r_total * (r_total - 1)))
    else:
        se_mean = 0.0
    p_no = count_no_win / r_total
    p_ge3 = count_ge3 / r_total
    return RuleStats(
        rule=name,
        mean_uninteresting=mean,
        se_mean_uninteresting=se_mean,
        p_champion_no_win=p_no,
        se_p_no_win=math.sqrt(p_no * (1.0 - p_no) / r_total),
        p_uninteresting_ge3=p_ge3,
        se_ge3=math.sqrt(p_ge3 * (1.0 - p_ge3) / r_total),
    )


def run_experiment(config: ExperimentConfig, dataset: Dataset | None = None) -> ExperimentReport:
    """Run one experiment and aggregate per-rule metrics.

    ``dataset`` short-circuits resolution of ``config.dataset``, which lets
    callers (sweeps, tests) reuse an already-loaded pool.
    """
    ds = dataset if dataset is not None else resolve_dataset(config.dataset)
    rules = [parse_rule_spec(spec) for spec in config.rules]
    ref_rule = parse_rule_spec(config.reference_rule)

    d_count = ds.driver_count
    tables = [_scaled_table(rule, d_count) for rule in rules]
    ref_table = _scaled_table(ref_rule, d_count)

    fits = all(
        table[1] * config.races_n < _INT64_BUDGET for table in tables + [ref_table]
    )
    use_compiled = (
        compiled_available()
        and not os.environ.get("CLINCHSIM_FORCE_PYTHON")
        and fits
    )

    if use_compiled:
        races_arr = np.array(
            [[p if p is not None else 0 for p in race.positions] for race in ds.races],
            dtype=np.int32,
        )
        scores_arr = np.array(tables, dtype=np.int64)
        s1_arr = np.array([table[1] for table in tables], dtype=np.int64)
        ref_arr = np.array(ref_table, dtype=np.int64)
        method_code = 1 if config.method == "M1" else 2

        def runner(lo: int, hi: int) -> list[list[int]]:
            return _mc_kernel.run_block(
                config.master_seed,
                lo,
                hi,
                races_arr,
                method_code,
                config.races_n,
                scores_arr,
                s1_arr,
                ref_arr,
                config.risk_averse,
            )

        engine = "compiled"
    else:

        def runner(lo: int, hi: int) -> list[list[int]]:
            return _mc_python.run_block(
                config.master_seed,
                lo,
                hi,
                ds,
                config.method,
                config.races_n,
                rules,
                ref_rule,
                config.risk_averse,
            )

        engine = "python"

    # Replication r uses stream (master_seed, r), r = 1..R.
    blocks = _blocks(1, config.replications + 1, config.threads)
    if len(blocks) == 1:
        partials = [runner(*blocks[0])]
    else:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            partials = list(pool.map(lambda b: runner(*b), blocks))

    totals = [[0, 0, 0, 0] for _ in rules]
    for partial in partials:
        for ri, row in enumerate(partial):
            for k in range(4):
                totals[ri][k] += row[k]

    per_rule = tuple(
        _rule_stats(rule.name, totals[ri], config.replications)
        for ri, rule in enumerate(rules)
    )
    return ExperimentReport(config=config, per_rule=per_rule, engine=engine)


def sweep_races(config: ExperimentConfig, n_values) -> list[ExperimentReport]:
    """One experiment per season length.

    Each length gets an independent master seed derived from
    ``(config.master_seed, n)``, echoed in its report, so any single row can
    be regenerated by a plain run with that seed.
    """
    ns = [int(n) for n in n_values]
    if not ns:
        raise ValidationError("empty season-length range")
    for n in ns:
        if not 3 <= n <= 30:
            raise ValidationError(f"season lengths must lie in 3..30, got {n}")
    ds = resolve_dataset(config.dataset)
    reports = []
    for n in ns:
        cfg = replace(
            config,
            races_n=n,
            master_seed=derive_seed(config.master_seed, n),
        )
        reports.append(run_experiment(cfg, dataset=ds))
    return reports
