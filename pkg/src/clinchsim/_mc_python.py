"""Pure-Python replication engine.

This is the reference semantics: it composes the public samplers and season
evaluation directly, so every replication is exactly "generate, transform,
evaluate under each rule in order" with one random stream per replication.
The compiled engine reproduces its results bit for bit; the test suite
compares the two on shared configurations.
"""

from __future__ import annotations

from .domain import Dataset, ScoringRule
from .evaluate import season_metrics
from .racegen import generate_season, risk_averse_transform
from .rng import RngStream

ENGINE_NAME = "python"


def run_block(
    master_seed: int,
    r_lo: int,
    r_hi: int,
    dataset: Dataset,
    method: str,
    n: int,
    rules: list[ScoringRule],
    reference_rule: ScoringRule,
    risk_averse: bool,
) -> list[list[int]]:
    """Accumulate metrics for replications ``r_lo <= r < r_hi``.

    Returns one ``[sum_u, sum_u_sq, count_no_win, count_u_ge3]`` quadruple
    per rule.  All entries are exact integers, so partial blocks can be
    summed in any order without changing the result.
    """
    acc = [[0, 0, 0, 0] for _ in rules]
    for r in range(r_lo, r_hi):
        rng = RngStream(master_seed, r)
        season = generate_season(dataset, method, n, rng)
        if risk_averse:
            season = risk_averse_transform(season, rng, reference_rule)
        for ri, rule in enumerate(rules):
            metrics = season_metrics(season, rule, rng)
            u = metrics.uninteresting_count
            row = acc[ri]
            row[0] += u
            row[1] += u * u
            if not metrics.champion_won_a_race:
                row[2] += 1
            if u >= 3:
                row[3] += 1
    return acc
