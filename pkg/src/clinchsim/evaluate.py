"""Season evaluation: standings, champion, clinch detection, metrics.

Ranking follows the two-criterion convention used by the simulated
championships: more points first, then more race wins, and any remaining tie
is resolved by a drawing of lots.  Deeper countback (counting second places
and so on) is deliberately not implemented.

The clinch index is the earliest checkpoint after which the title is secured.
After ``m`` of ``n`` races the title is still open exactly when, against the
best-placed other driver (by points, then wins), either

* the points lead is smaller than ``(n - m) * s1``, the most a driver can
  still score, or
* the lead equals ``(n - m) * s1`` and the champion's win advantage is at
  most ``n - m`` (the pursuer could draw level on points and pull ahead, or
  tie, on wins).

The index is the first ``m`` where neither holds.  A title that stays open
through the last race (settled only by the tie-break or by lot) gets clinch
index ``n``.
"""

from __future__ import annotations

from fractions import Fraction

from .domain import ScoringRule, SeasonMetrics, SeasonOutcome, StandingsRow, ValidationError
from .rng import RngStream
from .scoring import points_for

__all__ = ["score_season", "champion", "clinch_index", "season_metrics"]


def _accumulate(season: SeasonOutcome, rule: ScoringRule, up_to: int):
    """Points and wins per driver over the first ``up_to`` races."""
    d = season.driver_count
    points = [Fraction(0)] * d
    wins = [0] * d
    for race in season.races[:up_to]:
        for idx, place in enumerate(race.positions):
            if place is None:
                continue
            points[idx] += points_for(rule, place)
            if place == 1:
                wins[idx] += 1
    return points, wins


def score_season(
    season: SeasonOutcome, rule: ScoringRule, up_to: int | None = None
) -> list[StandingsRow]:
    """Standings after the first ``up_to`` races (default: the whole season).

    Rows are ordered by points, then wins, both descending; drivers still
    tied after that appear in driver-id order.  Every driver of the universe
    gets a row, including ones that never classified.
    """
    n = season.n
    if up_to is None:
        up_to = n
    if not 1 <= up_to <= n:
        raise ValidationError(f"checkpoint {up_to} outside 1..{n}")
    points, wins = _accumulate(season, rule, up_to)
    rows = [
        StandingsRow(driver=idx + 1, points=points[idx], wins=wins[idx])
        for idx in range(season.driver_count)
    ]
    rows.sort(key=lambda row: (-row.points, -row.wins, row.driver))
    return rows


def champion(standings: list[StandingsRow], rng: RngStream) -> int:
    """Champion of ranked standings, drawing lots among fully tied leaders.

    The lot consumes one bounded draw from ``rng`` only when the tie is real;
    a unique leader leaves the stream untouched.
    """
    if not standings:
        raise ValidationError("empty standings")
    top = standings[0]
    tied = [
        row.driver
        for row in standings
        if row.points == top.points and row.wins == top.wins
    ]
    if len(tied) == 1:
        return tied[0]
    return tied[rng.bounded(len(tied))]


def clinch_index(season: SeasonOutcome, rule: ScoringRule, champ: int) -> int:
    """First checkpoint ``m`` after which ``champ`` has the title secured.

    ``champ`` must be the full-season champion; mid-season checkpoints
    compare everyone against that driver even at points where someone else
    leads (a negative lead simply means the title is still open).  Returns
    ``n`` when the title stayed open through the final race.
    """
    n = season.n
    d = season.driver_count
    if d == 1:
        # No pursuer exists, so the title is secured from the first race.
        return 1
    s1 = rule.scores[0]
    points = [Fraction(0)] * d
    wins = [0] * d
    ci = champ - 1
    for m, race in enumerate(season.races, start=1):
        for idx, place in enumerate(race.positions):
            if place is None:
                continue
            points[idx] += points_for(rule, place)
            if place == 1:
                wins[idx] += 1
        best_points = None
        best_wins = -1
        for idx in range(d):
            if idx == ci:
                continue
            if (
                best_points is None
                or points[idx] > best_points
                or (points[idx] == best_points and wins[idx] > best_wins)
            ):
                best_points = points[idx]
                best_wins = wins[idx]
        lead = points[ci] - best_points
        remaining = n - m
        still_open = lead < remaining * s1 or (
            lead == remaining * s1 and wins[ci] - best_wins <= remaining
        )
        if not still_open:
            return m
    return n


def season_metrics(season: SeasonOutcome, rule: ScoringRule, rng: RngStream) -> SeasonMetrics:
    """Champion, clinch index, uninteresting-race count, and win flag."""
    standings = score_season(season, rule)
    champ = champion(standings, rng)
    champ_wins = next(row.wins for row in standings if row.driver == champ)
    ci = clinch_index(season, rule, champ)
    return SeasonMetrics(
        champion=champ,
        clinch_index=ci,
        uninteresting_count=season.n - ci,
        champion_won_a_race=champ_wins >= 1,
    )
