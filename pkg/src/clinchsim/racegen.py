"""Synthetic race generation and the risk-averse season transform.

Two samplers produce one race at a time from a pool of historical races:

* Method 1 draws a complete race from the pool, uniformly with replacement.
  Output races are verbatim members of the pool, unclassified entries
  included.
* Method 2 recombines two pool races.  It draws a pair of distinct races,
  flips a fair coin per driver to pick that driver's provisional spot from
  one parent or the other, then re-ranks everyone by provisional spot with
  all ties broken uniformly at random.  Drivers whose chosen spot is
  unclassified sort after every classified spot.  The output classifies the
  whole field, places 1 through driver_count.

Drawing the Method 2 parents as a uniformly random pair of *distinct* races
is a deliberate choice: on a two-race pool it reproduces the exact
recombination distribution that motivates the method (see
``enumerate_m2_distribution``, which can evaluate both the distinct-pair and
the independent-redraw conventions).  On large pools the two conventions are
practically indistinguishable; a pool of one race degenerates to that race
either way.

Draw discipline matters for reproducibility: per race, Method 1 consumes one
bounded draw, and Method 2 consumes two pair draws (none on a singleton
pool), one coin per driver, and a ``driver_count - 1``-draw shuffle that
serves as the shared tie-break permutation.  The compiled engine consumes
draws in exactly the same order.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .domain import Dataset, RaceResult, ScoringRule, SeasonOutcome, ValidationError
from .evaluate import champion, score_season
from .rng import RngStream
from .scoring import preset_rule

__all__ = [
    "sample_race_m1",
    "sample_race_m2",
    "generate_season",
    "risk_averse_transform",
    "enumerate_m2_distribution",
]


def sample_race_m1(dataset: Dataset, rng: RngStream) -> RaceResult:
    """One pool race, uniformly at random with replacement."""
    return dataset.races[rng.bounded(len(dataset.races))]


def _rerank(spots: list[int | None], tiebreak: list[int], driver_count: int) -> RaceResult:
    """Rank drivers by provisional spot, using ``tiebreak`` within ties.

    ``tiebreak`` is a uniform random permutation; restricted to any tie
    group it is a uniform relative order, and disjoint groups restrict
    independently, so one shared permutation breaks every tie correctly.
    """
    unclassified_key = driver_count + 1
    keys = [
        ((spots[d] if spots[d] is not None else unclassified_key), tiebreak[d])
        for d in range(driver_count)
    ]
    order = sorted(range(driver_count), key=lambda d: keys[d])
    positions: list[int | None] = [None] * driver_count
    for place, d in enumerate(order, start=1):
        positions[d] = place
    return RaceResult(tuple(positions))


def sample_race_m2(dataset: Dataset, rng: RngStream) -> RaceResult:
    """One race recombined from two pool races by per-driver coin tosses."""
    pool = dataset.races
    count = len(pool)
    if count > 1:
        i = rng.bounded(count)
        j = rng.bounded(count - 1)
        if j >= i:
            j += 1
    else:
        i = j = 0
    first, second = pool[i], pool[j]
    d_count = dataset.driver_count
    spots = [
        first.positions[d] if rng.coin() == 0 else second.positions[d]
        for d in range(d_count)
    ]
    tiebreak = list(range(d_count))
    rng.shuffle(tiebreak)
    return _rerank(spots, tiebreak, d_count)


def generate_season(dataset: Dataset, method: str, n: int, rng: RngStream) -> SeasonOutcome:
    """Season of ``n`` independently sampled races.

    ``method`` is ``"M1"`` or ``"M2"``.
    """
    if n < 1:
        raise ValidationError("a season needs at least one race")
    if method == "M1":
        sampler = sample_race_m1
    elif method == "M2":
        sampler = sample_race_m2
    else:
        raise ValidationError(f"unknown generation method {method!r} (expected M1 or M2)")
    return SeasonOutcome(tuple(sampler(dataset, rng) for _ in range(n)))


def risk_averse_transform(
    season: SeasonOutcome, rng: RngStream, reference_rule: ScoringRule | None = None
) -> SeasonOutcome:
    """Swap the reference champion's race wins with each race's runner-up.

    The champion under ``reference_rule`` (default S4) is determined with the
    usual tie-breaking, then every race that driver won is rewritten so the
    champion finishes second and the original runner-up first.  All other
    races, and races won by the champion with no classified runner-up, are
    left untouched.  A second application changes nothing as long as it
    resolves to the same reference champion, who then has no wins left to
    swap; losing enough wins can hand the reference title to another driver,
    in which case re-running the transform would target that driver instead.
    A season whose reference champion never won a race is a fixed point.
    """
    if reference_rule is None:
        reference_rule = preset_rule("S4")
    standings = score_season(season, reference_rule)
    champ = champion(standings, rng)
    ci = champ - 1
    races = []
    for race in season.races:
        if race.positions[ci] != 1:
            races.append(race)
            continue
        try:
            runner = race.positions.index(2)
        except ValueError:
            races.append(race)
            continue
        positions = list(race.positions)
        positions[ci] = 2
        positions[runner] = 1
        races.append(RaceResult(tuple(positions), race.source_season))
    return SeasonOutcome(tuple(races))


def enumerate_m2_distribution(
    dataset: Dataset, pairing: str = "distinct"
) -> dict[RaceResult, Fraction]:
    """Exact Method 2 output distribution on a small pool.

    Exhaustively enumerates parent pairs, the ``2**driver_count`` coin
    outcomes, and every tie-break order within each tie group, all in
    rational arithmetic.  ``pairing`` selects the parent convention:
    ``"distinct"`` (the sampler's behaviour) weights each ordered pair of
    distinct races equally, ``"replacement"`` weights all ordered pairs
    (including a race with itself) equally.  Probabilities sum to 1 exactly.

    Only intended as an oracle for tests, so the instance size is capped.
    """
    if pairing not in ("distinct", "replacement"):
        raise ValidationError(f"unknown pairing convention {pairing!r}")
    pool = dataset.races
    d_count = dataset.driver_count
    if d_count > 6 or len(pool) > 4:
        raise ValidationError("instance too large for exhaustive enumeration")

    if len(pool) == 1:
        pairs = [(0, 0, Fraction(1))]
    elif pairing == "distinct":
        weight = Fraction(1, len(pool) * (len(pool) - 1))
        pairs = [
            (i, j, weight)
            for i in range(len(pool))
            for j in range(len(pool))
            if i != j
        ]
    else:
        weight = Fraction(1, len(pool) ** 2)
        pairs = [(i, j, weight) for i in range(len(pool)) for j in range(len(pool))]

    coin_weight = Fraction(1, 2**d_count)
    unclassified_key = d_count + 1
    out: dict[RaceResult, Fraction] = {}
    for i, j, pair_weight in pairs:
        parents = (pool[i], pool[j])
        for coins in itertools.product((0, 1), repeat=d_count):
            spots = [parents[coins[d]].positions[d] for d in range(d_count)]
            keys = [spots[d] if spots[d] is not None else unclassified_key for d in range(d_count)]
            groups: dict[int, list[int]] = {}
            for d in range(d_count):
                groups.setdefault(keys[d], []).append(d)
            ordered_keys = sorted(groups)
            group_orders = [
                list(itertools.permutations(groups[key])) for key in ordered_keys
            ]
            tie_weight = Fraction(1)
            for orders in group_orders:
                tie_weight /= len(orders)
            for choice in itertools.product(*group_orders):
                positions: list[int | None] = [None] * d_count
                place = 1
                for group in choice:
                    for d in group:
                        positions[d] = place
                        place += 1
                race = RaceResult(tuple(positions))
                prob = pair_weight * coin_weight * tie_weight
                out[race] = out.get(race, Fraction(0)) + prob
    return out
