"""Value-type invariants and JSON round-trips."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clinchsim.domain import (
    Dataset,
    RaceResult,
    ScoringRule,
    SeasonMetrics,
    SeasonOutcome,
    StandingsRow,
    ValidationError,
    fraction_from_str,
    fraction_to_str,
)


def test_race_accepts_contiguous_places_with_padding():
    race = RaceResult((2, None, 1, 3, None))
    assert race.driver_count == 5
    assert race.classified_count == 3
    assert race.winner() == 3
    assert race.place_of(1) == 2
    assert race.place_of(2) is None


@pytest.mark.parametrize(
    "positions",
    [
        (1, 1, 2),  # duplicate place
        (1, 3),  # gap: no place 2
        (2, 3),  # does not start at 1
        (None, None),  # nobody classified
        (0, 1),  # places are 1-based
        (-1, 1),
        (1, True),  # bool is not a place
        (1, 2.0),  # nor is a float
    ],
)
def test_race_rejects_malformed_places(positions):
    with pytest.raises(ValidationError):
        RaceResult(positions)


def test_race_coerces_lists_to_tuples():
    race = RaceResult([1, 2, None])
    assert isinstance(race.positions, tuple)


def test_season_rejects_mixed_widths():
    with pytest.raises(ValidationError):
        SeasonOutcome((RaceResult((1, 2)), RaceResult((1, 2, 3))))
    with pytest.raises(ValidationError):
        SeasonOutcome(())


def test_season_properties():
    season = SeasonOutcome((RaceResult((1, 2, None)), RaceResult((2, 1, 3))))
    assert season.n == 2
    assert season.driver_count == 3


def test_dataset_width_must_match_declaration():
    with pytest.raises(ValidationError):
        Dataset(name="x", races=(RaceResult((1, 2)),), driver_count=3)
    with pytest.raises(ValidationError):
        Dataset(name="x", races=(), driver_count=3)


def test_scoring_rule_validation():
    rule = ScoringRule("ok", (10, 6, 1))
    assert rule.places == 3
    assert rule.scores == (Fraction(10), Fraction(6), Fraction(1))
    with pytest.raises(ValidationError):
        ScoringRule("bad", ())
    with pytest.raises(ValidationError):
        ScoringRule("bad", (0, 0))  # first place must pay
    with pytest.raises(ValidationError):
        ScoringRule("bad", (5, 6))  # increasing


def test_standings_row_validation():
    with pytest.raises(ValidationError):
        StandingsRow(0, Fraction(1), 0)
    with pytest.raises(ValidationError):
        StandingsRow(1, Fraction(1), -1)
    with pytest.raises(ValidationError):
        StandingsRow(1, Fraction(-1), 0)


def test_season_metrics_validation():
    with pytest.raises(ValidationError):
        SeasonMetrics(1, 0, 0, True)
    with pytest.raises(ValidationError):
        SeasonMetrics(1, 1, -1, True)


def test_fraction_strings_are_exact():
    assert fraction_to_str(Fraction(25, 2)) == "25/2"
    assert fraction_to_str(Fraction(10)) == "10"
    assert fraction_from_str("25/2") == Fraction(25, 2)


def test_round_trips():
    race = RaceResult((1, None, 2), source_season="2016")
    assert RaceResult.from_jsonable(race.to_jsonable()) == race

    season = SeasonOutcome((race, RaceResult((2, 1, None))))
    assert SeasonOutcome.from_jsonable(season.to_jsonable()) == season

    dataset = Dataset(name="d", races=season.races, driver_count=3, seasons=("2016",))
    assert Dataset.from_jsonable(dataset.to_jsonable()) == dataset

    rule = ScoringRule("g", (Fraction(21, 20), Fraction(1)), geometric_p=Fraction(21, 20))
    assert ScoringRule.from_jsonable(rule.to_jsonable()) == rule

    row = StandingsRow(3, Fraction(101, 4), 2)
    assert StandingsRow.from_jsonable(row.to_jsonable()) == row

    metrics = SeasonMetrics(1, 17, 3, False)
    assert SeasonMetrics.from_jsonable(metrics.to_jsonable()) == metrics


@st.composite
def race_vectors(draw):
    """Position tuples with a classified block 1..m scattered over the width."""
    width = draw(st.integers(1, 12))
    m = draw(st.integers(1, width))
    slots = draw(st.permutations(range(width)))
    positions: list[int | None] = [None] * width
    for place, d in enumerate(slots[:m], start=1):
        positions[d] = place
    return tuple(positions)


@given(race_vectors())
@settings(max_examples=100, deadline=None)
def test_any_valid_race_round_trips(positions):
    race = RaceResult(positions)
    assert RaceResult.from_jsonable(race.to_jsonable()) == race
