"""Value types shared by every other module.

All types are immutable and validate their invariants on construction, so a
constructed value is always safe to share across threads.  Conventions used
throughout the package:

* Drivers are identified by their final standing in the source season, as a
  1-based integer.  There is no separate identifier class; functions document
  which integers they accept.
* A finishing position is either a classified place (``int >= 1``) or
  ``None`` for a driver who does not appear in the classification (retired,
  absent from that season, and so on).  Unclassified drivers score nothing
  and win nothing.
* Points are :class:`fractions.Fraction` values.  Tie detection in standings
  must be exact, and fractional scores (geometric families with non-integer
  ratios) would make float comparison order-dependent.

Each type round-trips through ``to_jsonable`` / ``from_jsonable`` losslessly;
fractions are encoded as strings so JSON numbers never approximate them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

__all__ = [
    "ValidationError",
    "Position",
    "RaceResult",
    "SeasonOutcome",
    "Dataset",
    "ScoringRule",
    "StandingsRow",
    "SeasonMetrics",
    "fraction_to_str",
    "fraction_from_str",
]


class ValidationError(ValueError):
    """Raised when a value under construction violates a type invariant."""


Position = Optional[int]


def fraction_to_str(value: Fraction) -> str:
    """Exact string form: integers stay bare, others are ``num/den``."""
    return str(value)


def fraction_from_str(text: str) -> Fraction:
    return Fraction(text)


def _check_positions(positions: tuple[Position, ...]) -> None:
    classified = []
    for p in positions:
        if p is None:
            continue
        if not isinstance(p, int) or isinstance(p, bool) or p < 1:
            raise ValidationError(f"classified place must be a positive integer, got {p!r}")
        classified.append(p)
    if not classified:
        raise ValidationError("a race needs at least one classified driver")
    m = len(classified)
    if len(set(classified)) != m:
        raise ValidationError("classified places must be pairwise distinct")
    if set(classified) != set(range(1, m + 1)):
        raise ValidationError(
            f"classified places must form a contiguous block 1..{m}, got {sorted(classified)}"
        )


@dataclass(frozen=True)
class RaceResult:
    """Finishing positions of one race over a fixed driver universe.

    ``positions[d - 1]`` is driver ``d``'s place, or ``None`` if unclassified.
    Classified places are distinct and fill ``1..m`` with no gaps.
    """

    positions: tuple[Position, ...]
    source_season: Optional[str] = None

    def __post_init__(self):
        if not isinstance(self.positions, tuple):
            object.__setattr__(self, "positions", tuple(self.positions))
        _check_positions(self.positions)

    @property
    def driver_count(self) -> int:
        return len(self.positions)

    @property
    def classified_count(self) -> int:
        return sum(1 for p in self.positions if p is not None)

    def place_of(self, driver: int) -> Position:
        """Place of 1-based driver id ``driver``."""
        return self.positions[driver - 1]

    def winner(self) -> int:
        """1-based id of the driver holding place 1."""
        return self.positions.index(1) + 1

    def to_jsonable(self) -> dict:
        return {"positions": list(self.positions), "source_season": self.source_season}

    @classmethod
    def from_jsonable(cls, obj: dict) -> "RaceResult":
        return cls(tuple(obj["positions"]), obj.get("source_season"))


@dataclass(frozen=True)
class SeasonOutcome:
    """An ordered list of races over a common driver universe."""

    races: tuple[RaceResult, ...]

    def __post_init__(self):
        if not isinstance(self.races, tuple):
            object.__setattr__(self, "races", tuple(self.races))
        if len(self.races) < 1:
            raise ValidationError("a season needs at least one race")
        width = self.races[0].driver_count
        for i, race in enumerate(self.races):
            if race.driver_count != width:
                raise ValidationError(
                    f"race {i + 1} covers {race.driver_count} drivers, expected {width}"
                )

    @property
    def n(self) -> int:
        return len(self.races)

    @property
    def driver_count(self) -> int:
        return self.races[0].driver_count

    def to_jsonable(self) -> dict:
        return {"races": [r.to_jsonable() for r in self.races]}

    @classmethod
    def from_jsonable(cls, obj: dict) -> "SeasonOutcome":
        return cls(tuple(RaceResult.from_jsonable(r) for r in obj["races"]))


@dataclass(frozen=True)
class Dataset:
    """A pool of historical races used as the sampling population.

    Races from seasons with fewer drivers are padded with unclassified
    entries up to ``driver_count``, keeping every position vector the same
    width.
    """

    name: str
    races: tuple[RaceResult, ...]
    driver_count: int
    seasons: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if not isinstance(self.races, tuple):
            object.__setattr__(self, "races", tuple(self.races))
        if not isinstance(self.seasons, tuple):
            object.__setattr__(self, "seasons", tuple(self.seasons))
        if not self.races:
            raise ValidationError("empty dataset")
        for i, race in enumerate(self.races):
            if race.driver_count != self.driver_count:
                raise ValidationError(
                    f"race {i + 1} has width {race.driver_count}, dataset declares {self.driver_count}"
                )

    def to_jsonable(self) -> dict:
        return {
            "name": self.name,
            "driver_count": self.driver_count,
            "seasons": list(self.seasons),
            "races": [r.to_jsonable() for r in self.races],
        }

    @classmethod
    def from_jsonable(cls, obj: dict) -> "Dataset":
        return cls(
            name=obj["name"],
            races=tuple(RaceResult.from_jsonable(r) for r in obj["races"]),
            driver_count=obj["driver_count"],
            seasons=tuple(obj["seasons"]),
        )


@dataclass(frozen=True)
class ScoringRule:
    """A named non-increasing score vector over finishing places.

    Places beyond ``len(scores)`` score zero.  ``geometric_p`` records the
    family parameter when the rule was generated from the geometric family,
    purely as metadata.
    """

    name: str
    scores: tuple[Fraction, ...]
    geometric_p: Optional[Fraction] = None

    def __post_init__(self):
        if not isinstance(self.scores, tuple):
            object.__setattr__(self, "scores", tuple(self.scores))
        object.__setattr__(self, "scores", tuple(Fraction(s) for s in self.scores))
        if not self.scores:
            raise ValidationError("a scoring rule needs at least one place")
        if self.scores[0] <= 0:
            raise ValidationError("the score for first place must be positive")
        for j, (a, b) in enumerate(zip(self.scores, self.scores[1:]), start=1):
            if b > a:
                raise ValidationError(
                    f"scores must be non-increasing, but place {j + 1} ({b}) exceeds place {j} ({a})"
                )
        if self.scores[-1] < 0:
            raise ValidationError("scores must be non-negative")
        if self.geometric_p is not None:
            object.__setattr__(self, "geometric_p", Fraction(self.geometric_p))

    @property
    def places(self) -> int:
        return len(self.scores)

    def to_jsonable(self) -> dict:
        return {
            "name": self.name,
            "scores": [fraction_to_str(s) for s in self.scores],
            "geometric_p": None if self.geometric_p is None else fraction_to_str(self.geometric_p),
        }

    @classmethod
    def from_jsonable(cls, obj: dict) -> "ScoringRule":
        p = obj.get("geometric_p")
        return cls(
            name=obj["name"],
            scores=tuple(fraction_from_str(s) for s in obj["scores"]),
            geometric_p=None if p is None else fraction_from_str(p),
        )


@dataclass(frozen=True)
class StandingsRow:
    """One driver's accumulated points and race wins."""

    driver: int
    points: Fraction
    wins: int

    def __post_init__(self):
        object.__setattr__(self, "points", Fraction(self.points))
        if self.driver < 1:
            raise ValidationError("driver ids are 1-based")
        if self.wins < 0:
            raise ValidationError("win counts cannot be negative")
        if self.points < 0:
            raise ValidationError("points cannot be negative")

    def to_jsonable(self) -> dict:
        return {"driver": self.driver, "points": fraction_to_str(self.points), "wins": self.wins}

    @classmethod
    def from_jsonable(cls, obj: dict) -> "StandingsRow":
        return cls(obj["driver"], fraction_from_str(obj["points"]), obj["wins"])


@dataclass(frozen=True)
class SeasonMetrics:
    """Outcome summary of one evaluated season.

    ``clinch_index`` is the race count after which the title was first
    secured; ``uninteresting_count`` is the number of races that took place
    after that, i.e. ``n - clinch_index``.
    """

    champion: int
    clinch_index: int
    uninteresting_count: int
    champion_won_a_race: bool

    def __post_init__(self):
        if self.champion < 1:
            raise ValidationError("driver ids are 1-based")
        if self.clinch_index < 1:
            raise ValidationError("the title cannot be secured before the first race")
        if self.uninteresting_count < 0:
            raise ValidationError("uninteresting race counts cannot be negative")

    def to_jsonable(self) -> dict:
        return {
            "champion": self.champion,
            "clinch_index": self.clinch_index,
            "uninteresting_count": self.uninteresting_count,
            "champion_won_a_race": self.champion_won_a_race,
        }

    @classmethod
    def from_jsonable(cls, obj: dict) -> "SeasonMetrics":
        return cls(
            obj["champion"],
            obj["clinch_index"],
            obj["uninteresting_count"],
            obj["champion_won_a_race"],
        )
