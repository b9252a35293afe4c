"""Historical race pools: loading, bundled fixtures, reference validation.

CSV schema (UTF-8, header required)::

    season,race,driver,position

``season`` is an integer year, ``race`` the 1-based race number within the
season, ``driver`` the driver's final-standing index within that season
(1-based), and ``position`` a positive integer or the literal ``DNF``.
Drivers missing from a race's rows are unclassified in that race.  Position
vectors are padded to the largest driver index in the file (or an explicit
override), so every race in a pool has the same width.

The bundled pools are reconstructions from public motorsport archives; the
fixture files are generated by ``tools/build_fixtures.py``, which documents
the source data and applies the driver-record merges (mid-season driver
substitutions treated as a single entry) directly in the files.  The loader
itself is merge-free.  ``reference.csv`` carries per-season characteristics
(driver count, race count, clinch race, winning margin) used to cross-check
the reconstruction; margins and clinch races are only comparable for seasons
actually run under the plain 25-18-15-... table with no bonus points, which
the ``margin_checkable`` flag records.
"""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .domain import Dataset, RaceResult, SeasonOutcome, ValidationError
from .evaluate import clinch_index, score_season
from .scoring import preset_rule

__all__ = [
    "DatasetError",
    "ReferenceRow",
    "CheckRow",
    "ValidationReport",
    "data_dir",
    "fixture_path",
    "load_dataset",
    "builtin_dataset",
    "load_reference",
    "validate_against_reference",
    "BUILTIN_DATASETS",
]

BUILTIN_DATASETS = ("standard", "small_margin")


class DatasetError(Exception):
    """Raised when a race pool cannot be loaded or fails validation."""


def data_dir() -> Path:
    """Directory holding bundled fixture files.

    ``CLINCHSIM_DATA_DIR`` overrides the packaged data, which lets tests and
    downstream users substitute their own reconstructions without
    reinstalling.
    """
    env = os.environ.get("CLINCHSIM_DATA_DIR")
    if env:
        return Path(env)
    return Path(str(resources.files("clinchsim").joinpath("data")))


def fixture_path(name: str) -> Path:
    return data_dir() / f"{name}.csv"


def _parse_position(text: str, context: str) -> int | None:
    cleaned = text.strip()
    if cleaned.upper() == "DNF":
        return None
    try:
        value = int(cleaned)
    except ValueError:
        raise DatasetError(f"{context}: position must be a positive integer or DNF, got {text!r}")
    if value < 1:
        raise DatasetError(f"{context}: position must be >= 1, got {value}")
    return value


def load_dataset(path: str | Path, driver_count_override: int | None = None) -> Dataset:
    """Load and validate a race pool from a CSV file.

    Races are ordered by (season, race number).  Raises
    :class:`DatasetError` on malformed rows, duplicate or gapped places, or
    an empty file.
    """
    path = Path(path)
    if not path.exists():
        raise DatasetError(f"no such dataset file: {path}")
    rows: dict[tuple[int, int], dict[int, int | None]] = {}
    max_driver = 0
    try:
        with open(path, newline="", encoding="utf-8") as handle:
            reader = csv.reader(handle)
            header = next(reader, None)
            if header is None:
                raise DatasetError(f"empty dataset: {path}")
            expected = ["season", "race", "driver", "position"]
            if [h.strip().lower() for h in header] != expected:
                raise DatasetError(
                    f"{path}: expected header {','.join(expected)}, got {','.join(header)}"
                )
            for lineno, row in enumerate(reader, start=2):
                if not row or all(not cell.strip() for cell in row):
                    continue
                context = f"{path}:{lineno}"
                if len(row) != 4:
                    raise DatasetError(f"{context}: expected 4 fields, got {len(row)}")
                try:
                    season = int(row[0])
                    race = int(row[1])
                    driver = int(row[2])
                except ValueError:
                    raise DatasetError(f"{context}: season, race, and driver must be integers")
                if race < 1 or driver < 1:
                    raise DatasetError(f"{context}: race and driver indices are 1-based")
                position = _parse_position(row[3], context)
                key = (season, race)
                drivers = rows.setdefault(key, {})
                if driver in drivers:
                    raise DatasetError(f"{context}: duplicate entry for driver {driver}")
                drivers[driver] = position
                max_driver = max(max_driver, driver)
    except OSError as exc:
        raise DatasetError(f"cannot read {path}: {exc}") from exc
    if not rows:
        raise DatasetError(f"empty dataset: {path}")
    driver_count = max_driver
    if driver_count_override is not None:
        if driver_count_override < max_driver:
            raise DatasetError(
                f"driver count override {driver_count_override} below largest driver index {max_driver}"
            )
        driver_count = driver_count_override
    races = []
    seasons: list[str] = []
    for (season, race) in sorted(rows):
        drivers = rows[(season, race)]
        positions: list[int | None] = [None] * driver_count
        for driver, position in drivers.items():
            positions[driver - 1] = position
        try:
            result = RaceResult(tuple(positions), source_season=str(season))
        except ValidationError as exc:
            raise DatasetError(f"{path}: season {season} race {race}: {exc}") from exc
        races.append(result)
        if str(season) not in seasons:
            seasons.append(str(season))
    return Dataset(
        name=path.stem,
        races=tuple(races),
        driver_count=driver_count,
        seasons=tuple(seasons),
    )


def normalize_dataset_name(name: str) -> str:
    return name.strip().lower().replace("-", "_")


def builtin_dataset(name: str) -> Dataset:
    """Load a bundled pool by name: ``standard`` or ``small_margin``."""
    key = normalize_dataset_name(name)
    if key not in BUILTIN_DATASETS:
        known = ", ".join(BUILTIN_DATASETS)
        raise DatasetError(f"unknown builtin dataset {name!r} (known: {known})")
    path = fixture_path(key)
    if not path.exists():
        raise DatasetError(f"missing fixture file: {path}")
    return load_dataset(path)


def resolve_dataset(spec: str) -> Dataset:
    """Interpret ``spec`` as a builtin name first, then as a file path."""
    if normalize_dataset_name(spec) in BUILTIN_DATASETS:
        return builtin_dataset(spec)
    return load_dataset(spec)


@dataclass(frozen=True)
class ReferenceRow:
    """Expected characteristics of one season, as published."""

    season: str
    drivers: int
    races: int
    clinched: int
    margin: Fraction
    margin_checkable: bool


def load_reference(path: str | Path | None = None) -> list[ReferenceRow]:
    """Load the season-characteristics reference table."""
    if path is None:
        path = data_dir() / "reference.csv"
    path = Path(path)
    if not path.exists():
        raise DatasetError(f"no such reference file: {path}")
    out = []
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        required = {"season", "drivers", "races", "clinched", "margin", "margin_checkable"}
        if reader.fieldnames is None or set(reader.fieldnames) != required:
            raise DatasetError(f"{path}: expected header {','.join(sorted(required))}")
        for lineno, row in enumerate(reader, start=2):
            try:
                out.append(
                    ReferenceRow(
                        season=row["season"].strip(),
                        drivers=int(row["drivers"]),
                        races=int(row["races"]),
                        clinched=int(row["clinched"]),
                        margin=Fraction(row["margin"]),
                        margin_checkable=row["margin_checkable"].strip().lower() == "true",
                    )
                )
            except (ValueError, ZeroDivisionError) as exc:
                raise DatasetError(f"{path}:{lineno}: {exc}") from exc
    if not out:
        raise DatasetError(f"empty reference file: {path}")
    return out


@dataclass(frozen=True)
class CheckRow:
    """One compared field of one season."""

    season: str
    field: str
    expected: str
    actual: str
    checked: bool
    ok: bool


@dataclass(frozen=True)
class ValidationReport:
    rows: tuple[CheckRow, ...]

    @property
    def mismatches(self) -> tuple[CheckRow, ...]:
        return tuple(row for row in self.rows if row.checked and not row.ok)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _season_slice(dataset: Dataset, season: str) -> list[RaceResult]:
    return [race for race in dataset.races if race.source_season == season]


def validate_against_reference(dataset: Dataset, reference: list[ReferenceRow]) -> ValidationReport:
    """Compare recomputed season characteristics against a reference table.

    Driver and race counts are compared for every season.  The clinch race
    and the champion's final margin are recomputed under the plain
    25-18-15-... table with points-then-wins ranking, and compared only for
    rows flagged ``margin_checkable`` (seasons actually run under different
    tables or with bonus points cannot match a plain recomputation).
    """
    rule = preset_rule("S4")
    rows: list[CheckRow] = []
    for ref in reference:
        races = _season_slice(dataset, ref.season)
        if not races:
            rows.append(
                CheckRow(ref.season, "present", "yes", "no", checked=True, ok=False)
            )
            continue
        season = SeasonOutcome(tuple(races))
        classified_ever = {
            idx + 1
            for race in races
            for idx, place in enumerate(race.positions)
            if place is not None
        }
        drivers_actual = len(classified_ever)
        rows.append(
            CheckRow(
                ref.season,
                "drivers",
                str(ref.drivers),
                str(drivers_actual),
                checked=True,
                ok=drivers_actual == ref.drivers,
            )
        )
        rows.append(
            CheckRow(
                ref.season,
                "races",
                str(ref.races),
                str(len(races)),
                checked=True,
                ok=len(races) == ref.races,
            )
        )
        standings = score_season(season, rule)
        champ_row, runner_row = standings[0], standings[1]
        margin = champ_row.points - runner_row.points
        clinched = clinch_index(season, rule, champ_row.driver)
        rows.append(
            CheckRow(
                ref.season,
                "clinched",
                str(ref.clinched),
                str(clinched),
                checked=ref.margin_checkable,
                ok=clinched == ref.clinched,
            )
        )
        rows.append(
            CheckRow(
                ref.season,
                "margin",
                str(ref.margin),
                str(margin),
                checked=ref.margin_checkable,
                ok=margin == ref.margin,
            )
        )
    return ValidationReport(tuple(rows))
