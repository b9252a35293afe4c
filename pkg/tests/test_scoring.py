"""Scoring rule construction and the rule-spec string grammar.

Preset vectors are pinned against the published championship tables they
implement.  The geometric family is checked structurally: gap ratios, the
anchor at the last place, and the linear case.
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from clinchsim.domain import ScoringRule, ValidationError
from clinchsim.scoring import (
    DEFAULT_RULE_SPECS,
    PRESETS,
    geometric_rule,
    normalize_to_100,
    parse_rule_spec,
    points_for,
    preset_rule,
)

# Official tables, transcribed by hand.
EXPECTED_PRESETS = {
    "S1": (9, 6, 4, 3, 2, 1, 0, 0, 0, 0),
    "S2": (10, 6, 4, 3, 2, 1, 0, 0, 0, 0),
    "S3": (10, 8, 6, 5, 4, 3, 2, 1, 0, 0),
    "S4": (25, 18, 15, 12, 10, 8, 6, 4, 2, 1),
    "M1993": (25, 20, 16, 13, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1),
}


@pytest.mark.parametrize("name", sorted(EXPECTED_PRESETS))
def test_preset_vectors(name):
    rule = preset_rule(name)
    assert rule.scores == tuple(Fraction(v) for v in EXPECTED_PRESETS[name])
    assert rule.name == name


def test_presets_registry_is_complete():
    assert set(PRESETS) == set(EXPECTED_PRESETS)


def test_preset_lookup_ignores_case():
    assert preset_rule("s4").name == "S4"
    with pytest.raises(ValidationError):
        preset_rule("S9")


def test_linear_case():
    rule = geometric_rule(1)
    assert rule.scores == tuple(Fraction(v) for v in range(10, 0, -1))
    assert rule.name == "G:1"
    assert rule.geometric_p == 1


def test_geometric_structure():
    # Defining property: adjacent gaps form a geometric progression with
    # ratio p, equivalently s_j = p * s_{j+1} + 1, and the last place pays 1.
    for p in (Fraction(21, 20), Fraction(13, 10), Fraction(8, 5), Fraction(3)):
        rule = geometric_rule(p)
        assert rule.scores[-1] == 1
        for j in range(rule.places - 1):
            assert rule.scores[j] == p * rule.scores[j + 1] + 1


def test_geometric_place_count():
    assert geometric_rule(Fraction(3, 2), places=4).places == 4
    with pytest.raises(ValidationError):
        geometric_rule(0)
    with pytest.raises(ValidationError):
        geometric_rule(2, places=0)


def test_geometric_names_render_like_input():
    assert geometric_rule(Fraction("1.05")).name == "G:1.05"
    assert geometric_rule(Fraction("1.6")).name == "G:1.6"
    assert geometric_rule(Fraction(1, 3)).name == "G:1/3"


def test_points_for_handles_unscored_positions():
    rule = preset_rule("S2")
    assert points_for(rule, 1) == 10
    assert points_for(rule, 6) == 1
    assert points_for(rule, 7) == 0
    assert points_for(rule, 15) == 0
    assert points_for(rule, None) == 0


def test_normalize_to_100_is_exact():
    scaled = normalize_to_100(preset_rule("S4"))
    assert scaled[0] == 100
    assert scaled[1] == Fraction(100 * 18, 25)  # 72
    # Proportionality, not rounding: every entry is an exact rational.
    assert all(isinstance(v, Fraction) for v in scaled)

    g = geometric_rule(Fraction("1.6"))
    scaled_g = normalize_to_100(g)
    assert scaled_g[0] == 100
    assert scaled_g[-1] == 100 / g.scores[0]


def test_parse_presets_and_families():
    assert parse_rule_spec("s3").name == "S3"
    assert parse_rule_spec("G:1.3").geometric_p == Fraction(13, 10)
    assert parse_rule_spec("G:21/20").geometric_p == Fraction(21, 20)
    custom = parse_rule_spec("V:10, 5, 1")
    assert custom.scores == (Fraction(10), Fraction(5), Fraction(1))
    assert custom.name == "V:10,5,1"


@pytest.mark.parametrize(
    "spec",
    ["", "   ", "X7", "G:", "G:zero", "G:-1", "V:", "V:1,2", "V:a,b"],
)
def test_parse_rejects_malformed_specs(spec):
    with pytest.raises(ValidationError):
        parse_rule_spec(spec)


def test_default_specs_all_parse():
    rules = [parse_rule_spec(spec) for spec in DEFAULT_RULE_SPECS]
    assert [r.name for r in rules] == list(DEFAULT_RULE_SPECS)
    # The default experiment mixes the four historical tables with four
    # members of the geometric family.
    assert sum(1 for r in rules if r.geometric_p is not None) == 4


def test_rules_are_value_objects():
    assert parse_rule_spec("S4") == preset_rule("S4")
    assert parse_rule_spec("G:1.3") == geometric_rule(Fraction("1.3"))
    assert isinstance(preset_rule("S1"), ScoringRule)
