"""Scoring rules: historical presets, the geometric family, and custom vectors.

The geometric family assigns place ``j`` of ``L`` scored places the value

    s_j = (p**(L + 1 - j) - 1) / (p - 1)        for p != 1
    s_j = L + 1 - j                             for p = 1 (the linear limit)

so adjacent score gaps form a geometric progression with ratio ``p`` and the
last scored place is always worth exactly 1 (for ``p != 1``).  Small ``p``
spreads reward evenly down the field; large ``p`` concentrates it at the
front.  All arithmetic is exact over rationals.
"""

from __future__ import annotations

from fractions import Fraction

from .domain import ScoringRule, ValidationError, Position

__all__ = [
    "PRESETS",
    "preset_rule",
    "geometric_rule",
    "points_for",
    "normalize_to_100",
    "parse_rule_spec",
    "DEFAULT_RULE_SPECS",
]

# Score vectors of well-known championships.  S1..S4 are successive Formula
# One systems (S1 until 1990, S2 1991-2002, S3 2003-2009, S4 from 2010);
# M1993 is the 15-place motorcycling table introduced in 1993.
PRESETS: dict[str, tuple[int, ...]] = {
    "S1": (9, 6, 4, 3, 2, 1, 0, 0, 0, 0),
    "S2": (10, 6, 4, 3, 2, 1, 0, 0, 0, 0),
    "S3": (10, 8, 6, 5, 4, 3, 2, 1, 0, 0),
    "S4": (25, 18, 15, 12, 10, 8, 6, 4, 2, 1),
    "M1993": (25, 20, 16, 13, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1),
}

# The rule set evaluated by default in experiments: the four historical
# Formula One tables and four members of the geometric family.
DEFAULT_RULE_SPECS: tuple[str, ...] = (
    "S1",
    "S2",
    "S3",
    "S4",
    "G:1",
    "G:1.05",
    "G:1.3",
    "G:1.6",
)


def preset_rule(name: str) -> ScoringRule:
    """Return a named historical scoring rule.

    Raises
    ------
    ValidationError
        If ``name`` is not one of the known presets.
    """
    key = name.upper()
    if key not in PRESETS:
        known = ", ".join(sorted(PRESETS))
        raise ValidationError(f"unknown preset {name!r} (known: {known})")
    return ScoringRule(name=key, scores=tuple(Fraction(v) for v in PRESETS[key]))


def geometric_rule(p: Fraction | int | str, places: int = 10) -> ScoringRule:
    """Construct the geometric rule with ratio ``p`` over ``places`` places."""
    p = Fraction(p)
    if p <= 0:
        raise ValidationError("the geometric ratio must be positive")
    if places < 1:
        raise ValidationError("a scoring rule needs at least one place")
    if p == 1:
        scores = tuple(Fraction(places + 1 - j) for j in range(1, places + 1))
    else:
        scores = tuple(
            (p ** (places + 1 - j) - 1) / (p - 1) for j in range(1, places + 1)
        )
    name = f"G:{_format_ratio(p)}"
    return ScoringRule(name=name, scores=scores, geometric_p=p)


def _format_ratio(p: Fraction) -> str:
    """Render a ratio the way a user would type it: decimal when exact."""
    if p.denominator == 1:
        return str(p.numerator)
    scaled = p * 10000
    if scaled.denominator == 1:
        text = f"{float(p):.4f}".rstrip("0")
        return text.rstrip(".") if text.endswith(".") else text
    return f"{p.numerator}/{p.denominator}"


def points_for(rule: ScoringRule, position: Position) -> Fraction:
    """Points awarded for one finishing position under ``rule``.

    Unclassified drivers and places beyond the scored range earn zero.
    """
    if position is None or position > rule.places:
        return Fraction(0)
    return rule.scores[position - 1]


def normalize_to_100(rule: ScoringRule) -> tuple[Fraction, ...]:
    """Scale the score vector so first place is worth exactly 100.

    Scaling by a positive constant preserves every pairwise comparison, so
    the normalized vector ranks any season identically to the original.
    """
    s1 = rule.scores[0]
    return tuple(100 * s / s1 for s in rule.scores)


def parse_rule_spec(spec: str) -> ScoringRule:
    """Parse a rule specification string.

    Grammar::

        S1 | S2 | S3 | S4 | M1993      named presets
        G:<p>                          geometric rule with ratio p (decimal or fraction)
        V:<v1>,<v2>,...                custom non-increasing vector

    Raises
    ------
    ValidationError
        On unknown names, malformed numbers, or invariant violations (for
        example an increasing custom vector).
    """
    text = spec.strip()
    if not text:
        raise ValidationError("empty rule spec")
    upper = text.upper()
    if upper in PRESETS:
        return preset_rule(upper)
    if upper.startswith("G:"):
        raw = text[2:].strip()
        try:
            p = Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"bad geometric ratio {raw!r}") from exc
        return geometric_rule(p)
    if upper.startswith("V:"):
        raw = text[2:].strip()
        parts = [part.strip() for part in raw.split(",") if part.strip()]
        if not parts:
            raise ValidationError("custom rule needs at least one score")
        try:
            scores = tuple(Fraction(part) for part in parts)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"bad score value in {raw!r}") from exc
        return ScoringRule(name=f"V:{','.join(parts)}", scores=scores)
    raise ValidationError(
        f"unrecognized rule spec {spec!r}; expected a preset name, G:<p>, or V:<v1,v2,...>"
    )
