"""Positivity obstructions from Jones polynomial degrees.

All comparisons are done on quarter-unit integer exponents, so half-integer
link degrees are handled exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from posknot.laurent import LaurentPoly, ZeroPolynomialError, lp_invert_var, t_degrees

POSITIVE_MINDEG = "positive_min_degree"
FIBERED_BOUND = "fibered_max_degree_bound"
CROSSING_BOUND = "crossing_number_bound"


class Verdict(enum.Enum):
    NOT_POSITIVE = "NotPositive"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class ObstructionResult:
    name: str
    applicable: bool
    violated: bool
    details: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.violated and not self.applicable:
            raise ValueError("an obstruction cannot fire when it does not apply")

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "applicable": self.applicable,
            "violated": self.violated,
            "details": {k: _jsonable(v) for k, v in self.details.items()},
        }


def _jsonable(v):
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else str(v)
    return v


def _degrees(V: LaurentPoly) -> tuple[Fraction, Fraction]:
    if V.is_zero():
        raise ZeroPolynomialError("obstructions need a nonzero Jones polynomial")
    return t_degrees(V)


def check_positive_mindeg(V: LaurentPoly) -> ObstructionResult:
    """A positive knot has Jones polynomial of positive minimum degree."""
    lo, _ = _degrees(V)
    return ObstructionResult(POSITIVE_MINDEG, True, lo <= 0, {"min_deg": lo})


def fibered_bound(min_deg: Fraction, n: int) -> Fraction:
    return Fraction(8 * min_deg + n - 1, 2)


def check_fibered_bound(V: LaurentPoly, n: int = 1, fibered: bool = True) -> ObstructionResult:
    """``max deg V <= (8 min deg V + n - 1)/2`` for fibered positive links."""
    if n < 1:
        raise ValueError("component count must be positive")
    lo, hi = _degrees(V)
    bound = fibered_bound(lo, n)
    details = {"min_deg": lo, "max_deg": hi, "bound": bound, "n": n}
    return ObstructionResult(FIBERED_BOUND, fibered, fibered and hi > bound, details)


def check_lemma4(V: LaurentPoly, c_hypothetical: int) -> ObstructionResult:
    """``4 min deg V >= c`` for a reduced positive diagram with ``V_1 = 0``."""
    lo, _ = _degrees(V)
    return ObstructionResult(
        CROSSING_BOUND, True, 4 * lo < c_hypothetical, {"four_min_deg": 4 * lo, "c": c_hypothetical}
    )


@dataclass(frozen=True)
class FormResult:
    form: str
    polynomial: LaurentPoly
    obstructions: tuple[ObstructionResult, ...]

    @property
    def obstructed(self) -> bool:
        return any(o.violated for o in self.obstructions)


@dataclass(frozen=True)
class PositivityVerdict:
    name: str
    verdict: Verdict
    forms: tuple[FormResult, ...]

    @property
    def firing_obstructions(self) -> list[ObstructionResult]:
        return [o for f in self.forms for o in f.obstructions if o.violated]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "verdict": self.verdict.value,
            "forms": [
                {"form": f.form, "obstructions": [o.to_json() for o in f.obstructions]} for f in self.forms
            ],
        }


def _check_form(form: str, V: LaurentPoly, n: int, fibered: bool) -> FormResult:
    obs = (check_positive_mindeg(V), check_fibered_bound(V, n, fibered))
    return FormResult(form, V, obs)


def classify_positivity(V: LaurentPoly, fibered: bool, name: str = "", n: int = 1) -> PositivityVerdict:
    """NotPositive iff obstructions fire on both ``V`` and its mirror.

    The pipeline never certifies positivity; anything else is Inconclusive.
    """
    forms = (_check_form("as-given", V, n, fibered), _check_form("mirrored", lp_invert_var(V), n, fibered))
    verdict = Verdict.NOT_POSITIVE if all(f.obstructed for f in forms) else Verdict.INCONCLUSIVE
    return PositivityVerdict(name, verdict, forms)
