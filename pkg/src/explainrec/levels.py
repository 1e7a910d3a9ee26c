"""Explanation levels of detail and the completeness/soundness lattice behind
them.

Of the nine completeness x soundness combinations only three are served:
medium completeness with low soundness (basic), medium with medium
(intermediate), and high with high (advanced). Low completeness
oversimplifies; raising soundness without completeness (or past it, as in
medium-completeness/high-soundness) over-complicates. Each level carries a
fixed, strictly nested set of intelligibility types.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any

from . import explanations, whatif
from .interests import InterestModel
from .recommender import ScoredRecommendation


class IntelligibilityType(Enum):
    WHAT = "what"
    WHAT_IF = "what_if"
    WHY_ABSTRACT = "why_abstract"
    WHY_DETAILED = "why_detailed"
    HOW = "how"


class Completeness(Enum):
    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"


class Soundness(Enum):
    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"


class ExplanationLevel(Enum):
    BASIC = "basic"
    INTERMEDIATE = "intermediate"
    ADVANCED = "advanced"


_BASIC_TYPES = frozenset({
    IntelligibilityType.WHAT,
    IntelligibilityType.WHAT_IF,
    IntelligibilityType.WHY_ABSTRACT,
})

LEVEL_TABLE: dict[ExplanationLevel, tuple[Completeness, Soundness, frozenset]] = {
    ExplanationLevel.BASIC: (Completeness.MEDIUM, Soundness.LOW, _BASIC_TYPES),
    ExplanationLevel.INTERMEDIATE: (
        Completeness.MEDIUM, Soundness.MEDIUM,
        _BASIC_TYPES | {IntelligibilityType.WHY_DETAILED}),
    ExplanationLevel.ADVANCED: (
        Completeness.HIGH, Soundness.HIGH,
        _BASIC_TYPES | {IntelligibilityType.WHY_DETAILED, IntelligibilityType.HOW}),
}


class RejectionReason(Enum):
    OVERSIMPLIFICATION = "oversimplification"
    OVER_COMPLEXITY = "over_complexity"
    SOUNDNESS_WITHOUT_COMPLETENESS = "soundness_without_completeness"


_REJECTION_DETAIL = {
    RejectionReason.OVERSIMPLIFICATION:
        "low completeness explains too little of the system to be effective",
    RejectionReason.OVER_COMPLEXITY:
        "raising soundness past completeness overwhelms without explaining more "
        "of the system",
    RejectionReason.SOUNDNESS_WITHOUT_COMPLETENESS:
        "high completeness requires matching high soundness; lower soundness "
        "leaves the exposed parts inaccurately described",
}


@dataclass(frozen=True)
class CombinationCheck:
    completeness: Completeness
    soundness: Soundness
    valid: bool
    level: ExplanationLevel | None = None
    reason: RejectionReason | None = None

    @property
    def detail(self) -> str:
        if self.valid:
            return f"served as the {self.level.value} explanation level"
        return _REJECTION_DETAIL[self.reason]

    def to_dict(self) -> dict:
        out = {"completeness": self.completeness.value,
               "soundness": self.soundness.value,
               "valid": self.valid, "detail": self.detail}
        if self.valid:
            out["level"] = self.level.value
        else:
            out["reason"] = self.reason.value
        return out


_VALID = {
    (Completeness.MEDIUM, Soundness.LOW): ExplanationLevel.BASIC,
    (Completeness.MEDIUM, Soundness.MEDIUM): ExplanationLevel.INTERMEDIATE,
    (Completeness.HIGH, Soundness.HIGH): ExplanationLevel.ADVANCED,
}


def validate_combination(completeness: Completeness,
                         soundness: Soundness) -> CombinationCheck:
    """Check one completeness/soundness pair; rejection is a value with a
    reason code, not an error."""
    level = _VALID.get((completeness, soundness))
    if level is not None:
        return CombinationCheck(completeness, soundness, valid=True, level=level)
    if completeness is Completeness.LOW:
        reason = RejectionReason.OVERSIMPLIFICATION
    elif completeness is Completeness.MEDIUM:
        reason = RejectionReason.OVER_COMPLEXITY
    else:
        reason = RejectionReason.SOUNDNESS_WITHOUT_COMPLETENESS
    return CombinationCheck(completeness, soundness, valid=False, reason=reason)


def all_combinations() -> list[CombinationCheck]:
    """All nine pairs, row-major over (completeness, soundness)."""
    return [validate_combination(c, s) for c in Completeness for s in Soundness]


def types_for_level(level: ExplanationLevel) -> frozenset:
    return LEVEL_TABLE[level][2]


def level_for_combination(completeness: Completeness,
                          soundness: Soundness) -> ExplanationLevel | None:
    return _VALID.get((completeness, soundness))


ON_DEMAND = {"status": "available_on_demand"}


@dataclass(frozen=True)
class ExplanationBundle:
    level: ExplanationLevel
    payloads: dict[str, Any]

    def to_dict(self, full_vectors: bool = False) -> dict:
        rendered = {}
        for key, payload in self.payloads.items():
            if payload is None or isinstance(payload, dict):
                rendered[key] = payload
            elif isinstance(payload, explanations.HowTrace):
                rendered[key] = payload.to_dict(full_vectors=full_vectors)
            else:
                rendered[key] = payload.to_dict()
        return {"schema_version": explanations.SCHEMA_VERSION,
                "level": self.level.value, "payloads": rendered}

    @staticmethod
    def from_dict(data: dict) -> "ExplanationBundle":
        level = ExplanationLevel(data["level"])
        decoders = {
            IntelligibilityType.WHAT.value: explanations.WhatPayload.from_dict,
            IntelligibilityType.WHY_ABSTRACT.value:
                explanations.WhyAbstractPayload.from_dict,
            IntelligibilityType.WHY_DETAILED.value:
                explanations.WhyDetailedPayload.from_dict,
            IntelligibilityType.HOW.value: explanations.HowTrace.from_dict,
        }
        payloads = {}
        for key, raw in data["payloads"].items():
            if key in decoders and not (isinstance(raw, dict) and "status" in raw):
                payloads[key] = decoders[key](raw)
            else:
                payloads[key] = raw
        return ExplanationBundle(level=level, payloads=payloads)


def assemble(level: ExplanationLevel, model: InterestModel,
             rec: ScoredRecommendation, store,
             diff: whatif.WhatIfDiff | None = None,
             highlight_threshold: float = explanations.DEFAULT_HIGHLIGHT_THRESHOLD,
             ) -> ExplanationBundle:
    """Build exactly the payloads of the level's type set.

    The what-if slot carries a real diff only when one is supplied; otherwise
    it holds an on-demand marker, matching the interface contract where
    what-if runs only when the user opens the panel.
    """
    wanted = types_for_level(level)
    payloads: dict[str, Any] = {}
    if IntelligibilityType.WHAT in wanted:
        payloads[IntelligibilityType.WHAT.value] = explanations.build_what(model)
    if IntelligibilityType.WHAT_IF in wanted:
        payloads[IntelligibilityType.WHAT_IF.value] = (
            diff.to_dict() if diff is not None else dict(ON_DEMAND))
    if IntelligibilityType.WHY_ABSTRACT in wanted:
        payloads[IntelligibilityType.WHY_ABSTRACT.value] = (
            explanations.build_why_abstract(rec, model, highlight_threshold))
    if IntelligibilityType.WHY_DETAILED in wanted:
        payloads[IntelligibilityType.WHY_DETAILED.value] = (
            explanations.build_why_detailed(rec))
    if IntelligibilityType.HOW in wanted:
        payloads[IntelligibilityType.HOW.value] = (
            explanations.build_how_trace(model, rec, store))
    return ExplanationBundle(level=level, payloads=payloads)
