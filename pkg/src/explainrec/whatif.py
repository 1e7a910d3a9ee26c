"""What-if scenarios: apply interest edits, rescore the same candidate pool,
and report how each publication's recommendation status moved.

Scenarios never commit anything: the base model and the stored state are
untouched, so any number of scenarios can run concurrently against the shared
corpus. The candidate pool is deliberately the baseline pool (no refetch), so
the diff is attributable to the model edit alone.
"""

from dataclasses import dataclass
from enum import Enum

from . import recommender
from .errors import ScenarioEmpty
from .interests import InterestEdit, InterestModel, edit_interests


class RecommendationStatus(Enum):
    UNCHANGED_RECOMMENDED = "unchanged-recommended"
    NEWLY_RECOMMENDED = "newly-recommended"
    NO_LONGER_RECOMMENDED = "no-longer-recommended"
    UNCHANGED_ABSENT = "unchanged-absent"


@dataclass(frozen=True)
class WhatIfScenario:
    base_model: InterestModel
    edits: tuple[InterestEdit, ...]

    @staticmethod
    def from_dict(base_model: InterestModel, data: dict) -> "WhatIfScenario":
        edits = data.get("edits")
        if not isinstance(edits, list):
            raise ValueError("scenario needs an 'edits' list")
        return WhatIfScenario(
            base_model=base_model,
            edits=tuple(InterestEdit.from_dict(e) for e in edits))


@dataclass(frozen=True)
class PublicationDelta:
    publication_id: str
    status: RecommendationStatus
    old_score: float
    new_score: float


@dataclass(frozen=True)
class WhatIfDiff:
    deltas: tuple[PublicationDelta, ...]
    new_recommendations: recommender.RecommendationSet

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "statuses": [
                {"publication_id": d.publication_id, "status": d.status.value,
                 "old_score": d.old_score, "new_score": d.new_score}
                for d in self.deltas],
            "new_recommendations": {
                "threshold": self.new_recommendations.threshold,
                "k": self.new_recommendations.k,
                "items": [
                    {"publication_id": r.publication.id,
                     "overall_score": r.overall_score,
                     "display_percent": r.display_percent}
                    for r in self.new_recommendations.items],
            },
        }


def _status(in_base: bool, in_new: bool) -> RecommendationStatus:
    if in_base and in_new:
        return RecommendationStatus.UNCHANGED_RECOMMENDED
    if in_new:
        return RecommendationStatus.NEWLY_RECOMMENDED
    if in_base:
        return RecommendationStatus.NO_LONGER_RECOMMENDED
    return RecommendationStatus.UNCHANGED_ABSENT


def run_scenario(scenario: WhatIfScenario, candidates, store,
                 k: int = recommender.DEFAULT_TOP_K,
                 threshold: float = recommender.DEFAULT_THRESHOLD) -> WhatIfDiff:
    """Rescore the candidates under the edited model and diff against the
    baseline run with identical (candidates, k, threshold).

    Pure: neither the base model nor any stored state changes. Raises
    ScenarioEmpty when the edits strip the model of every interest.
    """
    edited = edit_interests(scenario.base_model, scenario.edits, store)
    if not edited.interests:
        raise ScenarioEmpty("scenario removes every interest")

    base_scored = recommender.score_all(scenario.base_model, candidates, store)
    new_scored = recommender.score_all(edited, candidates, store)

    base_set = recommender.select(base_scored, k, threshold)
    new_set = recommender.select(new_scored, k, threshold)
    base_ids = {r.publication.id for r in base_set.items}
    new_ids = {r.publication.id for r in new_set.items}

    old_scores = {r.publication.id: r.overall_score for r in base_scored}
    new_scores = {r.publication.id: r.overall_score for r in new_scored}

    deltas = tuple(
        PublicationDelta(
            publication_id=pub_id,
            status=_status(pub_id in base_ids, pub_id in new_ids),
            old_score=old_scores[pub_id],
            new_score=new_scores[pub_id])
        for pub_id in sorted(old_scores))
    return WhatIfDiff(deltas=deltas, new_recommendations=new_set)
