"""Score candidate publications against an interest model and apply the
display threshold and top-k cutoff.

Every intermediate quantity the explanations need is recorded on the scored
item: the overall similarity, the per-interest similarities (deliberately
unnormalized; they may sum past 1.0), the keyword-vs-interest similarity grid,
and the argmax attribution of each keyword to its most similar interest.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import embeddings, kernels
from .corpus import Publication
from .errors import NoEmbeddableInterests, NoEmbeddableKeyphrases
from .interests import InterestModel

DEFAULT_TOP_K = 10
DEFAULT_THRESHOLD = 0.40


@dataclass(frozen=True)
class ScoredRecommendation:
    publication: Publication
    overall_score: float
    display_percent: int
    per_interest: dict[str, float]
    per_keyword: dict[str, dict[str, float]]
    best_interest_per_keyword: dict[str, str]


@dataclass(frozen=True)
class RecommendationSet:
    items: tuple[ScoredRecommendation, ...]
    threshold: float = DEFAULT_THRESHOLD
    k: int = DEFAULT_TOP_K


def display_percent(score: float) -> int:
    """Integer percent, rounded half up (the UI speaks in whole percents)."""
    return int(math.floor(score * 100.0 + 0.5))


def _clamp0(value: float) -> float:
    return value if value > 0.0 else 0.0


def active_interest_embeddings(model: InterestModel, store) -> tuple[list, np.ndarray]:
    """(active embeddable interests, their stacked phrase embeddings)."""
    rows = []
    kept = []
    for interest in model.active:
        vec = embeddings.phrase_embedding(store, interest.label)
        if vec is not None:
            kept.append(interest)
            rows.append(vec)
    if not kept:
        raise NoEmbeddableInterests("no active interest is embeddable")
    return kept, np.stack(rows)


def model_embedding(model: InterestModel, store) -> np.ndarray:
    """Weight-averaged embedding of the active interests."""
    kept, rows = active_interest_embeddings(model, store)
    return embeddings.weighted_average(list(rows), [i.weight for i in kept])


def publication_keyphrase_embeddings(pub: Publication, store) -> tuple[list, np.ndarray]:
    """(embeddable keyphrases, their stacked phrase embeddings)."""
    rows = []
    kept = []
    for phrase in pub.keyphrases:
        vec = embeddings.phrase_embedding(store, phrase.text)
        if vec is not None:
            kept.append(phrase)
            rows.append(vec)
    if not kept:
        raise NoEmbeddableKeyphrases(f"publication {pub.id!r} has no embeddable keyphrase")
    return kept, np.stack(rows)


def publication_embedding(pub: Publication, store) -> np.ndarray:
    """Salience-weighted average of the publication's keyphrase embeddings."""
    kept, rows = publication_keyphrase_embeddings(pub, store)
    return embeddings.weighted_average(list(rows), [p.salience for p in kept])


def score(model: InterestModel, pub: Publication, store) -> ScoredRecommendation:
    """Score one publication, recording every quantity the explanations use."""
    interests, interest_rows = active_interest_embeddings(model, store)
    phrases, phrase_rows = publication_keyphrase_embeddings(pub, store)

    pub_vec = embeddings.weighted_average(
        list(phrase_rows), [p.salience for p in phrases])
    model_vec = embeddings.weighted_average(
        list(interest_rows), [i.weight for i in interests])

    overall = _clamp0(embeddings.cosine_similarity(model_vec, pub_vec))

    interest_vs_pub = kernels.pairwise_cosine(interest_rows, pub_vec[None, :])[:, 0]
    per_interest = {
        interest.label: _clamp0(float(sim))
        for interest, sim in zip(interests, interest_vs_pub)}

    grid = kernels.pairwise_cosine(phrase_rows, interest_rows)
    per_keyword: dict[str, dict[str, float]] = {}
    best: dict[str, str] = {}
    for pi, phrase in enumerate(phrases):
        row = {interests[ii].label: _clamp0(float(grid[pi, ii]))
               for ii in range(len(interests))}
        per_keyword[phrase.text] = row
        # argmax by similarity; ties go to the heavier interest, then the
        # lexicographically smaller label
        best[phrase.text] = min(
            interests,
            key=lambda it: (-row[it.label], -it.weight, it.label)).label
    return ScoredRecommendation(
        publication=pub,
        overall_score=overall,
        display_percent=display_percent(overall),
        per_interest=per_interest,
        per_keyword=per_keyword,
        best_interest_per_keyword=best)


def score_all(model: InterestModel, candidates, store) -> list[ScoredRecommendation]:
    """Every candidate scored, ordered by descending score then id."""
    scored = [score(model, pub, store) for pub in candidates]
    scored.sort(key=lambda r: (-r.overall_score, r.publication.id))
    return scored


def select(scored, k: int, threshold: float) -> RecommendationSet:
    """Cut an already-scored, already-ordered list down to the displayed set:
    keep scores strictly above the threshold, truncate to k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if not (0.0 <= threshold <= 1.0):
        raise ValueError("threshold must be in [0, 1]")
    kept = tuple(r for r in scored if r.overall_score > threshold)[:k]
    return RecommendationSet(items=kept, threshold=threshold, k=k)


def recommend(model: InterestModel, candidates, store,
              k: int = DEFAULT_TOP_K,
              threshold: float = DEFAULT_THRESHOLD) -> RecommendationSet:
    """Top-k candidates scoring strictly above the threshold.

    The comparison is strict: an item scoring exactly at the threshold is
    excluded. An empty result is a valid empty set, not an error. Evaluation
    order cannot affect the outcome; ties break by publication id.
    """
    return select(score_all(model, candidates, store), k, threshold)
