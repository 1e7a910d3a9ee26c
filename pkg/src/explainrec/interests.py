"""Weighted user-interest models: inference from the user's own publications,
manual creation, and pure (copy-on-write) edits.

The active set is always the five highest-weight interests, ties broken
lexicographically; only active interests carry a color index (their stable
palette slot, reused consistently across every explanation view).
"""

from dataclasses import dataclass

from . import embeddings, textpipe
from .errors import (
    DuplicateLabel,
    EmptyDocument,
    LabelNotEmbeddable,
    NoUsablePhrases,
    UnknownLabel,
    WeightOutOfRange,
)

ACTIVE_SIZE = 5


@dataclass(frozen=True)
class Interest:
    label: str
    weight: float
    color_index: int | None = None


@dataclass(frozen=True)
class InterestModel:
    user_id: str
    interests: tuple[Interest, ...]

    @property
    def active(self) -> tuple[Interest, ...]:
        """The top-5 interests by weight (the recommendation input)."""
        return self.interests[:min(ACTIVE_SIZE, len(self.interests))]

    def get(self, label: str) -> Interest | None:
        key = label.lower()
        for interest in self.interests:
            if interest.label.lower() == key:
                return interest
        return None


@dataclass(frozen=True)
class InterestEdit:
    op: str  # "add" | "remove" | "reweight"
    label: str
    weight: float | None = None

    @staticmethod
    def from_dict(data: dict) -> "InterestEdit":
        op = data.get("op")
        if op not in ("add", "remove", "reweight"):
            raise ValueError(f"unknown edit op: {op!r}")
        label = data.get("label")
        if not isinstance(label, str) or not label.strip():
            raise ValueError("edit needs a non-empty label")
        weight = data.get("weight")
        if op in ("add", "reweight"):
            if not isinstance(weight, (int, float)):
                raise ValueError(f"{op} edit needs a numeric weight")
            weight = float(weight)
        else:
            weight = None
        return InterestEdit(op=op, label=label.strip(), weight=weight)


def _build_model(user_id: str, weighted: dict[str, float]) -> InterestModel:
    """Sort by weight desc (label asc on ties) and hand out color slots 0..4
    to the active set."""
    ordered = sorted(weighted.items(), key=lambda kv: (-kv[1], kv[0].lower()))
    interests = tuple(
        Interest(label=label, weight=weight,
                 color_index=i if i < ACTIVE_SIZE else None)
        for i, (label, weight) in enumerate(ordered))
    return InterestModel(user_id=user_id, interests=interests)


def _check_weight(weight: float) -> float:
    if not (0.0 < weight <= 1.0):
        raise WeightOutOfRange(f"weight {weight} outside (0, 1]")
    return float(weight)


def _check_embeddable(store: embeddings.EmbeddingStore, label: str) -> None:
    if embeddings.phrase_embedding(store, label) is None:
        raise LabelNotEmbeddable(label)


def infer_interests(user_publications, store: embeddings.EmbeddingStore,
                    n: int = 10, max_phrases: int = textpipe.DEFAULT_MAX_PHRASES,
                    user_id: str = "") -> InterestModel:
    """Infer a weighted interest model from the user's publications.

    Keyphrases are extracted per publication and merged additively across
    publications; phrases without an in-vocabulary embedding are dropped;
    weights are scaled so the strongest interest has weight 1.0; the top n
    survive.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    merged: dict[str, float] = {}
    for pub in user_publications:
        phrases = pub.keyphrases
        if not phrases:
            try:
                phrases = textpipe.extract_keyphrases(pub.title, pub.abstract, max_phrases)
            except EmptyDocument:
                continue
        for phrase in phrases:
            merged[phrase.text] = merged.get(phrase.text, 0.0) + phrase.salience

    embeddable = {
        text: salience for text, salience in merged.items()
        if embeddings.phrase_embedding(store, text) is not None}
    if not embeddable:
        raise NoUsablePhrases("no embeddable keyphrase in any publication")

    top = max(embeddable.values())
    normalized = {text: salience / top for text, salience in embeddable.items()}
    kept = dict(sorted(normalized.items(), key=lambda kv: (-kv[1], kv[0].lower()))[:n])
    return _build_model(user_id, kept)


def build_manual_model(user_id: str, items, store: embeddings.EmbeddingStore) -> InterestModel:
    """Model from user-entered (label, weight) pairs, bypassing inference.

    Weights are taken verbatim (no normalization); labels must be unique
    case-insensitively and have an in-vocabulary embedding.
    """
    weighted: dict[str, float] = {}
    seen = set()
    for label, weight in items:
        label = label.strip()
        if not label:
            raise ValueError("interest label must be non-empty")
        key = label.lower()
        if key in seen:
            raise DuplicateLabel(label)
        seen.add(key)
        _check_embeddable(store, label)
        weighted[label] = _check_weight(weight)
    if not weighted:
        raise NoUsablePhrases("manual interest list is empty")
    return _build_model(user_id, weighted)


def model_from_profile(profile, store: embeddings.EmbeddingStore,
                       n: int = 10) -> InterestModel:
    """Model for a loaded profile: manual interests when present, otherwise
    inference from the profile's publications."""
    if profile.manual_interests is not None:
        return build_manual_model(profile.user_id, profile.manual_interests, store)
    return infer_interests(profile.publications, store, n=n, user_id=profile.user_id)


def edit_interests(model: InterestModel, edits,
                   store: embeddings.EmbeddingStore) -> InterestModel:
    """Apply add / remove / reweight edits, returning a new model.

    The input model is never touched. User-entered weights are kept verbatim
    (no renormalization), so the what-if panel shows exactly what was typed.
    Edits apply in order; each validates against the state left by the
    previous one.
    """
    weighted = {i.label: i.weight for i in model.interests}
    lower = {label.lower(): label for label in weighted}
    for edit in edits:
        key = edit.label.lower()
        if edit.op == "add":
            if key in lower:
                raise DuplicateLabel(edit.label)
            _check_embeddable(store, edit.label)
            weighted[edit.label] = _check_weight(edit.weight)
            lower[key] = edit.label
        elif edit.op == "remove":
            if key not in lower:
                raise UnknownLabel(edit.label)
            del weighted[lower.pop(key)]
        elif edit.op == "reweight":
            if key not in lower:
                raise UnknownLabel(edit.label)
            weighted[lower[key]] = _check_weight(edit.weight)
        else:
            raise ValueError(f"unknown edit op: {edit.op!r}")
    return _build_model(model.user_id, weighted)
