"""Builders for the explanation payloads: the interest overview (What), the
abstract and detailed justifications (Why), and the three-stage pipeline
trace (How).

All builders are pure and read exclusively from the scored recommendation and
the model, so every view shows the same numbers the recommender actually
used. Payloads serialize under "schema_version": 1.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels, recommender
from .errors import ExplainRecError
from .interests import Interest, InterestModel

SCHEMA_VERSION = 1

DEFAULT_HIGHLIGHT_THRESHOLD = 0.40

STAGE1_NAME = "get user interests and publication keyphrases"
STAGE2_NAME = "generate embeddings"
STAGE3_NAME = "compute similarity"

VECTOR_DISPLAY_COMPONENTS = 5


@dataclass(frozen=True)
class WhatPayload:
    interests: tuple[Interest, ...]

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "interests": [
                {"label": i.label, "weight": i.weight, "color_index": i.color_index}
                for i in self.interests],
        }

    @staticmethod
    def from_dict(data: dict) -> "WhatPayload":
        return WhatPayload(interests=tuple(
            Interest(label=i["label"], weight=i["weight"], color_index=i["color_index"])
            for i in data["interests"]))


@dataclass(frozen=True)
class BandSegment:
    label: str
    color_index: int
    percent: float


@dataclass(frozen=True)
class Highlight:
    text: str
    color_index: int
    spans: tuple[tuple[int, int], ...]  # character offsets into the abstract


@dataclass(frozen=True)
class WhyAbstractPayload:
    display_percent: int
    band: tuple[BandSegment, ...]
    highlighted_keywords: tuple[Highlight, ...]

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "display_percent": self.display_percent,
            "band": [
                {"label": s.label, "color_index": s.color_index, "percent": s.percent}
                for s in self.band],
            "highlighted_keywords": [
                {"text": h.text, "color_index": h.color_index,
                 "spans": [list(s) for s in h.spans]}
                for h in self.highlighted_keywords],
        }

    @staticmethod
    def from_dict(data: dict) -> "WhyAbstractPayload":
        return WhyAbstractPayload(
            display_percent=data["display_percent"],
            band=tuple(BandSegment(s["label"], s["color_index"], s["percent"])
                       for s in data["band"]),
            highlighted_keywords=tuple(
                Highlight(h["text"], h["color_index"],
                          tuple(tuple(s) for s in h["spans"]))
                for h in data["highlighted_keywords"]))


@dataclass(frozen=True)
class WhyDetailedPayload:
    tagcloud: tuple[tuple[str, float], ...]          # (keyphrase, size in (0,1])
    bars: dict[str, tuple[tuple[str, float], ...]]   # keyphrase -> (label, percent)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "tagcloud": [{"text": t, "size": s} for t, s in self.tagcloud],
            "bars": {
                text: [{"label": label, "percent": pct} for label, pct in rows]
                for text, rows in self.bars.items()},
        }

    @staticmethod
    def from_dict(data: dict) -> "WhyDetailedPayload":
        return WhyDetailedPayload(
            tagcloud=tuple((e["text"], e["size"]) for e in data["tagcloud"]),
            bars={text: tuple((r["label"], r["percent"]) for r in rows)
                  for text, rows in data["bars"].items()})


@dataclass(frozen=True, eq=False)
class HowTrace:
    """Three-stage record of how one recommendation was computed.

    Stage-2 vectors are kept at full precision in memory; serialization
    truncates them to their first components plus the norm unless
    full_vectors is requested.
    """
    interests: tuple[tuple[str, float], ...]            # stage 1: (label, weight)
    keyphrases: tuple[tuple[str, float], ...]           # stage 1: (text, salience)
    interest_vectors: dict[str, np.ndarray]             # stage 2
    keyphrase_vectors: dict[str, np.ndarray]            # stage 2
    model_vector: np.ndarray                            # stage 2 aggregate
    publication_vector: np.ndarray                      # stage 2 aggregate
    dot: float                                          # stage 3
    model_norm: float
    publication_norm: float
    cosine: float                                       # signed, pre-clamp
    display_percent: int

    def __eq__(self, other):
        if not isinstance(other, HowTrace):
            return NotImplemented
        def veq(a: dict, b: dict) -> bool:
            return a.keys() == b.keys() and all(
                np.array_equal(a[k], b[k]) for k in a)
        return (self.interests == other.interests
                and self.keyphrases == other.keyphrases
                and veq(self.interest_vectors, other.interest_vectors)
                and veq(self.keyphrase_vectors, other.keyphrase_vectors)
                and np.array_equal(self.model_vector, other.model_vector)
                and np.array_equal(self.publication_vector, other.publication_vector)
                and (self.dot, self.model_norm, self.publication_norm,
                     self.cosine, self.display_percent)
                == (other.dot, other.model_norm, other.publication_norm,
                    other.cosine, other.display_percent))

    @staticmethod
    def _vector_dict(vec: np.ndarray, full: bool) -> dict:
        head = [float(v) for v in vec[:VECTOR_DISPLAY_COMPONENTS]]
        out = {"head": head, "norm": float(np.linalg.norm(vec)), "dim": int(vec.size)}
        if full:
            out["values"] = [float(v) for v in vec]
        return out

    def to_dict(self, full_vectors: bool = False) -> dict:
        vd = lambda v: self._vector_dict(v, full_vectors)
        return {
            "schema_version": SCHEMA_VERSION,
            "stage1": {
                "name": STAGE1_NAME,
                "interests": [{"label": l, "weight": w} for l, w in self.interests],
                "keyphrases": [{"text": t, "salience": s} for t, s in self.keyphrases],
            },
            "stage2": {
                "name": STAGE2_NAME,
                "interest_vectors": {l: vd(v) for l, v in self.interest_vectors.items()},
                "keyphrase_vectors": {t: vd(v) for t, v in self.keyphrase_vectors.items()},
                "model_vector": vd(self.model_vector),
                "publication_vector": vd(self.publication_vector),
            },
            "stage3": {
                "name": STAGE3_NAME,
                "dot": self.dot,
                "model_norm": self.model_norm,
                "publication_norm": self.publication_norm,
                "cosine": self.cosine,
                "display_percent": self.display_percent,
            },
        }

    @staticmethod
    def from_dict(data: dict) -> "HowTrace":
        def vec(d: dict) -> np.ndarray:
            if "values" not in d:
                raise ExplainRecError(
                    "trace was serialized without full vectors; cannot rebuild")
            return np.array(d["values"], dtype=np.float64)

        s1, s2, s3 = data["stage1"], data["stage2"], data["stage3"]
        return HowTrace(
            interests=tuple((i["label"], i["weight"]) for i in s1["interests"]),
            keyphrases=tuple((k["text"], k["salience"]) for k in s1["keyphrases"]),
            interest_vectors={l: vec(v) for l, v in s2["interest_vectors"].items()},
            keyphrase_vectors={t: vec(v) for t, v in s2["keyphrase_vectors"].items()},
            model_vector=vec(s2["model_vector"]),
            publication_vector=vec(s2["publication_vector"]),
            dot=s3["dot"],
            model_norm=s3["model_norm"],
            publication_norm=s3["publication_norm"],
            cosine=s3["cosine"],
            display_percent=s3["display_percent"])


def percent(value: float) -> float:
    """Similarity as a percentage with two decimals (bar-chart resolution)."""
    return round(value * 100.0, 2)


def build_what(model: InterestModel) -> WhatPayload:
    """The active top-5 interests, verbatim, in weight order."""
    return WhatPayload(interests=model.active)


def find_spans(abstract: str, phrase: str) -> tuple[tuple[int, int], ...]:
    """Non-overlapping case-insensitive occurrences of phrase in abstract."""
    spans = []
    haystack = abstract.lower()
    needle = phrase.lower()
    start = 0
    while True:
        i = haystack.find(needle, start)
        if i < 0:
            break
        spans.append((i, i + len(needle)))
        start = i + len(needle)
    return tuple(spans)


def build_why_abstract(rec: recommender.ScoredRecommendation, model: InterestModel,
                       highlight_threshold: float = DEFAULT_HIGHLIGHT_THRESHOLD,
                       ) -> WhyAbstractPayload:
    """Similarity percent, per-interest color band, and keyword highlights.

    A keyword is highlighted when its similarity to its most similar interest
    reaches the highlight threshold; it takes that interest's color. Spans
    are located by case-insensitive verbatim search in the abstract.
    """
    colors = {i.label: i.color_index for i in model.active}
    band = tuple(
        BandSegment(label=i.label, color_index=i.color_index,
                    percent=percent(rec.per_interest[i.label]))
        for i in model.active if i.label in rec.per_interest)

    highlights = []
    for text, row in rec.per_keyword.items():
        best_label = rec.best_interest_per_keyword[text]
        if row[best_label] >= highlight_threshold:
            highlights.append(Highlight(
                text=text,
                color_index=colors[best_label],
                spans=find_spans(rec.publication.abstract, text)))
    return WhyAbstractPayload(
        display_percent=rec.display_percent,
        band=band,
        highlighted_keywords=tuple(highlights))


def build_why_detailed(rec: recommender.ScoredRecommendation) -> WhyDetailedPayload:
    """Tag cloud sized by salience (max-normalized) and per-keyword bars over
    every active interest, unnormalized."""
    saliences = {p.text: p.salience for p in rec.publication.keyphrases}
    scored = [(t, saliences[t]) for t in rec.per_keyword if t in saliences]
    top = max((s for _, s in scored), default=1.0)
    tagcloud = tuple((t, s / top if top > 0 else 1.0) for t, s in scored)
    bars = {
        text: tuple((label, percent(sim)) for label, sim in row.items())
        for text, row in rec.per_keyword.items()}
    return WhyDetailedPayload(tagcloud=tagcloud, bars=bars)


def build_how_trace(model: InterestModel, rec: recommender.ScoredRecommendation,
                    store) -> HowTrace:
    """The personalized three-stage trace for one recommendation.

    Stage-2 aggregates come from the same functions the recommender ran, so
    recomputing the stage-3 cosine from them reproduces the recommendation's
    score exactly (trace fidelity).
    """
    interests, interest_rows = recommender.active_interest_embeddings(model, store)
    phrases, phrase_rows = recommender.publication_keyphrase_embeddings(
        rec.publication, store)
    model_vec = recommender.model_embedding(model, store)
    pub_vec = recommender.publication_embedding(rec.publication, store)
    dot, model_norm, pub_norm, cosine = kernels.cosine_parts(model_vec, pub_vec)
    return HowTrace(
        interests=tuple((i.label, i.weight) for i in interests),
        keyphrases=tuple((p.text, p.salience) for p in phrases),
        interest_vectors={i.label: row for i, row in zip(interests, interest_rows)},
        keyphrase_vectors={p.text: row for p, row in zip(phrases, phrase_rows)},
        model_vector=model_vec,
        publication_vector=pub_vec,
        dot=dot,
        model_norm=model_norm,
        publication_norm=pub_norm,
        cosine=cosine,
        display_percent=rec.display_percent)
