import json

import numpy as np
import pytest

from conftest import data_path
from explainrec import explanations, interests, kernels, recommender, textpipe
from explainrec.corpus import Publication
from explainrec.explanations import (
    HowTrace,
    WhatPayload,
    WhyAbstractPayload,
    build_how_trace,
    build_what,
    build_why_abstract,
    build_why_detailed,
    find_spans,
)


def pub(pub_id, title, abstract=""):
    return Publication(id=pub_id, title=title, abstract=abstract,
                       keyphrases=tuple(textpipe.extract_keyphrases(title, abstract)))


def manual(store, *pairs):
    return interests.build_manual_model("u", list(pairs), store)


@pytest.fixture(scope="module")
def alice_recs(store, corpus, alice_model):
    return recommender.recommend(alice_model, corpus, store)


# --- What ---------------------------------------------------------------------

def test_what_mirrors_active_set(alice_model):
    payload = build_what(alice_model)
    assert payload.interests == alice_model.active


def test_what_tracks_model_changes(tiny_store):
    model = manual(tiny_store, ("alpha", 0.9), ("beta", 0.5))
    edited = interests.edit_interests(
        model, [interests.InterestEdit("reweight", "beta", 1.0)], tiny_store)
    assert build_what(model) != build_what(edited)
    assert build_what(edited).interests == edited.active


def test_what_smaller_model(tiny_store):
    model = manual(tiny_store, ("alpha", 0.9), ("beta", 0.5), ("gamma", 0.4))
    assert len(build_what(model).interests) == 3


# --- Why (abstract) --------------------------------------------------------------

def test_why_abstract_band_in_active_order(store, alice_model, alice_recs):
    rec = alice_recs.items[0]
    payload = build_why_abstract(rec, alice_model)
    assert payload.display_percent == rec.display_percent
    assert [s.label for s in payload.band] == [i.label for i in alice_model.active]
    for segment in payload.band:
        assert segment.percent == round(rec.per_interest[segment.label] * 100, 2)


def test_why_abstract_identity_keyphrase_highlighted(tiny_store):
    model = manual(tiny_store, ("alpha", 1.0))
    rec = recommender.score(model, pub("p", "alpha", "about alpha methods"), tiny_store)
    payload = build_why_abstract(rec, model)
    highlighted = {h.text for h in payload.highlighted_keywords}
    assert "alpha" in highlighted
    h = next(h for h in payload.highlighted_keywords if h.text == "alpha")
    assert h.color_index == 0
    assert h.spans == ((6, 11),)


def test_why_abstract_orthogonal_no_highlights(tiny_store):
    model = manual(tiny_store, ("gamma", 1.0))
    rec = recommender.score(model, pub("p", "alpha", "alpha beta"), tiny_store)
    payload = build_why_abstract(rec, model)
    assert payload.highlighted_keywords == ()
    assert len(payload.band) == 1  # band still full


def test_why_abstract_highlights_match_brute_force(store, alice_model, alice_recs):
    theta = 0.40
    for rec in alice_recs.items:
        payload = build_why_abstract(rec, alice_model, highlight_threshold=theta)
        expected = set()
        for text, row in rec.per_keyword.items():
            if max(row.values()) >= theta:
                expected.add(text)
        assert {h.text for h in payload.highlighted_keywords} == expected
        colors = {i.label: i.color_index for i in alice_model.active}
        for h in payload.highlighted_keywords:
            assert h.color_index == colors[rec.best_interest_per_keyword[h.text]]


def test_why_abstract_spans_verbatim(store, alice_model, alice_recs):
    for rec in alice_recs.items:
        payload = build_why_abstract(rec, alice_model)
        for h in payload.highlighted_keywords:
            for start, end in h.spans:
                assert rec.publication.abstract[start:end].lower() == h.text


def test_find_spans_case_insensitive_multiple():
    spans = find_spans("Graph theory. GRAPH models. autograph", "graph")
    assert spans == ((0, 5), (14, 19), (32, 37))


# --- Why (detailed) ---------------------------------------------------------------

def test_why_detailed_tagcloud_max_normalized(store, alice_model, alice_recs):
    rec = alice_recs.items[0]
    payload = build_why_detailed(rec)
    sizes = [size for _, size in payload.tagcloud]
    assert max(sizes) == 1.0
    assert all(0.0 < s <= 1.0 for s in sizes)


def test_why_detailed_single_keyphrase(tiny_store):
    model = manual(tiny_store, ("alpha", 1.0))
    rec = recommender.score(model, pub("p", "alpha"), tiny_store)
    payload = build_why_detailed(rec)
    assert payload.tagcloud == (("alpha", 1.0),)


def test_why_detailed_bars_cover_all_interests(tiny_store):
    model = manual(tiny_store, ("alpha", 1.0), ("gamma", 0.5))
    rec = recommender.score(model, pub("p", "alpha"), tiny_store)
    payload = build_why_detailed(rec)
    (labels,) = [[label for label, _ in rows] for rows in payload.bars.values()]
    assert labels == ["alpha", "gamma"]  # zero similarity still listed
    assert dict(payload.bars["alpha"])["gamma"] == 0.0


def test_why_detailed_bars_equal_score_outputs(store, alice_model, alice_recs):
    rec = alice_recs.items[0]
    payload = build_why_detailed(rec)
    assert set(payload.bars) == set(text for text, _ in payload.tagcloud)
    for text, rows in payload.bars.items():
        for label, pct in rows:
            assert pct == round(rec.per_keyword[text][label] * 100, 2)


# --- How trace ---------------------------------------------------------------------

def test_trace_fidelity(store, alice_model, alice_recs):
    for rec in alice_recs.items:
        trace = build_how_trace(alice_model, rec, store)
        recomputed = float(np.dot(trace.model_vector, trace.publication_vector) /
                           (np.linalg.norm(trace.model_vector) *
                            np.linalg.norm(trace.publication_vector)))
        assert max(0.0, recomputed) == pytest.approx(rec.overall_score, abs=1e-9)
        assert trace.cosine == pytest.approx(recomputed, abs=1e-12)
        assert trace.dot == pytest.approx(
            float(np.dot(trace.model_vector, trace.publication_vector)), abs=1e-12)


def test_trace_stage_names_fixed(store, alice_model, alice_recs):
    trace = build_how_trace(alice_model, alice_recs.items[0], store)
    d = trace.to_dict()
    assert d["stage1"]["name"] == "get user interests and publication keyphrases"
    assert d["stage2"]["name"] == "generate embeddings"
    assert d["stage3"]["name"] == "compute similarity"


def test_trace_single_interest_single_keyword_aggregates(tiny_store):
    model = manual(tiny_store, ("alpha", 1.0))
    rec = recommender.score(model, pub("p", "alpha"), tiny_store)
    trace = build_how_trace(model, rec, tiny_store)
    np.testing.assert_array_equal(trace.model_vector,
                                  trace.interest_vectors["alpha"])
    np.testing.assert_array_equal(trace.publication_vector,
                                  trace.keyphrase_vectors["alpha"])


def test_trace_vectors_truncated_unless_full(store, alice_model, alice_recs):
    trace = build_how_trace(alice_model, alice_recs.items[0], store)
    short = trace.to_dict()["stage2"]["model_vector"]
    assert len(short["head"]) == 5
    assert short["dim"] == 50
    assert "values" not in short
    assert short["norm"] == pytest.approx(
        float(np.linalg.norm(trace.model_vector)), abs=1e-12)
    full = trace.to_dict(full_vectors=True)["stage2"]["model_vector"]
    assert len(full["values"]) == 50


def test_trace_round_trip_with_full_vectors(store, alice_model, alice_recs):
    trace = build_how_trace(alice_model, alice_recs.items[0], store)
    encoded = json.dumps(trace.to_dict(full_vectors=True))
    decoded = HowTrace.from_dict(json.loads(encoded))
    assert decoded == trace


def test_golden_trace_bytes(monkeypatch, alice_model):
    """The pinned trace was generated under the numpy kernel path; force that
    path so the comparison is byte-for-byte regardless of the default."""
    monkeypatch.setattr(kernels, "pairwise_cosine", kernels.pairwise_cosine_np)
    monkeypatch.setattr(kernels, "weighted_mean", kernels.weighted_mean_np)
    monkeypatch.setattr(kernels, "pagerank", kernels.pagerank_np)

    from explainrec import embeddings
    from explainrec.corpus import load_corpus, load_profile

    store = embeddings.load_store(data_path("embeddings_50d.txt"))
    corpus = load_corpus(data_path("corpus_100.json"), store)
    model = interests.model_from_profile(
        load_profile(data_path("profile_alice.json")), store)
    recset = recommender.recommend(model, corpus, store)

    with open(data_path("golden_trace.json"), encoding="utf-8") as fh:
        golden_bytes = fh.read()
    golden = json.loads(golden_bytes)

    rec = next(r for r in recset.items
               if r.publication.id == golden["publication_id"])
    trace = build_how_trace(model, rec, store)
    fresh = json.dumps(
        {"publication_id": rec.publication.id,
         "overall_score": rec.overall_score,
         "trace": trace.to_dict(full_vectors=True)},
        indent=2, sort_keys=True) + "\n"
    assert fresh == golden_bytes


# --- payload serialization ----------------------------------------------------------

def test_payload_round_trips(store, alice_model, alice_recs):
    rec = alice_recs.items[0]
    what = build_what(alice_model)
    assert WhatPayload.from_dict(json.loads(json.dumps(what.to_dict()))) == what
    why_a = build_why_abstract(rec, alice_model)
    assert WhyAbstractPayload.from_dict(
        json.loads(json.dumps(why_a.to_dict()))) == why_a
    why_d = build_why_detailed(rec)
    assert explanations.WhyDetailedPayload.from_dict(
        json.loads(json.dumps(why_d.to_dict()))) == why_d


def test_builders_are_pure(store, alice_model, alice_recs):
    rec = alice_recs.items[0]
    first = build_why_abstract(rec, alice_model)
    second = build_why_abstract(rec, alice_model)
    assert first == second
    assert build_why_detailed(rec) == build_why_detailed(rec)
    assert build_how_trace(alice_model, rec, store) == \
        build_how_trace(alice_model, rec, store)
