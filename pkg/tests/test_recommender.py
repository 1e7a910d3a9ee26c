import random

import numpy as np
import pytest

from conftest import data_path
from explainrec import embeddings, interests, recommender, textpipe
from explainrec.corpus import Publication
from explainrec.errors import NoEmbeddableInterests, NoEmbeddableKeyphrases
from oracle import read_vectors, recommend_oracle, score_publication

import oracle


def pub(pub_id, title, abstract=""):
    return Publication(id=pub_id, title=title, abstract=abstract,
                       keyphrases=tuple(textpipe.extract_keyphrases(title, abstract)))


def manual(store, *pairs):
    return interests.build_manual_model("u", list(pairs), store)


# --- embeddings of models and publications ---------------------------------------

def test_model_embedding_single_interest(tiny_store):
    model = manual(tiny_store, ("alpha", 1.0))
    np.testing.assert_array_equal(
        recommender.model_embedding(model, tiny_store),
        embeddings.phrase_embedding(tiny_store, "alpha"))


def test_model_embedding_weighted(tiny_store):
    model = manual(tiny_store, ("alpha", 0.75), ("beta", 0.25))
    got = recommender.model_embedding(model, tiny_store)
    np.testing.assert_allclose(got, [0.75, 0.25, 0.0], atol=1e-12)


def test_model_embedding_uniform_weights_is_mean(tiny_store):
    model = manual(tiny_store, ("alpha", 0.5), ("beta", 0.5))
    np.testing.assert_allclose(
        recommender.model_embedding(model, tiny_store), [0.5, 0.5, 0.0], atol=1e-12)


def test_model_embedding_requires_embeddable_interest(tiny_store):
    model = interests.InterestModel(
        user_id="u", interests=(interests.Interest("unembeddable", 1.0, 0),))
    with pytest.raises(NoEmbeddableInterests):
        recommender.model_embedding(model, tiny_store)


def test_publication_embedding_single_keyphrase(tiny_store):
    p = pub("p", "alpha")
    np.testing.assert_array_equal(
        recommender.publication_embedding(p, tiny_store),
        embeddings.phrase_embedding(tiny_store, "alpha"))


def test_publication_embedding_salience_weighted(tiny_store):
    p = pub("p", "alpha", "alpha again then beta")
    kept, rows = recommender.publication_keyphrase_embeddings(p, tiny_store)
    expect = embeddings.weighted_average(list(rows), [k.salience for k in kept])
    got = recommender.publication_embedding(p, tiny_store)
    np.testing.assert_allclose(got, expect, atol=1e-12)
    # oracle recomputation from the salience list
    total = sum(k.salience for k in kept)
    manual_avg = sum(row * k.salience for row, k in zip(rows, kept)) / total
    np.testing.assert_allclose(got, manual_avg, atol=1e-12)


def test_publication_embedding_requires_embeddable_keyphrase(tiny_store):
    p = pub("p", "mysteryword")
    with pytest.raises(NoEmbeddableKeyphrases):
        recommender.publication_embedding(p, tiny_store)


# --- scoring ----------------------------------------------------------------------

def test_score_identity_keyphrase(tiny_store):
    model = manual(tiny_store, ("alpha", 1.0))
    rec = recommender.score(model, pub("p", "alpha"), tiny_store)
    assert rec.overall_score == pytest.approx(1.0, abs=1e-12)
    assert rec.display_percent == 100
    assert rec.per_interest == {"alpha": pytest.approx(1.0, abs=1e-12)}
    assert rec.per_keyword["alpha"]["alpha"] == pytest.approx(1.0, abs=1e-12)
    assert rec.best_interest_per_keyword["alpha"] == "alpha"


def test_score_orthogonal_clamped_to_zero(tiny_store):
    model = manual(tiny_store, ("alpha", 1.0))
    rec = recommender.score(model, pub("p", "beta"), tiny_store)
    assert rec.overall_score == 0.0
    assert rec.display_percent == 0


def test_score_matches_brute_force_oracle(store, corpus, alice_model):
    table = read_vectors(data_path("embeddings_50d.txt"))
    pairs = [(i.label, i.weight) for i in alice_model.active]
    for p in corpus[:10]:
        rec = recommender.score(alice_model, p, store)
        expect = score_publication(table, pairs, p)
        assert rec.overall_score == pytest.approx(expect, abs=1e-9)
        # per-interest values against single-interest cosines
        for interest in alice_model.active:
            iv = oracle.phrase_vec(table, interest.label)
            pv = oracle.pub_vec(table, p)
            assert rec.per_interest[interest.label] == pytest.approx(
                oracle.clamp0(oracle.cos(iv, pv)), abs=1e-9)


def test_per_keyword_grid_matches_oracle(store, corpus, alice_model):
    table = read_vectors(data_path("embeddings_50d.txt"))
    p = corpus[16]  # the recommender-topic hand document
    rec = recommender.score(alice_model, p, store)
    for text, row in rec.per_keyword.items():
        kv = oracle.phrase_vec(table, text)
        for interest in alice_model.active:
            iv = oracle.phrase_vec(table, interest.label)
            assert row[interest.label] == pytest.approx(
                oracle.clamp0(oracle.cos(kv, iv)), abs=1e-9)


def test_best_interest_tie_breaks_by_weight_then_label(tiny_store):
    # keyphrase "zeta" = (1,1,0)/norm; delta and epsilon are mirror images
    # with identical cosine to it
    model = manual(tiny_store, ("delta", 0.4), ("epsilon", 0.7))
    rec = recommender.score(model, pub("p", "zeta"), tiny_store)
    row = rec.per_keyword["zeta"]
    assert row["delta"] == row["epsilon"]
    assert rec.best_interest_per_keyword["zeta"] == "epsilon"  # heavier weight

    equal = manual(tiny_store, ("delta", 0.5), ("epsilon", 0.5))
    rec2 = recommender.score(equal, pub("p", "zeta"), tiny_store)
    assert rec2.best_interest_per_keyword["zeta"] == "delta"  # lexicographic


def test_per_interest_unnormalized_sums_past_one(tiny_store):
    model = manual(tiny_store, ("alpha", 1.0), ("beta", 1.0))
    rec = recommender.score(model, pub("p", "alpha beta"), tiny_store)
    total = sum(rec.per_interest.values())
    assert total > 1.0
    assert total == pytest.approx(2.0 / np.sqrt(2.0), abs=1e-9)


def test_display_percent_rounds_half_up():
    assert recommender.display_percent(0.005) == 1
    assert recommender.display_percent(0.004999) == 0
    assert recommender.display_percent(0.555) == 56
    assert recommender.display_percent(1.0) == 100
    assert recommender.display_percent(0.0) == 0


# --- recommend() -------------------------------------------------------------------

def test_recommend_threshold_is_strict(tiny_store):
    model = manual(tiny_store, ("alpha", 1.0))
    p = pub("p", "alpha beta")  # cosine = 1/sqrt(2)
    score = recommender.score(model, p, tiny_store).overall_score
    at = recommender.recommend(model, [p], tiny_store, threshold=score)
    assert at.items == ()
    just_below = recommender.recommend(
        model, [p], tiny_store, threshold=score - 1e-12)
    assert [r.publication.id for r in just_below.items] == ["p"]


def test_recommend_caps_at_k(store, corpus, manual_model):
    recset = recommender.recommend(manual_model, corpus, store)
    above = [r for r in recommender.score_all(manual_model, corpus, store)
             if r.overall_score > 0.40]
    assert len(above) > 10
    assert len(recset.items) == 10


def test_recommend_empty_result_is_valid(tiny_store):
    model = manual(tiny_store, ("alpha", 1.0))
    recset = recommender.recommend(model, [pub("p", "beta")], tiny_store)
    assert recset.items == ()


def test_recommend_tie_breaks_by_id(tiny_store):
    model = manual(tiny_store, ("alpha", 1.0))
    twins = [pub("b", "alpha"), pub("a", "alpha")]
    recset = recommender.recommend(model, twins, tiny_store, threshold=0.1)
    assert [r.publication.id for r in recset.items] == ["a", "b"]


def test_recommend_matches_oracle_on_fixture(store, corpus, alice_model):
    table = read_vectors(data_path("embeddings_50d.txt"))
    pairs = [(i.label, i.weight) for i in alice_model.active]
    expected = recommend_oracle(table, pairs, corpus)
    got = recommender.recommend(alice_model, corpus, store)
    assert [r.publication.id for r in got.items] == [pid for pid, _ in expected]
    for rec, (_, s) in zip(got.items, expected):
        assert rec.overall_score == pytest.approx(s, abs=1e-9)


def test_recommend_threshold_monotone(store, corpus, alice_model):
    lower = recommender.recommend(alice_model, corpus, store, threshold=0.2)
    higher = recommender.recommend(alice_model, corpus, store, threshold=0.45)
    lower_ids = {r.publication.id for r in lower.items}
    higher_ids = {r.publication.id for r in higher.items}
    assert higher_ids <= lower_ids


def test_argmax_attribution_invariant_under_weight_scaling(tiny_store):
    base = manual(tiny_store, ("alpha", 0.8), ("delta", 0.4))
    scaled = manual(tiny_store, ("alpha", 0.4), ("delta", 0.2))
    p = pub("p", "zeta epsilon", "alpha beta")
    a = recommender.score(base, p, tiny_store)
    b = recommender.score(scaled, p, tiny_store)
    assert a.best_interest_per_keyword == b.best_interest_per_keyword


def test_recommend_validates_parameters(tiny_store):
    model = manual(tiny_store, ("alpha", 1.0))
    with pytest.raises(ValueError):
        recommender.recommend(model, [pub("p", "alpha")], tiny_store, k=0)
    with pytest.raises(ValueError):
        recommender.recommend(model, [pub("p", "alpha")], tiny_store, threshold=1.2)


def test_scores_in_unit_interval(store, corpus, alice_model):
    for rec in recommender.score_all(alice_model, corpus, store):
        assert 0.0 <= rec.overall_score <= 1.0
        assert 0 <= rec.display_percent <= 100
        assert all(0.0 <= v <= 1.0 for v in rec.per_interest.values())
        for row in rec.per_keyword.values():
            assert all(0.0 <= v <= 1.0 for v in row.values())


def test_random_models_match_oracle(store, corpus):
    """score-filter-sort equals the brute-force oracle for random models."""
    table = read_vectors(data_path("embeddings_50d.txt"))
    phrases = sorted({k.text for p in corpus for k in p.keyphrases})
    rng = random.Random(42)
    for _ in range(5):
        labels = rng.sample(phrases, rng.randint(1, 6))
        pairs = [(lbl, round(rng.uniform(0.05, 1.0), 3)) for lbl in labels]
        try:
            model = interests.build_manual_model("r", pairs, store)
        except Exception:
            continue
        active_pairs = [(i.label, i.weight) for i in model.active]
        expected = recommend_oracle(table, active_pairs, corpus)
        got = recommender.recommend(model, corpus, store)
        assert [r.publication.id for r in got.items] == [pid for pid, _ in expected]
