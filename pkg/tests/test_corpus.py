import json

import pytest
import requests

from conftest import data_path
from explainrec import corpus as corpus_mod
from explainrec.corpus import CatalogClient, Publication, fetch_candidates
from explainrec.errors import (
    DuplicateId,
    NoCandidates,
    ParseError,
    RateLimited,
    RemoteUnavailable,
)
from explainrec.interests import Interest


def write_corpus(tmp_path, records):
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps(records), encoding="utf-8")
    return str(path)


# --- loading -----------------------------------------------------------------

def test_load_happy_path(tmp_path):
    path = write_corpus(tmp_path, [
        {"id": "p1", "title": "graph clustering", "abstract": "spectral methods"},
        {"id": "p2", "title": "neural training", "abstract": "gradient descent"},
        {"id": "p3", "title": "cache design", "abstract": "latency tradeoffs"},
    ])
    pubs = corpus_mod.load_corpus(path)
    assert [p.id for p in pubs] == ["p1", "p2", "p3"]
    assert all(0 < len(p.keyphrases) <= 10 for p in pubs)


def test_load_duplicate_id(tmp_path):
    path = write_corpus(tmp_path, [
        {"id": "p1", "title": "one"}, {"id": "p1", "title": "two"}])
    with pytest.raises(DuplicateId):
        corpus_mod.load_corpus(path)


def test_load_parse_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(ParseError):
        corpus_mod.load_corpus(str(bad))
    with pytest.raises(ParseError):
        corpus_mod.load_corpus(write_corpus(tmp_path, {"not": "a list"}))
    with pytest.raises(ParseError):
        corpus_mod.load_corpus(write_corpus(tmp_path, [{"title": "no id"}]))


def test_load_skips_empty_title_with_warning(tmp_path, caplog):
    path = write_corpus(tmp_path, [
        {"id": "p1", "title": "graph clustering"},
        {"id": "p2", "title": "   "},
    ])
    with caplog.at_level("WARNING"):
        pubs = corpus_mod.load_corpus(path)
    assert [p.id for p in pubs] == ["p1"]
    assert any("skipped 1" in r.message for r in caplog.records)


def test_load_title_boost_configurable(tmp_path):
    path = write_corpus(tmp_path, [
        {"id": "p1", "title": "graph theory",
         "abstract": "results from neural networks"}])
    boosted = corpus_mod.load_corpus(path)[0]          # default 1.5x
    flat = corpus_mod.load_corpus(path, title_boost=1.0)[0]
    by_text = lambda pubs: {k.text: k.salience for k in pubs.keyphrases}
    assert by_text(boosted)["graph theory"] > by_text(flat)["graph theory"]
    assert by_text(boosted)["neural networks"] == by_text(flat)["neural networks"]


def test_load_fixture_deterministic(store):
    a = corpus_mod.load_corpus(data_path("corpus_100.json"), store)
    b = corpus_mod.load_corpus(data_path("corpus_100.json"), store)
    assert len(a) == 100
    assert a == b


# --- profiles ----------------------------------------------------------------

def test_load_profile_with_publications():
    profile = corpus_mod.load_profile(data_path("profile_alice.json"))
    assert profile.user_id == "alice"
    assert len(profile.publications) == 3
    assert profile.manual_interests is None
    assert all(p.keyphrases for p in profile.publications)


def test_load_profile_manual_interests():
    profile = corpus_mod.load_profile(data_path("profile_manual.json"))
    assert profile.manual_interests
    assert all(isinstance(w, float) for _, w in profile.manual_interests)


def test_parse_profile_rejects_bad_shapes():
    with pytest.raises(ParseError):
        corpus_mod.parse_profile(["not", "an", "object"])
    with pytest.raises(ParseError):
        corpus_mod.parse_profile({"publications": [{"abstract": "no title"}]})
    with pytest.raises(ParseError):
        corpus_mod.parse_profile({"manual_interests": [{"label": "x"}]})


# --- corpus-mode candidate fetch ------------------------------------------------

def small_corpus():
    texts = [
        ("c1", "graph spectra", "eigenvalues of a graph"),
        ("c2", "neural models", "deep networks"),
        ("c3", "graph flows", "maximum flow"),
        ("c4", "caching", "cache policies"),
        ("c5", "community detection", "graph partitions"),
        ("c6", "haptics", "touch feedback"),
        ("c7", "photograph analysis", "image forensics"),
        ("c8", "language models", "text generation"),
        ("c9", "storage", "disks and graphs"),
        ("c10", "parsing", "syntax trees"),
    ]
    return [Publication(id=i, title=t, abstract=a) for i, t, a in texts]


def grep_oracle(pubs, tokens):
    hits = []
    for p in pubs:
        hay = (p.title + " " + p.abstract).lower()
        if any(tok in hay for tok in tokens):
            hits.append(p.id)
    return sorted(hits)


def test_fetch_corpus_mode_matches_grep_oracle():
    pubs = small_corpus()
    got = fetch_candidates([Interest("graph", 1.0)], pubs, limit=100)
    # substring scan: c7 "photograph" matches too
    assert [p.id for p in got] == grep_oracle(pubs, ["graph"])


def test_fetch_corpus_mode_id_ordered_and_capped():
    pubs = small_corpus()
    got = fetch_candidates([Interest("graph", 1.0)], pubs, limit=2)
    all_ids = grep_oracle(pubs, ["graph"])
    assert [p.id for p in got] == all_ids[:2]


def test_fetch_no_candidates_is_error():
    with pytest.raises(NoCandidates):
        fetch_candidates([Interest("zzzz", 1.0)], small_corpus(), limit=5)


def test_fetch_case_folded():
    got = fetch_candidates([Interest("GRAPH", 1.0)], small_corpus(), limit=100)
    assert got


def test_fetch_multi_token_interest_matches_any_token():
    got = fetch_candidates([Interest("neural caching", 1.0)], small_corpus(), limit=100)
    assert {p.id for p in got} == {"c2", "c4"}


def test_fetch_validates_arguments():
    with pytest.raises(ValueError):
        fetch_candidates([], small_corpus(), limit=5)
    with pytest.raises(ValueError):
        fetch_candidates([Interest("graph", 1.0)], small_corpus(), limit=0)


# --- remote catalog --------------------------------------------------------------


class StubResponse:
    def __init__(self, status_code=200, payload=None):
        self.status_code = status_code
        self._payload = payload or {"data": []}

    def json(self):
        return self._payload


class StubSession:
    def __init__(self, script):
        self.script = list(script)
        self.calls = []

    def get(self, url, params=None, timeout=None):
        self.calls.append((url, dict(params or {})))
        action = self.script.pop(0)
        if isinstance(action, Exception):
            raise action
        return action


def catalog_records():
    with open(data_path("catalog_response.json"), encoding="utf-8") as fh:
        return json.load(fh)["data"]


def make_client(script):
    session = StubSession(script)
    client = CatalogClient("https://catalog.test", session=session, sleep=lambda s: None)
    return client, session


def test_catalog_search_normalizes_records():
    client, session = make_client([StubResponse(payload={"data": catalog_records()})])
    pubs = client.search("graph", 10)
    assert [p.id for p in pubs] == ["ext-0101", "ext-0102", "ext-0103"]
    assert pubs[2].abstract == ""  # null abstract normalized
    assert session.calls[0][1]["query"] == "graph"


def test_catalog_normalize_round_trips_bit_exact():
    client, _ = make_client([])
    records = catalog_records()
    first = client.normalize(records)
    second = client.normalize(records)
    assert first == second
    with open(data_path("catalog_normalized.json"), encoding="utf-8") as fh:
        golden = json.load(fh)
    assert [
        {"id": p.id, "title": p.title, "abstract": p.abstract,
         "keyphrases": [k.text for k in p.keyphrases]}
        for p in first] == golden


def test_catalog_retries_then_succeeds():
    ok = StubResponse(payload={"data": catalog_records()})
    client, session = make_client(
        [requests.ConnectionError("down"), StubResponse(500), ok])
    pubs = client.search("graph", 10)
    assert len(session.calls) == 3
    assert pubs


def test_catalog_unavailable_after_retries():
    client, session = make_client([StubResponse(503)] * 3)
    with pytest.raises(RemoteUnavailable) as err:
        client.search("graph", 10)
    assert err.value.status == 503
    assert len(session.calls) == 3


def test_catalog_offline_is_explicit_error():
    client, _ = make_client([requests.ConnectionError("no network")] * 3)
    with pytest.raises(RemoteUnavailable) as err:
        client.search("graph", 10)
    assert err.value.status is None


def test_catalog_rate_limited():
    client, session = make_client([StubResponse(429)])
    with pytest.raises(RateLimited):
        client.search("graph", 10)
    assert len(session.calls) == 1  # no retry on 429


def test_fetch_remote_mode_dedupes_and_sorts():
    records = catalog_records()
    client, session = make_client([
        StubResponse(payload={"data": records}),
        StubResponse(payload={"data": list(reversed(records))}),
    ])
    got = fetch_candidates(
        [Interest("graph", 1.0), Interest("ranking", 0.5)], client, limit=10)
    assert [p.id for p in got] == ["ext-0101", "ext-0102", "ext-0103"]
    assert len(session.calls) == 2
