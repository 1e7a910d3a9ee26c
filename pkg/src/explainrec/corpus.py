"""Candidate publications: fixture corpora loaded from JSON files and an
optional remote scholarly-catalog client.

Corpus file format: a JSON array of {"id", "title", "abstract"} records.
Keyphrases are extracted at load time so every downstream consumer sees the
same deterministic extraction. The remote client is feature-gated; when the
catalog cannot be reached it fails loudly with RemoteUnavailable rather than
silently falling back to the local corpus.
"""

import json
import logging
import time
from dataclasses import dataclass, field

import requests

from . import textpipe
from .errors import (
    DuplicateId,
    EmptyDocument,
    NoCandidates,
    ParseError,
    RateLimited,
    RemoteUnavailable,
)

log = logging.getLogger(__name__)

DEFAULT_CANDIDATE_LIMIT = 100


@dataclass(frozen=True)
class Publication:
    id: str
    title: str
    abstract: str
    keyphrases: tuple[textpipe.Keyphrase, ...] = field(default=())


def _extract(title: str, abstract: str, max_phrases: int,
             stopwords: frozenset[str] | None,
             title_boost: float = textpipe.DEFAULT_TITLE_BOOST,
             ) -> tuple[textpipe.Keyphrase, ...]:
    return tuple(textpipe.extract_keyphrases(
        title, abstract, max_phrases=max_phrases, stopwords=stopwords,
        title_boost=title_boost))


def load_corpus(path: str, store=None, max_phrases: int = textpipe.DEFAULT_MAX_PHRASES,
                stopwords: frozenset[str] | None = None,
                title_boost: float = textpipe.DEFAULT_TITLE_BOOST) -> list[Publication]:
    """Load and validate a corpus file, attaching extracted keyphrases.

    Records with an empty title are skipped with a warning, not a fatal
    error; duplicate ids are fatal. When a store is given, records whose
    keyphrases are all out-of-vocabulary are also skipped (they could never
    be scored).
    """
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(path, f"line {exc.lineno}", str(exc)) from None
    if not isinstance(data, list):
        raise ParseError(path, "top level", "corpus file must be a JSON array")

    from . import embeddings  # local import to keep module deps one-way

    publications: list[Publication] = []
    seen: set[str] = set()
    skipped = 0
    for i, record in enumerate(data):
        where = f"record {i}"
        if not isinstance(record, dict) or not isinstance(record.get("id"), str):
            raise ParseError(path, where, "record needs a string 'id'")
        pub_id = record["id"]
        if pub_id in seen:
            raise DuplicateId(pub_id)
        seen.add(pub_id)
        title = record.get("title", "")
        abstract = record.get("abstract", "")
        if not isinstance(title, str) or not isinstance(abstract, str):
            raise ParseError(path, where, "'title' and 'abstract' must be strings")
        if not title.strip():
            skipped += 1
            continue
        try:
            keyphrases = _extract(title, abstract, max_phrases, stopwords, title_boost)
        except EmptyDocument:
            skipped += 1
            continue
        if store is not None and not any(
                embeddings.phrase_embedding(store, k.text) is not None
                for k in keyphrases):
            skipped += 1
            continue
        publications.append(Publication(id=pub_id, title=title,
                                        abstract=abstract, keyphrases=keyphrases))
    if skipped:
        log.warning("%s: skipped %d unusable record(s)", path, skipped)
    return publications


@dataclass(frozen=True)
class Profile:
    user_id: str
    publications: tuple[Publication, ...]
    manual_interests: tuple[tuple[str, float], ...] | None = None


def load_profile(path: str, max_phrases: int = textpipe.DEFAULT_MAX_PHRASES,
                 stopwords: frozenset[str] | None = None,
                 title_boost: float = textpipe.DEFAULT_TITLE_BOOST) -> Profile:
    """User profile JSON: {"user_id", "publications": [...],
    optional "manual_interests": [{"label", "weight"}]}."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(path, f"line {exc.lineno}", str(exc)) from None
    return parse_profile(data, path, max_phrases=max_phrases, stopwords=stopwords,
                         title_boost=title_boost)


def parse_profile(data, path: str = "<request>",
                  max_phrases: int = textpipe.DEFAULT_MAX_PHRASES,
                  stopwords: frozenset[str] | None = None,
                  title_boost: float = textpipe.DEFAULT_TITLE_BOOST) -> Profile:
    if not isinstance(data, dict):
        raise ParseError(path, "top level", "profile must be a JSON object")

    user_id = data.get("user_id", "")
    if not isinstance(user_id, str):
        raise ParseError(path, "user_id", "'user_id' must be a string")

    publications = []
    for i, record in enumerate(data.get("publications", [])):
        if not isinstance(record, dict) or not record.get("title", "").strip():
            raise ParseError(path, f"publications[{i}]", "publication needs a title")
        title = record["title"]
        abstract = record.get("abstract", "")
        try:
            keyphrases = _extract(title, abstract, max_phrases, stopwords, title_boost)
        except EmptyDocument:
            keyphrases = ()
        publications.append(Publication(
            id=record.get("id", f"own-{i}"), title=title, abstract=abstract,
            keyphrases=keyphrases))

    manual = None
    if "manual_interests" in data:
        manual = []
        for i, item in enumerate(data["manual_interests"]):
            if not isinstance(item, dict) or "label" not in item or "weight" not in item:
                raise ParseError(path, f"manual_interests[{i}]",
                                 "manual interest needs 'label' and 'weight'")
            manual.append((str(item["label"]), float(item["weight"])))
        manual = tuple(manual)

    return Profile(user_id=user_id, publications=tuple(publications),
                   manual_interests=manual)


def _interest_tokens(interests) -> list[str]:
    tokens = []
    for interest in interests:
        tokens.extend(t.lower() for t in interest.label.split())
    return tokens


class CatalogClient:
    """Minimal client for a scholarly-catalog search endpoint.

    Endpoint contract: GET {base_url}/search?query=<label>&limit=<n> returns
    {"data": [{"paperId", "title", "abstract"}]}. Field mapping into the
    local Publication shape: paperId -> id, title -> title, abstract ->
    abstract (null becomes ""). Retries: 3 attempts with exponential backoff
    starting at 500 ms for connection errors and 5xx responses.
    """

    ATTEMPTS = 3
    BACKOFF_START = 0.5

    def __init__(self, base_url: str, session: requests.Session | None = None,
                 timeout: float = 10.0, sleep=time.sleep,
                 max_phrases: int = textpipe.DEFAULT_MAX_PHRASES,
                 stopwords: frozenset[str] | None = None,
                 title_boost: float = textpipe.DEFAULT_TITLE_BOOST):
        self.base_url = base_url.rstrip("/")
        self.session = session or requests.Session()
        self.timeout = timeout
        self.sleep = sleep
        self.max_phrases = max_phrases
        self.stopwords = stopwords
        self.title_boost = title_boost

    def search(self, query: str, limit: int) -> list[Publication]:
        response = self._get({"query": query, "limit": limit})
        try:
            records = response["data"]
        except (TypeError, KeyError):
            raise RemoteUnavailable(None, "catalog response missing 'data'") from None
        return self.normalize(records)

    def normalize(self, records) -> list[Publication]:
        """Map raw catalog records into Publications (deterministic)."""
        publications = []
        for record in records:
            pub_id = record.get("paperId")
            title = record.get("title") or ""
            if not pub_id or not title.strip():
                continue
            abstract = record.get("abstract") or ""
            try:
                keyphrases = _extract(title, abstract, self.max_phrases,
                                      self.stopwords, self.title_boost)
            except EmptyDocument:
                continue
            publications.append(Publication(
                id=str(pub_id), title=title, abstract=abstract,
                keyphrases=keyphrases))
        return publications

    def _get(self, params: dict):
        backoff = self.BACKOFF_START
        last_status = None
        for attempt in range(self.ATTEMPTS):
            try:
                resp = self.session.get(f"{self.base_url}/search", params=params,
                                        timeout=self.timeout)
            except requests.RequestException as exc:
                last_status = None
                log.warning("catalog request failed (attempt %d): %s", attempt + 1, exc)
            else:
                if resp.status_code == 200:
                    return resp.json()
                if resp.status_code == 429:
                    raise RateLimited("catalog rate limit hit")
                last_status = resp.status_code
                if resp.status_code < 500:
                    break
            if attempt < self.ATTEMPTS - 1:
                self.sleep(backoff)
                backoff *= 2
        raise RemoteUnavailable(last_status)


def fetch_candidates(interests, source, limit: int = DEFAULT_CANDIDATE_LIMIT) -> list[Publication]:
    """Publications related to at least one active interest.

    Corpus mode (source is a publication list): a publication matches when
    any token of any interest label appears case-folded as a substring of its
    title or abstract; results are id-ordered and capped at limit. Remote
    mode (source is a CatalogClient): one search per interest label, results
    deduplicated by id, sorted by id, capped at limit.
    """
    interests = list(interests)
    if not interests:
        raise ValueError("need at least one active interest")
    if limit < 1:
        raise ValueError("limit must be >= 1")

    if isinstance(source, CatalogClient):
        by_id: dict[str, Publication] = {}
        for interest in interests:
            for pub in source.search(interest.label, limit):
                by_id.setdefault(pub.id, pub)
        matches = [by_id[i] for i in sorted(by_id)][:limit]
    else:
        tokens = _interest_tokens(interests)
        matches = []
        for pub in sorted(source, key=lambda p: p.id):
            haystack = (pub.title + " " + pub.abstract).lower()
            if any(tok in haystack for tok in tokens):
                matches.append(pub)
                if len(matches) == limit:
                    break
    if not matches:
        raise NoCandidates("no publication matches the active interests")
    return matches
