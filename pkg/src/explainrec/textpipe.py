"""Tokenization, stopword filtering and unsupervised keyphrase extraction.

Extraction is graph-based and fully deterministic: candidate phrases are
stopword-free token runs, member tokens are ranked by a degree-normalized
centrality iteration over a co-occurrence graph, and phrase salience sums the
member-token centralities per occurrence with a configurable boost for title
occurrences. No model files, no randomness.
"""

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

import numpy as np

from . import kernels
from .errors import EmptyDocument

# Maximal runs of alphanumeric characters (Unicode-aware, underscore excluded).
_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)

MIN_TOKEN_LEN = 2
DEFAULT_WINDOW = 4
DEFAULT_MAX_PHRASE_LEN = 4
DEFAULT_DAMPING = 0.85
DEFAULT_MAX_ITER = 50
DEFAULT_TOL = 1e-6
DEFAULT_TITLE_BOOST = 1.5
DEFAULT_MAX_PHRASES = 10


@dataclass(frozen=True)
class Token:
    text: str
    position: int


@dataclass(frozen=True)
class Keyphrase:
    """An extracted phrase with its graph-centrality salience.

    source_positions holds every occurrence as (field, start, end) token
    spans, field being "title" or "abstract", end exclusive.
    """
    text: str
    salience: float
    source_positions: tuple[tuple[str, int, int], ...]

    @property
    def tokens(self) -> tuple[str, ...]:
        return tuple(self.text.split(" "))


def tokenize(text: str) -> list[Token]:
    """Split on non-alphanumeric boundaries, lowercase, drop tokens shorter
    than two characters; positions index the kept tokens in reading order."""
    words = [m.group(0).lower() for m in _TOKEN_RE.finditer(text)]
    return [Token(w, i) for i, w in enumerate(w for w in words if len(w) >= MIN_TOKEN_LEN)]


def load_stopwords(path: str) -> frozenset[str]:
    """One lowercase token per line; '#'-prefixed comment lines ignored."""
    words = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                words.add(line.lower())
    return frozenset(words)


@lru_cache(maxsize=1)
def default_stopwords() -> frozenset[str]:
    data = resources.files("explainrec.data").joinpath("stopwords.txt").read_text("utf-8")
    return frozenset(
        line.strip().lower() for line in data.splitlines()
        if line.strip() and not line.startswith("#"))


def candidate_runs(tokens: list[Token], stopwords: frozenset[str],
                   max_len: int = DEFAULT_MAX_PHRASE_LEN) -> list[tuple[int, int]]:
    """(start, end) spans of candidate phrase occurrences within one field.

    Maximal stopword-free runs become candidates directly; a run longer than
    max_len is chopped into consecutive chunks of at most max_len tokens so
    its content still participates.
    """
    spans = []
    run_start = None
    for i in range(len(tokens) + 1):
        if i == len(tokens) or tokens[i].text in stopwords:
            if run_start is not None:
                for s in range(run_start, i, max_len):
                    spans.append((s, min(s + max_len, i)))
                run_start = None
        elif run_start is None:
            run_start = i
    return spans


def token_centrality(fields: list[list[Token]], candidate_tokens: set[str],
                     window: int = DEFAULT_WINDOW, damping: float = DEFAULT_DAMPING,
                     max_iter: int = DEFAULT_MAX_ITER, tol: float = DEFAULT_TOL):
    """Rank candidate tokens by centrality in their co-occurrence graph.

    Two candidate tokens co-occur when their positions in the same field lie
    within the sliding window; edge weights count co-occurrences. Returns
    (centrality dict, per-iteration L1 deltas).
    """
    if not candidate_tokens:
        return {}, np.array([])
    index = {t: i for i, t in enumerate(sorted(candidate_tokens))}
    n = len(index)
    adjacency = np.zeros((n, n))
    for tokens in fields:
        for i, tok in enumerate(tokens):
            a = index.get(tok.text)
            if a is None:
                continue
            for j in range(i + 1, min(i + window, len(tokens))):
                b = index.get(tokens[j].text)
                if b is None or b == a:
                    continue
                adjacency[a, b] += 1.0
                adjacency[b, a] += 1.0
    ranks, deltas = kernels.pagerank(adjacency, damping, max_iter, tol)
    return {t: float(ranks[i]) for t, i in index.items()}, deltas


def extract_keyphrases(title: str, abstract: str,
                       max_phrases: int = DEFAULT_MAX_PHRASES,
                       stopwords: frozenset[str] | None = None,
                       window: int = DEFAULT_WINDOW,
                       max_phrase_len: int = DEFAULT_MAX_PHRASE_LEN,
                       damping: float = DEFAULT_DAMPING,
                       max_iter: int = DEFAULT_MAX_ITER,
                       tol: float = DEFAULT_TOL,
                       title_boost: float = DEFAULT_TITLE_BOOST) -> list[Keyphrase]:
    """Top keyphrases of a title + abstract, by descending salience.

    Salience of a phrase is the sum over its occurrences of the member-token
    centralities, title occurrences weighted by title_boost. Ties break
    lexicographically, so identical input always yields the identical list.
    """
    if max_phrases < 1:
        raise ValueError("max_phrases must be >= 1")
    if stopwords is None:
        stopwords = default_stopwords()

    fields = [("title", tokenize(title)), ("abstract", tokenize(abstract))]

    occurrences: dict[str, list[tuple[str, int, int]]] = {}
    candidate_tokens: set[str] = set()
    for field_name, tokens in fields:
        for start, end in candidate_runs(tokens, stopwords, max_phrase_len):
            words = tuple(t.text for t in tokens[start:end])
            candidate_tokens.update(words)
            occurrences.setdefault(" ".join(words), []).append((field_name, start, end))
    if not occurrences:
        raise EmptyDocument("no candidate phrase in title or abstract")

    centrality, _ = token_centrality(
        [toks for _, toks in fields], candidate_tokens, window, damping, max_iter, tol)

    phrases = []
    for text, spans in occurrences.items():
        member_sum = sum(centrality[w] for w in text.split(" "))
        salience = sum(
            (title_boost if field == "title" else 1.0) * member_sum
            for field, _, _ in spans)
        phrases.append(Keyphrase(text=text, salience=salience,
                                 source_positions=tuple(spans)))
    phrases.sort(key=lambda p: (-p.salience, p.text))
    return phrases[:max_phrases]
