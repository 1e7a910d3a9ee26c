"""Word-vector store: load a word2vec-text-format file and build phrase,
interest and model embeddings from it.

File format, bit-exact: first line ``<vocab_size> <dimension>``, then one line
per token: ``<token> <d space-separated decimal floats>``, UTF-8,
newline-terminated. Tokens are matched case-folded; the store is immutable
after load and safe for any number of concurrent readers.
"""

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import (
    AllZeroWeights,
    DimensionMismatch,
    DuplicateToken,
    EmptyInput,
    EmptyVocabulary,
    MalformedLine,
    WeightOutOfRange,
    ZeroVector,
)


@dataclass(frozen=True)
class EmbeddingStore:
    dimension: int
    table: dict[str, np.ndarray] = field(repr=False)
    # phrase-mean memo; the store is immutable so entries never invalidate
    _phrase_cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def vocab_size(self) -> int:
        return len(self.table)

    def __contains__(self, token: str) -> bool:
        return token.lower() in self.table


def load_store(path: str) -> EmbeddingStore:
    """Parse a word2vec text file into an immutable store.

    Rejects duplicate tokens (after case folding), vectors whose length
    disagrees with the declared dimension, non-finite entries, and any
    mismatch between the declared vocab size and the actual line count.
    """
    with open(path, encoding="utf-8") as fh:
        header = fh.readline()
        parts = header.split()
        if len(parts) != 2:
            raise MalformedLine(1, f"header must be '<vocab_size> <dimension>', got {header!r}")
        try:
            vocab_size, dimension = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLine(1, f"non-integer header: {header!r}") from None
        if vocab_size <= 0:
            raise EmptyVocabulary(f"declared vocab_size is {vocab_size}")
        if dimension <= 0:
            raise MalformedLine(1, f"declared dimension is {dimension}")

        table: dict[str, np.ndarray] = {}
        line_no = 1
        for raw in fh:
            line_no += 1
            if raw.strip() == "":
                continue
            fields = raw.split()
            token = fields[0].lower()
            if len(fields) - 1 != dimension:
                raise DimensionMismatch(
                    f"line {line_no}: expected {dimension} values, got {len(fields) - 1}",
                    line_no=line_no)
            try:
                vec = np.array([float(v) for v in fields[1:]], dtype=np.float64)
            except ValueError:
                raise MalformedLine(line_no, f"non-numeric value on line {line_no}") from None
            if not np.all(np.isfinite(vec)):
                raise MalformedLine(line_no, f"non-finite value on line {line_no}")
            if token in table:
                raise DuplicateToken(token)
            table[token] = vec
            vec.setflags(write=False)

        if len(table) != vocab_size:
            raise MalformedLine(
                line_no + 1,
                f"header declares {vocab_size} tokens but file has {len(table)}")
    return EmbeddingStore(dimension=dimension, table=table)


def save_store(store: EmbeddingStore, path: str) -> None:
    """Write the store back in word2vec text format.

    Values are written with repr (shortest round-trip form), so a
    load/save/load cycle reproduces every float bit-exactly.
    """
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{store.vocab_size} {store.dimension}\n")
        for token, vec in store.table.items():
            fh.write(token + " " + " ".join(repr(float(v)) for v in vec) + "\n")


def lookup(store: EmbeddingStore, token: str) -> np.ndarray | None:
    """Case-folded exact match; None for out-of-vocabulary tokens."""
    return store.table.get(token.lower())


def phrase_embedding(store: EmbeddingStore, phrase: str) -> np.ndarray | None:
    """Unweighted mean of the in-vocabulary token vectors of a phrase.

    Tokens are whitespace-split and case-folded; out-of-vocabulary tokens are
    dropped. A phrase with no in-vocabulary token yields None, never a zero
    vector (zero vectors would poison cosine similarity downstream).
    """
    key = phrase.lower()
    if key in store._phrase_cache:
        return store._phrase_cache[key]
    vecs = [v for v in (store.table.get(t) for t in key.split()) if v is not None]
    if not vecs:
        result = None
    elif len(vecs) == 1:
        result = vecs[0]
    else:
        result = kernels.weighted_mean(np.stack(vecs), np.ones(len(vecs)))
        result.setflags(write=False)
    store._phrase_cache[key] = result
    return result


def weighted_average(vectors: list[np.ndarray], weights: list[float]) -> np.ndarray:
    """Sum(w_i * v_i) / sum(w_i) for same-dimension vectors and weights >= 0."""
    if len(vectors) == 0:
        raise EmptyInput("weighted_average of zero vectors")
    if len(vectors) != len(weights):
        raise DimensionMismatch(
            f"{len(vectors)} vectors but {len(weights)} weights")
    dim = len(vectors[0])
    for v in vectors[1:]:
        if len(v) != dim:
            raise DimensionMismatch("vectors of differing dimension")
    w = np.asarray(weights, dtype=np.float64)
    if np.any(w < 0):
        raise WeightOutOfRange("weights must be >= 0")
    if w.sum() <= 0.0:
        raise AllZeroWeights("weights sum to zero")
    if len(vectors) == 1:
        return np.asarray(vectors[0], dtype=np.float64)
    return kernels.weighted_mean(np.stack(vectors).astype(np.float64), w)


def cosine_similarity(a: np.ndarray, b: np.ndarray) -> float:
    """a.b / (|a||b|), clamped to [-1, 1] against floating-point overshoot."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape:
        raise DimensionMismatch(f"{a.shape} vs {b.shape}")
    if np.linalg.norm(a) == 0.0 or np.linalg.norm(b) == 0.0:
        raise ZeroVector("cosine similarity of a zero vector")
    return kernels.cosine_parts(a, b)[3]
