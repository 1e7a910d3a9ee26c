"""Independent keyphrase ranker used to cross-check the extraction pipeline.

Deliberately shares no code with the package: plain dicts and floats, no
numpy. Implements the same documented rules (alphanumeric tokenization,
stopword-delimited candidate runs chopped at four tokens, window-4
co-occurrence counts, damping-0.85 degree-normalized iteration, per-occurrence
salience with a 1.5 title boost, lexicographic tie-break).
"""

import re

WORD = re.compile(r"[^\W_]+", re.UNICODE)


def ref_tokenize(text):
    words = [m.group(0).lower() for m in WORD.finditer(text)]
    return [w for w in words if len(w) >= 2]


def ref_runs(words, stopwords, max_len=4):
    runs = []
    start = None
    for i in range(len(words) + 1):
        boundary = i == len(words) or words[i] in stopwords
        if boundary and start is not None:
            pos = start
            while pos < i:
                runs.append((pos, min(pos + max_len, i)))
                pos += max_len
            start = None
        elif not boundary and start is None:
            start = i
    return runs


def ref_centrality(field_words, candidates, window=4, damping=0.85,
                   max_iter=50, tol=1e-6):
    weights = {}
    neighbors = {t: set() for t in candidates}
    for words in field_words:
        for i, a in enumerate(words):
            if a not in neighbors:
                continue
            for j in range(i + 1, min(i + window, len(words))):
                b = words[j]
                if b not in neighbors or b == a:
                    continue
                key = (a, b) if a < b else (b, a)
                weights[key] = weights.get(key, 0) + 1
                neighbors[a].add(b)
                neighbors[b].add(a)

    degree = {t: 0.0 for t in candidates}
    for (a, b), w in weights.items():
        degree[a] += w
        degree[b] += w

    n = len(candidates)
    ranks = {t: 1.0 / n for t in candidates}
    base = (1.0 - damping) / n
    ordered = sorted(candidates)
    for _ in range(max_iter):
        dangling = sum(ranks[t] for t in ordered if degree[t] == 0.0) / n
        new = {}
        for t in ordered:
            acc = 0.0
            for u in sorted(neighbors[t]):
                key = (t, u) if t < u else (u, t)
                acc += weights[key] / degree[u] * ranks[u]
            new[t] = base + damping * (acc + dangling)
        delta = sum(abs(new[t] - ranks[t]) for t in ordered)
        ranks = new
        if delta < tol:
            break
    return ranks


def ref_extract(title, abstract, stopwords, max_phrases=10,
                window=4, max_len=4, title_boost=1.5):
    """Top keyphrases as (text, salience) pairs, best first."""
    fields = [("title", ref_tokenize(title)), ("abstract", ref_tokenize(abstract))]
    occurrences = {}
    candidates = set()
    for name, words in fields:
        for s, e in ref_runs(words, stopwords, max_len):
            phrase = " ".join(words[s:e])
            candidates.update(words[s:e])
            occurrences.setdefault(phrase, []).append(name)
    if not occurrences:
        return []

    ranks = ref_centrality([w for _, w in fields], candidates, window)
    scored = []
    for phrase, fields_hit in occurrences.items():
        members = sum(ranks[w] for w in phrase.split(" "))
        salience = sum(
            (title_boost if f == "title" else 1.0) * members for f in fields_hit)
        scored.append((phrase, salience))
    scored.sort(key=lambda ps: (-ps[1], ps[0]))
    return scored[:max_phrases]
