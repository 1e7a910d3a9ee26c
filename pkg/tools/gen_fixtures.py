#!/usr/bin/env python3
"""Regenerate the committed test fixtures under tests/data/.

Everything is seeded and deterministic:

  embeddings_50d.txt   500-token, 50-dim vector file. Tokens get a unit
                       vector drawn around one of eight topic centroids
                       (noise-only for connective words), so phrases from the
                       same topic area are measurably similar while
                       cross-topic similarity hovers near zero -- scores
                       genuinely straddle the 40% display threshold.
  corpus_100.json      20 hand-written + 80 template-generated publications.
  profile_alice.json   a user whose three publications imply embeddings /
                       recommender interests.
  profile_manual.json  a user with hand-entered weighted interests.
  scenario.json        a what-if scenario valid against alice's model.
  catalog_response.json     recorded remote-catalog search response.
  catalog_normalized.json   expected normalizer output (salience-free).
  golden_trace.json    (--golden) pinned How-trace JSON for one fixture
                       recommendation, generated under the numpy kernel path.

Run from the repository root:  python3 tools/gen_fixtures.py [--golden]
"""

import argparse
import json
import os
import random
import sys

os.environ.setdefault("EXPLAINREC_NUMBA", "0")  # goldens pin the numpy path

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from explainrec import embeddings, interests, recommender, textpipe  # noqa: E402
from explainrec.corpus import Publication, load_corpus, load_profile  # noqa: E402

SEED = 20240811
DIM = 50
VOCAB_SIZE = 500
TOPIC_NOISE = 0.8

TOPICS = {
    "learning": [
        "learning", "training", "gradient", "optimization", "neural", "network",
        "deep", "layer", "regression", "classifier", "classification",
        "supervised", "unsupervised", "feature", "dataset", "accuracy", "loss",
        "generalization", "transformer", "attention", "convolution", "recurrent",
        "prediction", "embedding",
    ],
    "text": [
        "language", "text", "corpus", "token", "parsing", "semantic", "syntax",
        "retrieval", "query", "document", "ranking", "relevance", "keyword",
        "phrase", "vocabulary", "translation", "summarization", "sentiment",
        "entity", "annotation", "indexing", "search", "recommendation",
        "recommender",
    ],
    "graphs": [
        "graph", "vertex", "edge", "centrality", "clustering", "community",
        "connectivity", "path", "cycle", "tree", "spanning", "adjacency",
        "spectral", "walk", "diffusion", "propagation", "modularity",
        "partition", "matching", "flow", "subgraph", "motif", "clique",
        "triangle",
    ],
    "systems": [
        "distributed", "latency", "throughput", "scheduling", "concurrency",
        "cache", "memory", "storage", "replication", "consistency", "fault",
        "tolerance", "protocol", "consensus", "cluster", "container",
        "pipeline", "streaming", "database", "transaction", "scalability",
        "sharding", "workload", "virtualization",
    ],
    "security": [
        "encryption", "cipher", "authentication", "signature", "hash",
        "integrity", "adversary", "attack", "vulnerability", "exploit",
        "malware", "intrusion", "detection", "firewall", "privacy",
        "anonymity", "confidentiality", "verification", "audit", "forensics",
        "obfuscation", "sandbox", "phishing", "watermarking",
    ],
    "vision": [
        "image", "pixel", "segmentation", "object", "recognition", "tracking",
        "camera", "stereo", "depth", "texture", "illumination", "filtering",
        "histogram", "keypoint", "descriptor", "registration",
        "reconstruction", "rendering", "video", "motion", "contour",
        "saliency", "foreground", "occlusion",
    ],
    "bio": [
        "gene", "protein", "genome", "sequence", "expression", "mutation",
        "cell", "tissue", "clinical", "patient", "diagnosis", "treatment",
        "drug", "molecular", "pathway", "biomarker", "epidemiology", "cohort",
        "trial", "dosage", "receptor", "enzyme", "antibody", "microbiome",
    ],
    "physics": [
        "quantum", "particle", "energy", "momentum", "lattice", "simulation",
        "dynamics", "equilibrium", "entropy", "thermodynamics", "oscillation",
        "resonance", "wavelength", "interference", "superposition",
        "decoherence", "qubit", "annealing", "hamiltonian", "perturbation",
        "scattering", "condensate", "phonon", "soliton",
    ],
}

GENERAL = [
    "propose", "approach", "method", "methods", "improves", "improve",
    "benchmark", "benchmarks", "analysis", "shows", "robust", "experiment",
    "experiments", "demonstrate", "performance", "novel", "framework",
    "presented", "results", "indicate", "outperforms", "baseline",
    "baselines", "paper", "studies", "study", "systems", "system",
    "evaluation", "measures", "tasks", "task", "prior", "work", "effects",
    "combine", "algorithm", "algorithms", "technique", "application",
    "domain", "problem", "solution", "efficient", "effective", "empirical",
    "theoretical", "significant", "comparison", "metric", "random", "scores",
    "score", "model", "models", "inference", "tuning", "estimation",
    "sampling", "iterative", "convergence", "structure", "representation",
    "architecture", "module", "component", "design", "implementation",
    "overhead", "tradeoff", "large", "scale", "data", "real", "world",
    "settings", "setting", "practical", "strong", "state", "art", "recent",
    "classical", "modern", "standard", "common", "diverse", "rich", "sparse",
    "dense", "small", "new", "key", "main", "open", "hard", "fast", "slow",
    "high", "low", "quality", "cost", "time", "space", "error", "rate",
    "bound", "bounds", "proof", "theory", "notion", "insight", "evidence",
    "finding", "findings", "gain", "gains", "impact", "behavior", "property",
    "properties", "assumption", "assumptions", "condition", "conditions",
]

FILLER = [
    "abacus", "ballad", "cobalt", "dahlia", "ember", "fjord", "garnet",
    "harbor", "iris", "jasper", "kelp", "lantern", "meadow", "nectar",
    "onyx", "prairie", "quartz", "russet", "sage", "tundra", "umber",
    "violet", "willow", "xenon", "yarrow", "zephyr", "amber", "birch",
    "cedar", "dune", "elm", "fern", "grove", "heather", "ivy", "juniper",
    "kale", "larch", "maple", "nutmeg", "oak", "pine", "quince", "rowan",
    "spruce", "thistle", "umbra", "vine", "wren", "yew", "aspen", "basil",
    "clover", "daisy", "eucalyptus", "foxglove", "ginger", "hazel",
    "indigo", "jade", "kiwi", "lilac", "marigold", "nettle", "olive",
    "peony", "quill", "rosemary", "saffron", "tulip", "ultramarine",
    "vanilla", "walnut", "xylem", "yucca", "zinnia", "acorn", "bramble",
    "chestnut", "dogwood", "elder", "flax", "gorse", "hawthorn", "ironwood",
    "jackal", "kestrel", "lemur", "marmot", "narwhal", "ocelot", "pangolin",
    "quokka", "raven", "starling", "tapir", "urchin", "vole", "wombat",
    "yak", "zebra", "albatross", "bison", "caribou", "dolphin", "egret",
    "falcon", "gannet", "heron", "ibex", "jaguar", "koala", "lynx",
    "moose", "newt", "osprey", "puffin", "quail", "robin", "swift",
    "toucan", "viper", "walrus", "xerus", "yellowtail", "zorilla",
    "anchor", "beacon", "compass", "derrick", "estuary", "furnace",
    "gable", "hearth", "inlet", "jetty", "keel", "lagoon", "mast",
    "nautical", "oar", "pier", "quay", "rudder", "sextant", "tiller",
    "upland", "vessel", "wharf", "yawl", "zenith", "atlas", "brook",
    "canyon", "delta", "escarpment", "foothill", "glacier", "headland",
    "isthmus", "jungle", "knoll", "lowland", "mesa", "notch", "oasis",
    "plateau", "quarry", "ridge", "summit", "terrace", "upstream",
    "valley", "watershed", "xeric", "yonder", "ziggurat", "arbor",
    "bellows", "chisel", "dovetail", "easel", "forge", "gimlet", "hammer",
    "ingot", "jigsaw", "kiln", "lathe", "mallet", "nail", "oakum",
    "plane", "quench", "rasp", "solder", "trowel", "underlay", "vise",
    "wedge", "yardstick", "zipper",
]

TITLE_TEMPLATES = [
    "{} {} for {} {}",
    "{} {} in {} {}",
    "the {} of {} {}",
    "{} {} with {} {}",
    "toward {} {} {}",
    "on {} {} and {} {}",
]

SENTENCE_TEMPLATES = [
    "we propose a {} {} approach for {} {}.",
    "the {} {} method improves {} on {} benchmarks.",
    "our {} analysis of {} {} shows robust {}.",
    "experiments on {} {} demonstrate {} {} performance.",
    "a novel {} framework for {} {} is presented.",
    "results indicate that {} {} outperforms {} baselines.",
    "this paper studies {} {} in {} systems.",
    "the evaluation measures {} {} across {} tasks.",
    "prior work on {} {} ignores {} {} effects.",
    "we combine {} {} with {} {} to improve {}.",
]

# 20 hand-written publications; these are the keyphrase acceptance set.
HAND_DOCS = [
    ("spectral clustering for community detection in large graphs",
     "we study spectral clustering on large graphs. the adjacency structure of a graph "
     "drives community detection. random walks on the graph reveal stable communities. "
     "our spectral method improves modularity on benchmark graphs. experiments show "
     "robust clustering performance across sparse graphs."),
    ("deep neural network training with adaptive gradient optimization",
     "training deep neural networks requires careful gradient optimization. we analyze "
     "adaptive gradient methods and their convergence behavior. the proposed optimization "
     "schedule improves accuracy on classification benchmarks. deep networks trained with "
     "our method show strong generalization. results hold across diverse datasets."),
    ("semantic ranking for scholarly document retrieval",
     "scholarly search engines rank documents by relevance to a query. we propose a "
     "semantic ranking model built on document embeddings. the retrieval pipeline scores "
     "each document against the query embedding. semantic ranking improves retrieval "
     "quality over keyword matching. an evaluation on scholarly corpora shows significant "
     "gains."),
    ("image segmentation with convolutional feature learning",
     "image segmentation assigns a label to every pixel. convolutional networks learn "
     "texture and shape features from labeled images. our segmentation architecture "
     "combines multiscale features with contour cues. the method improves segmentation "
     "accuracy on standard image benchmarks. qualitative results show crisp object "
     "boundaries."),
    ("fault tolerant scheduling in distributed storage clusters",
     "distributed storage clusters must tolerate node faults. we design a scheduling "
     "protocol that preserves consistency under replication. the scheduler balances "
     "throughput and latency across the cluster. fault injection experiments demonstrate "
     "graceful degradation. the protocol sustains high throughput under heavy workload."),
    ("intrusion detection with anomaly aware traffic analysis",
     "network intrusion detection guards against adversary attacks. we build an anomaly "
     "detection pipeline over traffic features. the detector flags exploit attempts and "
     "malware signatures. an audit of detection accuracy shows low false alarms. the "
     "approach strengthens integrity without heavy overhead."),
    ("gene expression analysis for clinical diagnosis",
     "gene expression profiles inform clinical diagnosis. we analyze expression data from "
     "patient cohorts. a biomarker panel separates treatment responders from others. the "
     "analysis links molecular pathways to clinical outcomes. findings support precise "
     "diagnosis and dosage decisions."),
    ("quantum annealing for lattice simulation",
     "quantum annealing explores low energy states of a lattice hamiltonian. we simulate "
     "annealing dynamics under controlled perturbation. entropy production marks the "
     "equilibrium transition. the simulation reproduces resonance effects seen in "
     "experiments. results clarify when annealing outperforms classical sampling."),
    ("graph embedding methods for vertex classification",
     "graph embeddings map each vertex into a feature space. random walk statistics "
     "capture neighborhood structure. we train a classifier on vertex embeddings for "
     "label prediction. the embedding method preserves community structure. experiments "
     "on citation graphs show accurate classification."),
    ("keyword extraction and topic indexing for text corpora",
     "keyword extraction condenses a document into salient phrases. we rank candidate "
     "phrases by centrality in a cooccurrence graph. extracted keywords feed a topic "
     "indexing pipeline for large corpora. the index supports fast retrieval and "
     "summarization. human evaluation confirms keyword quality."),
    ("transformer attention models for sequence prediction",
     "transformer models rely on attention over the input sequence. we study attention "
     "patterns in sequence prediction tasks. a lightweight transformer matches accuracy "
     "with lower training cost. attention visualization explains model predictions. the "
     "model transfers across language and vision benchmarks."),
    ("object recognition and tracking in video",
     "video understanding requires object recognition and tracking. our tracker links "
     "object detections across video frames. motion cues stabilize tracking under "
     "occlusion. recognition accuracy improves with temporal context. the system runs "
     "in real time on standard hardware."),
    ("low latency caching for streaming database workloads",
     "streaming workloads stress database caching layers. we design a cache policy "
     "tuned for streaming access patterns. the policy cuts tail latency while keeping "
     "throughput. consistency is preserved under concurrent transactions. deployment "
     "results show stable performance at scale."),
    ("privacy preserving authentication for distributed services",
     "authentication protocols often leak user identity. we present a privacy "
     "preserving authentication scheme with blind signatures. the scheme resists replay "
     "attack and credential theft. a formal verification confirms confidentiality "
     "properties. measurements show modest computational overhead."),
    ("protein pathway modeling for drug response",
     "drug response depends on protein pathway activity. we model pathway dynamics from "
     "expression and mutation data. the model predicts treatment response for each "
     "patient. receptor level features dominate the prediction. case studies illustrate "
     "actionable treatment choices."),
    ("entropy production in nonequilibrium particle dynamics",
     "nonequilibrium dynamics generate entropy at a measurable rate. we derive entropy "
     "production bounds for driven particle systems. simulation confirms the bounds "
     "across momentum scales. oscillation spectra reveal the relaxation pathway. the "
     "theory connects thermodynamics with microscopic dynamics."),
    ("recommender systems with embedding similarity scoring",
     "content based recommender systems score items against a user interest model. we "
     "compute embeddings for user interests and candidate items. cosine similarity "
     "between embeddings drives the recommendation ranking. the recommender explains "
     "each score with per interest evidence. a user study shows higher trust in "
     "explained recommendations."),
    ("random walk diffusion for influence propagation",
     "influence propagation on a network follows diffusion dynamics. random walk models "
     "estimate the reach of a seed set. we bound propagation depth via spectral "
     "properties of the graph. simulations match the analytical diffusion profile. "
     "the bounds guide seed selection for campaigns."),
    ("depth estimation with stereo reconstruction networks",
     "stereo cameras enable dense depth estimation. a reconstruction network fuses left "
     "and right image features. depth supervision comes from sparse keypoint matches. "
     "the network generalizes to unseen camera rigs. reconstruction quality rivals "
     "active depth sensors."),
    ("sentiment annotation for dialogue summarization",
     "dialogue summarization benefits from sentiment signals. we annotate dialogue "
     "turns with sentiment labels. a summarizer conditions on sentiment to keep "
     "salient turns. annotation quality is validated with double labeling. summaries "
     "preserve the emotional arc of the dialogue."),
]

ALICE_PUBS = [
    ("interest models from publication text",
     "we infer a weighted interest model from an author publication history. keyword "
     "extraction finds salient phrases in each publication. phrase embeddings aggregate "
     "into a compact interest representation. the interest model supports personalized "
     "recommendation of new publications."),
    ("embedding similarity for publication recommendation",
     "publication recommendation compares interest embeddings with candidate embeddings. "
     "cosine similarity provides a transparent relevance score. we study score "
     "distributions across scholarly corpora. embedding similarity outperforms keyword "
     "overlap baselines."),
    ("explaining recommendation scores to end users",
     "users trust a recommender more when scores are explained. we expose per interest "
     "similarity evidence for each recommendation. keyword level attribution links "
     "publication phrases to user interests. an interactive explanation interface "
     "supports what if exploration."),
]

MANUAL_INTERESTS = [
    {"label": "spectral clustering", "weight": 1.0},
    {"label": "community detection", "weight": 0.9},
    {"label": "random walk", "weight": 0.8},
    {"label": "graph partition", "weight": 0.6},
    {"label": "influence propagation", "weight": 0.5},
    {"label": "quantum annealing", "weight": 0.3},
]

CATALOG_RESPONSE = {
    "total": 5,
    "data": [
        {"paperId": "ext-0101",
         "title": "graph neural networks for molecular property prediction",
         "abstract": "graph neural networks learn molecular structure for property "
                     "prediction. message passing aggregates neighbor features on the "
                     "molecular graph."},
        {"paperId": "ext-0102",
         "title": "contrastive learning of sentence embeddings",
         "abstract": "contrastive training aligns sentence embeddings with semantic "
                     "similarity. the learned embeddings improve retrieval and ranking "
                     "tasks."},
        {"paperId": "ext-0103",
         "title": "survey of cache replacement policies",
         "abstract": None},
        {"paperId": None,
         "title": "record without an identifier is dropped",
         "abstract": "this record lacks a paper identifier."},
        {"paperId": "ext-0105",
         "title": "",
         "abstract": "this record lacks a title and is dropped."},
    ],
}


def stopword_set() -> frozenset[str]:
    return textpipe.default_stopwords()


def generated_docs(count: int = 80) -> list[tuple[str, str]]:
    docs = []
    topic_names = list(TOPICS)
    for i in range(count):
        rng = random.Random(1000 + i)
        topic = TOPICS[topic_names[i % len(topic_names)]]

        def word() -> str:
            pool = topic if rng.random() < 0.8 else GENERAL
            return rng.choice(pool)

        title_tpl = rng.choice(TITLE_TEMPLATES)
        title = title_tpl.format(*(word() for _ in range(title_tpl.count("{}"))))
        sentences = []
        for _ in range(rng.randint(4, 7)):
            tpl = rng.choice(SENTENCE_TEMPLATES)
            sentences.append(tpl.format(*(word() for _ in range(tpl.count("{}")))))
        docs.append((title, " ".join(sentences)))
    return docs


def collect_vocab(docs: list[tuple[str, str]], stop: frozenset[str],
                  forced: set[str]) -> list[str]:
    """Exactly VOCAB_SIZE tokens: the forced set plus the most document-
    frequent content tokens. Rarer tokens stay out-of-vocabulary on purpose
    (they exercise the OOV-drop rules); filler pads a shortfall."""
    df: dict[str, int] = {}
    for title, abstract in docs:
        doc_tokens = {tok.text for tok in textpipe.tokenize(title + " . " + abstract)
                      if tok.text not in stop}
        for token in doc_tokens:
            df[token] = df.get(token, 0) + 1

    missing = forced - set(df)
    if missing:
        raise SystemExit(f"forced vocab tokens never occur in any document: {missing}")
    vocab = set(forced)
    for token in sorted(df, key=lambda t: (-df[t], t)):
        if len(vocab) == VOCAB_SIZE:
            break
        vocab.add(token)
    for filler in FILLER:
        if len(vocab) >= VOCAB_SIZE:
            break
        vocab.add(filler)
    if len(vocab) != VOCAB_SIZE:
        raise SystemExit(f"vocabulary is {len(vocab)} tokens, wanted {VOCAB_SIZE}")
    return sorted(vocab)


def topic_of(token: str, topic_index: dict[str, int]) -> int | None:
    for form in (token, token[:-1] if token.endswith("s") else None,
                 token[:-2] if token.endswith("es") else None):
        if form and form in topic_index:
            return topic_index[form]
    return None


def write_embeddings(vocab: list[str], path: str) -> None:
    rng = np.random.default_rng(SEED)
    centroids = rng.standard_normal((len(TOPICS), DIM))
    centroids /= np.linalg.norm(centroids, axis=1, keepdims=True)
    topic_index = {w: t for t, words in enumerate(TOPICS.values()) for w in words}

    lines = [f"{len(vocab)} {DIM}"]
    for token in vocab:
        noise = rng.standard_normal(DIM)
        noise /= np.linalg.norm(noise)
        t = topic_of(token, topic_index)
        vec = centroids[t] + TOPIC_NOISE * noise if t is not None else noise
        vec = vec / np.linalg.norm(vec)
        lines.append(token + " " + " ".join(repr(float(v)) for v in vec))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def write_json(path: str, data) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2, sort_keys=True)
        fh.write("\n")


def check_fixtures(out_dir: str) -> None:
    """Sanity checks: extraction converges, saliences are well separated,
    scores straddle the threshold, and profile inference is usable."""
    store = embeddings.load_store(os.path.join(out_dir, "embeddings_50d.txt"))
    pubs = load_corpus(os.path.join(out_dir, "corpus_100.json"), store)
    assert len(pubs) == 100, f"corpus has {len(pubs)} usable records"

    stop = stopword_set()
    for pub in pubs:
        fields = [("title", textpipe.tokenize(pub.title)),
                  ("abstract", textpipe.tokenize(pub.abstract))]
        cand = set()
        for _, toks in fields:
            for s, e in textpipe.candidate_runs(toks, stop):
                cand.update(t.text for t in toks[s:e])
        _, deltas = textpipe.token_centrality([t for _, t in fields], cand)
        assert len(deltas) <= 50 and deltas[-1] < 1e-6, f"{pub.id} did not converge"

    for pub in pubs[:20]:
        sal = [k.salience for k in pub.keyphrases]
        for a, b in zip(sal, sal[1:]):
            gap = a - b
            assert gap == 0.0 or gap > 1e-9 * max(a, 1.0), \
                f"{pub.id}: near-tie salience gap {gap}"

    alice = load_profile(os.path.join(out_dir, "profile_alice.json"))
    model = interests.model_from_profile(alice, store)
    assert len(model.interests) >= 6, f"alice has {len(model.interests)} interests"
    scored = recommender.score_all(model, pubs, store)
    above = [r for r in scored if r.overall_score > 0.40]
    below = [r for r in scored if r.overall_score <= 0.40]
    assert len(above) >= 6, f"only {len(above)} alice candidates above threshold"
    assert len(below) >= 20, f"only {len(below)} alice candidates below threshold"
    oversum = [r for r in scored if sum(r.per_interest.values()) > 1.0]
    assert oversum, "no fixture recommendation has per-interest sum > 1"

    manual = load_profile(os.path.join(out_dir, "profile_manual.json"))
    mmodel = interests.model_from_profile(manual, store)
    assert len(mmodel.active) == 5
    mscored = recommender.score_all(mmodel, pubs, store)
    mabove = [r for r in mscored if r.overall_score > 0.40]
    assert len(mabove) >= 11, \
        f"manual model clears threshold on only {len(mabove)}, top-10 cut untested"
    print(f"  alice: {len(model.interests)} interests, {len(above)} above threshold, "
          f"score range [{scored[-1].overall_score:.3f}, {scored[0].overall_score:.3f}]")
    print(f"  manual: {len(mabove)} above threshold, top {mscored[0].overall_score:.3f}")


def write_golden(out_dir: str) -> None:
    """Pin the How trace of the top fixture recommendation (numpy path)."""
    from explainrec.explanations import build_how_trace

    store = embeddings.load_store(os.path.join(out_dir, "embeddings_50d.txt"))
    pubs = load_corpus(os.path.join(out_dir, "corpus_100.json"), store)
    alice = load_profile(os.path.join(out_dir, "profile_alice.json"))
    model = interests.model_from_profile(alice, store)
    recset = recommender.recommend(model, pubs, store)
    rec = recset.items[0]
    trace = build_how_trace(model, rec, store)
    golden = {"publication_id": rec.publication.id,
              "overall_score": rec.overall_score,
              "trace": trace.to_dict(full_vectors=True)}
    write_json(os.path.join(out_dir, "golden_trace.json"), golden)
    print(f"  golden trace pinned for {rec.publication.id} "
          f"(score {rec.overall_score:.4f})")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=os.path.join(
        os.path.dirname(__file__), "..", "tests", "data"))
    parser.add_argument("--golden", action="store_true",
                        help="also regenerate golden_trace.json")
    args = parser.parse_args()
    out_dir = os.path.abspath(args.out)
    os.makedirs(out_dir, exist_ok=True)

    corpus_docs = HAND_DOCS + generated_docs()
    assert len(corpus_docs) == 100
    corpus = [
        {"id": f"pub-{i + 1:03d}", "title": title, "abstract": abstract}
        for i, (title, abstract) in enumerate(corpus_docs)]
    write_json(os.path.join(out_dir, "corpus_100.json"), corpus)

    profile_docs = [
        {"id": f"own-{i + 1}", "title": t, "abstract": a}
        for i, (t, a) in enumerate(ALICE_PUBS)]
    write_json(os.path.join(out_dir, "profile_alice.json"),
               {"user_id": "alice", "publications": profile_docs})
    write_json(os.path.join(out_dir, "profile_manual.json"),
               {"user_id": "morgan", "publications": [],
                "manual_interests": MANUAL_INTERESTS})
    write_json(os.path.join(out_dir, "catalog_response.json"), CATALOG_RESPONSE)

    stop = stopword_set()
    all_docs = corpus_docs + ALICE_PUBS + [
        (r["title"], r["abstract"] or "")
        for r in CATALOG_RESPONSE["data"] if r["title"]]
    forced = {t for item in MANUAL_INTERESTS for t in item["label"].split()}
    vocab = collect_vocab(all_docs, stop, forced)
    write_embeddings(vocab, os.path.join(out_dir, "embeddings_50d.txt"))
    print(f"  vocabulary: {len(vocab)} tokens, dim {DIM}")

    # catalog normalalized golden: salience-free view of the normalizer output
    from explainrec.corpus import CatalogClient
    client = CatalogClient("https://catalog.invalid")
    normalized = client.normalize(CATALOG_RESPONSE["data"])
    write_json(os.path.join(out_dir, "catalog_normalized.json"), [
        {"id": p.id, "title": p.title, "abstract": p.abstract,
         "keyphrases": [k.text for k in p.keyphrases]}
        for p in normalized])

    # what-if scenario valid against alice's inferred model
    store = embeddings.load_store(os.path.join(out_dir, "embeddings_50d.txt"))
    alice_model = interests.model_from_profile(
        load_profile(os.path.join(out_dir, "profile_alice.json")), store)
    labels = [i.label for i in alice_model.active]
    write_json(os.path.join(out_dir, "scenario.json"), {"edits": [
        {"op": "reweight", "label": labels[0], "weight": 0.05},
        {"op": "remove", "label": labels[1]},
        {"op": "add", "label": "quantum annealing", "weight": 0.9},
    ]})

    check_fixtures(out_dir)
    if args.golden:
        write_golden(out_dir)
    print(f"fixtures written to {out_dir}")


if __name__ == "__main__":
    main()
