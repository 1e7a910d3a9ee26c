"""Command line interface.

`explainrec batch` runs the full pipeline offline and writes a deterministic
output tree; `explainrec serve` starts the HTTP service. Batch exit codes:
0 success, 2 validation error, 3 I/O error.
"""

import argparse
import json
import logging
import os
import sys

from . import corpus as corpus_mod
from . import interests as interests_mod
from . import levels as levels_mod
from . import recommender, textpipe, whatif
from .config import ServiceConfig, load_config
from .embeddings import load_store
from .errors import ExplainRecError, NoCandidates, ParseError

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_IO = 3

log = logging.getLogger(__name__)


def _json_dump(path: str, data) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2, sort_keys=True)
        fh.write("\n")


def run_batch(args) -> int:
    try:
        level = levels_mod.ExplanationLevel(args.level)
    except ValueError:
        print(f"error: unknown level {args.level!r}", file=sys.stderr)
        return EXIT_VALIDATION
    if not (0.0 <= args.threshold <= 1.0):
        print(f"error: threshold {args.threshold} outside [0, 1]", file=sys.stderr)
        return EXIT_VALIDATION
    if args.top_k < 1:
        print(f"error: top-k must be >= 1, got {args.top_k}", file=sys.stderr)
        return EXIT_VALIDATION
    if args.title_boost <= 0:
        print(f"error: title-boost must be > 0, got {args.title_boost}",
              file=sys.stderr)
        return EXIT_VALIDATION

    try:
        store = load_store(args.embeddings)
        stopwords = (textpipe.load_stopwords(args.stopwords)
                     if args.stopwords else textpipe.default_stopwords())
        publications = corpus_mod.load_corpus(args.corpus, store,
                                              max_phrases=args.max_phrases,
                                              stopwords=stopwords,
                                              title_boost=args.title_boost)
        profile = corpus_mod.load_profile(args.profile,
                                          max_phrases=args.max_phrases,
                                          stopwords=stopwords,
                                          title_boost=args.title_boost)
        scenario_data = None
        if args.scenario:
            with open(args.scenario, encoding="utf-8") as fh:
                scenario_data = json.load(fh)
    except (OSError, json.JSONDecodeError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO

    try:
        model = interests_mod.model_from_profile(profile, store)
        try:
            pool = corpus_mod.fetch_candidates(model.active, publications,
                                               args.candidate_limit)
        except NoCandidates:
            pool = []
        recset = (recommender.recommend(model, pool, store, args.top_k, args.threshold)
                  if pool else recommender.RecommendationSet((), args.threshold,
                                                             args.top_k))

        os.makedirs(args.out_dir, exist_ok=True)
        bundles_dir = os.path.join(args.out_dir, "bundles")
        os.makedirs(bundles_dir, exist_ok=True)

        _json_dump(os.path.join(args.out_dir, "recommendations.json"), {
            "user_id": model.user_id,
            "level": level.value,
            "threshold": recset.threshold,
            "k": recset.k,
            "interests": [
                {"label": i.label, "weight": i.weight, "color_index": i.color_index}
                for i in model.interests],
            "items": [
                {"publication_id": r.publication.id,
                 "overall_score": r.overall_score,
                 "display_percent": r.display_percent,
                 "per_interest": r.per_interest}
                for r in recset.items],
        })
        for rec in recset.items:
            bundle = levels_mod.assemble(
                level, model, rec, store,
                highlight_threshold=args.highlight_threshold)
            _json_dump(os.path.join(bundles_dir, f"{rec.publication.id}.json"),
                       bundle.to_dict(full_vectors=args.full_vectors))

        if scenario_data is not None:
            scenario = whatif.WhatIfScenario.from_dict(model, scenario_data)
            diff = whatif.run_scenario(scenario, pool, store,
                                       args.top_k, args.threshold)
            _json_dump(os.path.join(args.out_dir, "whatif_diff.json"), diff.to_dict())
    except (ExplainRecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def run_serve(args) -> int:
    import uvicorn

    from .service import create_app

    overrides = {
        "embedding_path": args.embeddings,
        "corpus_path": args.corpus,
        "stopword_path": args.stopwords,
        "port": args.port,
        "data_dir": args.data_dir,
    }
    try:
        cfg = load_config(args.config, overrides=overrides)
        app = create_app(cfg)
    except (OSError, ValueError, ExplainRecError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    uvicorn.run(app, host=args.host, port=cfg.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="explainrec",
        description="Explainable scientific-publication recommender")
    sub = parser.add_subparsers(dest="command", required=True)

    batch = sub.add_parser("batch", help="offline run: write recommendations "
                                         "and explanation bundles")
    batch.add_argument("--embeddings", required=True,
                       help="word2vec text-format vector file")
    batch.add_argument("--corpus", required=True, help="candidate corpus JSON")
    batch.add_argument("--profile", required=True, help="user profile JSON")
    batch.add_argument("--level", default="basic",
                       help="basic | intermediate | advanced")
    batch.add_argument("--out-dir", required=True)
    batch.add_argument("--threshold", type=float,
                       default=recommender.DEFAULT_THRESHOLD)
    batch.add_argument("--top-k", type=int, default=recommender.DEFAULT_TOP_K)
    batch.add_argument("--scenario", help="optional what-if scenario JSON")
    batch.add_argument("--stopwords", help="stopword file (default: packaged list)")
    batch.add_argument("--max-phrases", type=int,
                       default=textpipe.DEFAULT_MAX_PHRASES)
    batch.add_argument("--title-boost", type=float,
                       default=textpipe.DEFAULT_TITLE_BOOST,
                       help="salience multiplier for title occurrences")
    batch.add_argument("--candidate-limit", type=int,
                       default=corpus_mod.DEFAULT_CANDIDATE_LIMIT)
    batch.add_argument("--highlight-threshold", type=float, default=0.40)
    batch.add_argument("--full-vectors", action="store_true",
                       help="serialize full embedding vectors in traces")
    batch.set_defaults(func=run_batch)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--config", help="JSON config file")
    serve.add_argument("--embeddings")
    serve.add_argument("--corpus")
    serve.add_argument("--stopwords")
    serve.add_argument("--data-dir")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int)
    serve.set_defaults(func=run_serve)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
