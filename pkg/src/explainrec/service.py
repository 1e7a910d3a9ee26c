"""HTTP facade: profiles, recommendations, leveled explanations, and what-if
scenarios over JSON.

The PATCH endpoint is the only state mutation; everything else is
side-effect-free. Each request is logged as one JSON line on the
"explainrec.api" logger.
"""

import json
import logging
import time

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import corpus as corpus_mod
from . import interests as interests_mod
from . import levels as levels_mod
from . import recommender, textpipe, whatif
from .config import ServiceConfig
from .embeddings import load_store
from .errors import (
    ExplainRecError,
    NoCandidates,
    RateLimited,
    RemoteUnavailable,
)
from .explanations import build_how_trace, build_what, build_why_detailed
from .storage import UserStore

access_log = logging.getLogger("explainrec.api")


def _error(status: int, code: str, detail: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": code, "detail": detail})


def _model_dict(model: interests_mod.InterestModel) -> dict:
    return {
        "user_id": model.user_id,
        "interests": [
            {"label": i.label, "weight": i.weight, "color_index": i.color_index}
            for i in model.interests],
    }


def _resolve_level(level: str | None, completeness: str | None,
                   soundness: str | None) -> levels_mod.ExplanationLevel:
    """Level by name, or by (completeness, soundness) pair; invalid pairs
    raise ValueError with the lattice's rejection rationale."""
    if completeness or soundness:
        if not (completeness and soundness):
            raise ValueError("completeness and soundness must be given together")
        try:
            pair = (levels_mod.Completeness(completeness),
                    levels_mod.Soundness(soundness))
        except ValueError:
            raise ValueError(
                "completeness and soundness must be one of low/medium/high") from None
        check = levels_mod.validate_combination(*pair)
        if not check.valid:
            raise ValueError(
                f"combination rejected ({check.reason.value}): {check.detail}")
        return check.level
    try:
        return levels_mod.ExplanationLevel(level or "basic")
    except ValueError:
        raise ValueError("level must be basic, intermediate or advanced") from None


def create_app(cfg: ServiceConfig) -> FastAPI:
    cfg.validate()
    store = load_store(cfg.embedding_path)
    stopwords = (textpipe.load_stopwords(cfg.stopword_path)
                 if cfg.stopword_path else textpipe.default_stopwords())
    publications = corpus_mod.load_corpus(
        cfg.corpus_path, store, max_phrases=cfg.max_phrases, stopwords=stopwords,
        title_boost=cfg.title_boost)
    by_id = {p.id: p for p in publications}
    users = UserStore(cfg.data_dir)
    catalog = (corpus_mod.CatalogClient(cfg.remote_base_url,
                                        timeout=cfg.remote_timeout,
                                        max_phrases=cfg.max_phrases,
                                        stopwords=stopwords,
                                        title_boost=cfg.title_boost)
               if cfg.remote_enabled else None)

    app = FastAPI(title="explainrec", version="0.1.0")

    @app.middleware("http")
    async def log_requests(request: Request, call_next):
        started = time.monotonic()
        response = await call_next(request)
        access_log.info(json.dumps({
            "method": request.method,
            "path": request.url.path,
            "status": response.status_code,
            "duration_ms": round((time.monotonic() - started) * 1000, 3),
        }, sort_keys=True))
        return response

    @app.exception_handler(ExplainRecError)
    async def engine_error(request: Request, exc: ExplainRecError):
        if isinstance(exc, RemoteUnavailable):
            return _error(503, exc.code, str(exc))
        if isinstance(exc, RateLimited):
            return _error(429, exc.code, str(exc))
        return _error(400, exc.code, str(exc))

    @app.exception_handler(ValueError)
    async def value_error(request: Request, exc: ValueError):
        return _error(400, "validation", str(exc))

    def get_model(user_id: str) -> interests_mod.InterestModel | None:
        return users.load(user_id)

    def candidates_for(model: interests_mod.InterestModel) -> list:
        source = catalog if catalog is not None else publications
        return corpus_mod.fetch_candidates(model.active, source, cfg.candidate_limit)

    def scored_or_none(model, pub_id: str):
        pub = by_id.get(pub_id)
        if pub is None:
            return None
        return recommender.score(model, pub, store)

    @app.post("/users", status_code=201)
    async def create_user(payload: dict):
        profile = corpus_mod.parse_profile(
            payload, max_phrases=cfg.max_phrases, stopwords=stopwords,
            title_boost=cfg.title_boost)
        if not profile.user_id:
            profile = corpus_mod.Profile(
                user_id=UserStore.new_user_id(),
                publications=profile.publications,
                manual_interests=profile.manual_interests)
        model = interests_mod.model_from_profile(profile, store)
        users.save(model)
        return _model_dict(model)

    @app.get("/users/{user_id}/interests")
    async def get_interests(user_id: str):
        model = get_model(user_id)
        if model is None:
            return _error(404, "unknown_user", f"no user {user_id!r}")
        return build_what(model).to_dict()

    @app.patch("/users/{user_id}/interests")
    async def patch_interests(user_id: str, payload: dict):
        model = get_model(user_id)
        if model is None:
            return _error(404, "unknown_user", f"no user {user_id!r}")
        edits = [interests_mod.InterestEdit.from_dict(e)
                 for e in payload.get("edits", [])]
        updated = interests_mod.edit_interests(model, edits, store)
        users.save(updated)
        return _model_dict(updated)

    @app.get("/users/{user_id}/recommendations")
    async def get_recommendations(user_id: str, level: str | None = None,
                                  completeness: str | None = None,
                                  soundness: str | None = None,
                                  threshold: float | None = None,
                                  k: int | None = None):
        model = get_model(user_id)
        if model is None:
            return _error(404, "unknown_user", f"no user {user_id!r}")
        lvl = _resolve_level(level, completeness, soundness)
        use_threshold = cfg.threshold if threshold is None else threshold
        use_k = cfg.top_k if k is None else k
        try:
            pool = candidates_for(model)
        except NoCandidates:
            pool = []
        recset = recommender.recommend(model, pool, store, use_k, use_threshold) \
            if pool else recommender.RecommendationSet((), use_threshold, use_k)
        return {
            "threshold": recset.threshold,
            "k": recset.k,
            "level": lvl.value,
            "items": [
                {
                    "publication": {"id": r.publication.id,
                                    "title": r.publication.title,
                                    "abstract": r.publication.abstract},
                    "overall_score": r.overall_score,
                    "display_percent": r.display_percent,
                    "per_interest": r.per_interest,
                    "explanation": levels_mod.assemble(
                        lvl, model, r, store,
                        highlight_threshold=cfg.highlight_threshold).to_dict(),
                }
                for r in recset.items],
        }

    @app.get("/users/{user_id}/recommendations/all")
    async def get_all_scores(user_id: str):
        """Debug view: every candidate with its score, no threshold/k cut."""
        model = get_model(user_id)
        if model is None:
            return _error(404, "unknown_user", f"no user {user_id!r}")
        try:
            pool = candidates_for(model)
        except NoCandidates:
            pool = []
        scored = recommender.score_all(model, pool, store)
        return {"items": [
            {"publication_id": r.publication.id,
             "overall_score": r.overall_score,
             "display_percent": r.display_percent}
            for r in scored]}

    @app.get("/users/{user_id}/recommendations/{pub_id}/why")
    async def get_why(user_id: str, pub_id: str):
        model = get_model(user_id)
        if model is None:
            return _error(404, "unknown_user", f"no user {user_id!r}")
        rec = scored_or_none(model, pub_id)
        if rec is None:
            return _error(404, "unknown_publication", f"no publication {pub_id!r}")
        return build_why_detailed(rec).to_dict()

    @app.get("/users/{user_id}/recommendations/{pub_id}/how")
    async def get_how(user_id: str, pub_id: str, full_vectors: bool = False):
        model = get_model(user_id)
        if model is None:
            return _error(404, "unknown_user", f"no user {user_id!r}")
        rec = scored_or_none(model, pub_id)
        if rec is None:
            return _error(404, "unknown_publication", f"no publication {pub_id!r}")
        return build_how_trace(model, rec, store).to_dict(full_vectors=full_vectors)

    @app.post("/users/{user_id}/whatif")
    async def post_whatif(user_id: str, payload: dict,
                          threshold: float | None = None, k: int | None = None):
        model = get_model(user_id)
        if model is None:
            return _error(404, "unknown_user", f"no user {user_id!r}")
        scenario = whatif.WhatIfScenario.from_dict(model, payload)
        try:
            pool = candidates_for(model)
        except NoCandidates:
            pool = []
        diff = whatif.run_scenario(
            scenario, pool, store,
            cfg.top_k if k is None else k,
            cfg.threshold if threshold is None else threshold)
        return diff.to_dict()

    @app.get("/meta/levels")
    async def meta_levels():
        return {
            "levels": {
                level.value: {
                    "completeness": spec[0].value,
                    "soundness": spec[1].value,
                    "types": sorted(t.value for t in spec[2]),
                }
                for level, spec in levels_mod.LEVEL_TABLE.items()},
            "combinations": [c.to_dict() for c in levels_mod.all_combinations()],
        }

    return app
