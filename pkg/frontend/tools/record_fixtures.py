#!/usr/bin/env python3
"""Record real API responses as frontend test fixtures.

Spins the recommendation service in-process against the repository's test
data and dumps the JSON bodies the web client's tests replay through their
mocked fetch. Run from the repository root:

    python3 frontend/tools/record_fixtures.py
"""

import json
import os
import sys
import tempfile

ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", ".."))
sys.path.insert(0, os.path.join(ROOT, "src"))
os.environ.setdefault("EXPLAINREC_NUMBA", "0")

from fastapi.testclient import TestClient  # noqa: E402

from explainrec.config import ServiceConfig  # noqa: E402
from explainrec.service import create_app  # noqa: E402

DATA = os.path.join(ROOT, "tests", "data")
OUT = os.path.join(ROOT, "frontend", "tests", "fixtures")


def dump(name, body):
    path = os.path.join(OUT, f"{name}.json")
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(body, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"  {name}.json")


def main():
    os.makedirs(OUT, exist_ok=True)
    cfg = ServiceConfig(
        embedding_path=os.path.join(DATA, "embeddings_50d.txt"),
        corpus_path=os.path.join(DATA, "corpus_100.json"),
        data_dir=tempfile.mkdtemp(prefix="record-fixtures-"))
    client = TestClient(create_app(cfg))

    with open(os.path.join(DATA, "profile_alice.json"), encoding="utf-8") as fh:
        profile = json.load(fh)
    model = client.post("/users", json=profile).json()
    dump("model", model)
    user = model["user_id"]

    dump("interests", client.get(f"/users/{user}/interests").json())
    recommendations = client.get(f"/users/{user}/recommendations",
                                 params={"level": "basic"}).json()
    dump("recommendations_basic", recommendations)

    pub = recommendations["items"][0]["publication"]["id"]
    dump("why", {"publication_id": pub,
                 "payload": client.get(
                     f"/users/{user}/recommendations/{pub}/why").json()})
    dump("how", {"publication_id": pub,
                 "payload": client.get(
                     f"/users/{user}/recommendations/{pub}/how").json()})

    dump("whatif_identity",
         client.post(f"/users/{user}/whatif", json={"edits": []}).json())

    top = model["interests"][0]["label"]
    dump("whatif_reweight", client.post(f"/users/{user}/whatif", json={
        "edits": [{"op": "reweight", "label": top, "weight": 0.05}]}).json())

    dump("meta_levels", client.get("/meta/levels").json())
    print(f"fixtures recorded to {OUT}")


if __name__ == "__main__":
    main()
