import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))  # reference_ranker / oracle imports

from explainrec import embeddings, interests, kernels
from explainrec.corpus import load_corpus, load_profile

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


def data_path(name: str) -> str:
    return os.path.join(DATA_DIR, name)


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # compile the jitted kernels once so timed tests measure work, not JIT
    kernels.warm_up()


@pytest.fixture(scope="session")
def store():
    return embeddings.load_store(data_path("embeddings_50d.txt"))


@pytest.fixture(scope="session")
def corpus(store):
    return load_corpus(data_path("corpus_100.json"), store)


@pytest.fixture(scope="session")
def alice_model(store):
    profile = load_profile(data_path("profile_alice.json"))
    return interests.model_from_profile(profile, store)


@pytest.fixture(scope="session")
def manual_model(store):
    profile = load_profile(data_path("profile_manual.json"))
    return interests.model_from_profile(profile, store)


@pytest.fixture()
def tiny_store(tmp_path):
    """3-dim handcrafted store for arithmetic-level tests."""
    path = tmp_path / "tiny.txt"
    path.write_text(
        "6 3\n"
        "alpha 1 0 0\n"
        "beta 0 1 0\n"
        "gamma 0 0 1\n"
        "delta 0.6 0.8 0\n"
        "epsilon 0.8 0.6 0\n"
        "zeta 1 1 0\n",
        encoding="utf-8")
    return embeddings.load_store(str(path))
