"""Service configuration: JSON config file, EXPLAINREC_* environment
variables, and explicit overrides, in increasing precedence."""

import json
import os
from dataclasses import dataclass, fields

ENV_PREFIX = "EXPLAINREC_"


@dataclass
class ServiceConfig:
    embedding_path: str = ""
    corpus_path: str = ""
    stopword_path: str = ""          # empty -> packaged default list
    data_dir: str = "data"
    threshold: float = 0.40
    top_k: int = 10
    top_interests: int = 5
    highlight_threshold: float = 0.40
    candidate_limit: int = 100
    max_phrases: int = 10
    title_boost: float = 1.5
    port: int = 8000
    remote_enabled: bool = False
    remote_base_url: str = ""
    remote_timeout: float = 10.0

    def validate(self) -> None:
        for name in ("threshold", "highlight_threshold"):
            value = getattr(self, name)
            if not (0.0 <= value <= 1.0):
                raise ValueError(f"{name} must be in [0, 1], got {value}")
        for name in ("top_k", "top_interests", "candidate_limit", "max_phrases"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        if self.title_boost <= 0.0:
            raise ValueError(f"title_boost must be > 0, got {self.title_boost}")
        if self.remote_timeout <= 0.0:
            raise ValueError(f"remote_timeout must be > 0, got {self.remote_timeout}")
        for name in ("embedding_path", "corpus_path"):
            path = getattr(self, name)
            if not path or not os.path.isfile(path):
                raise FileNotFoundError(f"{name}: no such file: {path!r}")
        if self.stopword_path and not os.path.isfile(self.stopword_path):
            raise FileNotFoundError(f"stopword_path: no such file: {self.stopword_path!r}")
        if self.remote_enabled and not self.remote_base_url:
            raise ValueError("remote_enabled requires remote_base_url")


def _coerce(kind, raw: str):
    if kind is bool:
        return raw.strip().lower() in ("1", "true", "yes", "on")
    return kind(raw)


def load_config(path: str | None = None, env: dict | None = None,
                overrides: dict | None = None) -> ServiceConfig:
    """Build a config from file, environment, and overrides (later wins).

    File: a flat JSON object with ServiceConfig field names. Environment:
    EXPLAINREC_<FIELD> uppercased, e.g. EXPLAINREC_THRESHOLD=0.5. Overrides:
    an in-process dict (CLI flags); None values are ignored.
    """
    env = os.environ if env is None else env
    values: dict = {}

    if path:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, dict):
            raise ValueError(f"{path}: config file must be a JSON object")
        unknown = set(data) - {f.name for f in fields(ServiceConfig)}
        if unknown:
            raise ValueError(f"{path}: unknown config keys: {sorted(unknown)}")
        values.update(data)

    for f in fields(ServiceConfig):
        raw = env.get(ENV_PREFIX + f.name.upper())
        if raw is not None:
            values[f.name] = _coerce(f.type, raw)

    if overrides:
        for key, value in overrides.items():
            if value is not None:
                values[key] = value

    return ServiceConfig(**values)
