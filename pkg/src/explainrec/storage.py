"""User-model persistence: one JSON file per user under a data directory.

Writes are atomic (write to a temp file, fsync, rename) and serialized per
user, so concurrent readers see either the old or the new committed model,
never a partial one.
"""

import json
import os
import tempfile
import threading
import uuid
from collections import defaultdict

from .interests import Interest, InterestModel


class UserStore:
    def __init__(self, data_dir: str):
        self.users_dir = os.path.join(data_dir, "users")
        os.makedirs(self.users_dir, exist_ok=True)
        self._locks: dict[str, threading.Lock] = defaultdict(threading.Lock)
        self._registry_lock = threading.Lock()

    def _lock_for(self, user_id: str) -> threading.Lock:
        with self._registry_lock:
            return self._locks[user_id]

    def _path(self, user_id: str) -> str:
        safe = "".join(c if c.isalnum() or c in "-_" else "_" for c in user_id)
        return os.path.join(self.users_dir, f"{safe}.json")

    @staticmethod
    def new_user_id() -> str:
        return uuid.uuid4().hex[:12]

    def exists(self, user_id: str) -> bool:
        return os.path.isfile(self._path(user_id))

    def save(self, model: InterestModel) -> None:
        payload = {
            "user_id": model.user_id,
            "interests": [
                {"label": i.label, "weight": i.weight, "color_index": i.color_index}
                for i in model.interests],
        }
        path = self._path(model.user_id)
        with self._lock_for(model.user_id):
            fd, tmp = tempfile.mkstemp(prefix=".tmp_user_", dir=self.users_dir)
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as fh:
                    json.dump(payload, fh, indent=2, sort_keys=True)
                    fh.flush()
                    os.fsync(fh.fileno())
                os.replace(tmp, path)
            finally:
                if os.path.exists(tmp):
                    os.remove(tmp)

    def load(self, user_id: str) -> InterestModel | None:
        path = self._path(user_id)
        if not os.path.isfile(path):
            return None
        with self._lock_for(user_id):
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        return InterestModel(
            user_id=data["user_id"],
            interests=tuple(
                Interest(label=i["label"], weight=i["weight"],
                         color_index=i["color_index"])
                for i in data["interests"]))
