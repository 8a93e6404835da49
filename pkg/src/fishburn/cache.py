"""Content-addressed on-disk cache for expanded series.

One JSON file per entry, keyed by the SHA-256 of the canonical
(id, params, truncation, ring) tuple.  Files carry a schema version; a
version mismatch is treated as a miss (with a warning) rather than an error.
Writes go through a temp file + rename so concurrent readers never observe a
torn entry.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import warnings

from .serialize import series_from_payload, series_to_payload

SCHEMA_VERSION = 1

ENV_CACHE_DIR = "FISHBURN_CACHE_DIR"


def default_cache_dir():
    return os.environ.get(ENV_CACHE_DIR)


class SeriesCache:
    def __init__(self, directory: str):
        self.directory = directory
        os.makedirs(directory, exist_ok=True)

    @staticmethod
    def _key(expr_id: str, params: dict, truncation: int, ring_tag: str) -> str:
        canonical = json.dumps(
            {"id": expr_id, "params": {k: str(v) for k, v in sorted((params or {}).items())},
             "truncation": truncation, "ring": ring_tag},
            sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode()).hexdigest()

    def _path(self, key: str) -> str:
        return os.path.join(self.directory, f"{key}.json")

    def get(self, expr_id: str, params: dict, truncation: int, ring_tag: str):
        """Cached series, or None on a miss (including schema mismatches)."""
        path = self._path(self._key(expr_id, params, truncation, ring_tag))
        if not os.path.exists(path):
            return None
        with open(path, encoding="utf-8") as fh:
            entry = json.load(fh)
        if entry.get("schema") != SCHEMA_VERSION:
            warnings.warn(
                f"cache entry {os.path.basename(path)} has schema "
                f"{entry.get('schema')} (current {SCHEMA_VERSION}); ignoring")
            return None
        return series_from_payload(entry["series"])

    def put(self, expr_id: str, params: dict, truncation: int, series) -> str:
        key = self._key(expr_id, params, truncation, series.ring.tag)
        path = self._path(key)
        entry = {
            "schema": SCHEMA_VERSION,
            "id": expr_id,
            "params": {k: str(v) for k, v in sorted((params or {}).items())},
            "series": series_to_payload(series),
        }
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(entry, fh, sort_keys=True)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return path
