"""On-disk cache for exact per-degree tables.

Each entry is one JSON file::

    {"format_version": 1, "kind": ..., "key": {...}, "payload": ..., "sha256": ...}

where ``sha256`` is taken over the canonical JSON of ``payload``.  Files are
written to a temporary name and moved into place with ``os.replace``, so
readers only ever see complete files.  Disk caching is off unless a directory
is configured, either with :func:`set_cache_dir` or the
``JACKWHITTAKER_CACHE_DIR`` environment variable.
"""
from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
import threading
from pathlib import Path

log = logging.getLogger(__name__)

FORMAT_VERSION = 1
ENV_VAR = "JACKWHITTAKER_CACHE_DIR"

_UNSET = object()
_cache_dir = _UNSET
_lock = threading.Lock()


def set_cache_dir(path) -> None:
    """Set the cache directory; ``None`` disables disk caching."""
    global _cache_dir
    _cache_dir = None if path is None else Path(path)


def get_cache_dir() -> Path | None:
    if _cache_dir is _UNSET:
        env = os.environ.get(ENV_VAR)
        return Path(env) if env else None
    return _cache_dir


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _digest(payload) -> str:
    return hashlib.sha256(_canonical(payload).encode()).hexdigest()


def _path(kind: str, key: dict) -> Path | None:
    root = get_cache_dir()
    if root is None:
        return None
    name = hashlib.sha256(_canonical(key).encode()).hexdigest()[:24]
    return root / kind / f"{name}.json"


def load(kind: str, key: dict):
    """Return the cached payload, or ``None`` on a miss or a corrupt file."""
    path = _path(kind, key)
    if path is None or not path.exists():
        return None
    try:
        data = json.loads(path.read_text())
    except (OSError, ValueError):
        log.warning("unreadable cache file %s", path)
        return None
    if (data.get("format_version") != FORMAT_VERSION or data.get("key") != key
            or data.get("sha256") != _digest(data.get("payload"))):
        log.warning("stale or corrupt cache file %s ignored", path)
        return None
    return data["payload"]


def store(kind: str, key: dict, payload) -> None:
    path = _path(kind, key)
    if path is None:
        return
    record = {"format_version": FORMAT_VERSION, "kind": kind, "key": key,
              "payload": payload, "sha256": _digest(payload)}
    with _lock:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(_canonical(record))
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


def inspect() -> dict:
    """Summary of cache contents: entry counts and bytes per kind."""
    root = get_cache_dir()
    out = {"cache_dir": str(root) if root else None, "kinds": {}}
    if root is None or not root.exists():
        return out
    for sub in sorted(p for p in root.iterdir() if p.is_dir()):
        files = list(sub.glob("*.json"))
        out["kinds"][sub.name] = {"entries": len(files),
                                  "bytes": sum(f.stat().st_size for f in files)}
    return out


def clear() -> int:
    """Delete all cache files; returns how many were removed."""
    root = get_cache_dir()
    if root is None or not root.exists():
        return 0
    n = 0
    for f in root.glob("*/*.json"):
        f.unlink()
        n += 1
    return n
