"""Digest-checked on-disk cache for verification payloads.

Records are JSON files carrying a format version, the identifying key, the
canonical payload text and its SHA-256 digest.  A version mismatch or a
failed digest check makes the record invisible (with a warning passed back),
so stale or corrupted files can only cause recomputation, never wrong
answers.  Writes go to a temporary file first and are renamed into place,
which keeps concurrent writers safe: the loser of a race simply overwrites
with an identical record.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile

from .serialize import canonical_json

FORMAT_VERSION = 1


def default_cache_dir() -> str:
    env = os.environ.get("AFFINE_SINGULAR_CACHE")
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "affine-singular")


def _filename(key: dict) -> str:
    parts = [str(key[field]) for field in sorted(key)]
    safe = "-".join(parts).replace("/", "_").replace(" ", "_")
    return safe + ".json"


def cache_path(directory: str, key: dict) -> str:
    return os.path.join(directory, _filename(key))


def cache_put(directory: str, key: dict, payload_obj) -> str:
    os.makedirs(directory, exist_ok=True)
    payload = canonical_json(payload_obj)
    record = {
        "format_version": FORMAT_VERSION,
        "key": key,
        "payload": payload,
        "digest": hashlib.sha256(payload.encode()).hexdigest(),
    }
    path = cache_path(directory, key)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(canonical_json(record))
        os.replace(tmp, path)
    finally:
        if os.path.exists(tmp):
            os.unlink(tmp)
    return path


def cache_get(directory: str, key: dict):
    """Returns (payload object or None, list of warnings)."""
    path = cache_path(directory, key)
    warnings = []
    try:
        with open(path) as handle:
            record = json.load(handle)
    except FileNotFoundError:
        return None, warnings
    except (OSError, json.JSONDecodeError):
        warnings.append("cache record unreadable, recomputing: %s" % path)
        return None, warnings
    if record.get("format_version") != FORMAT_VERSION:
        return None, warnings  # silently stale
    if record.get("key") != key:
        warnings.append("cache record key mismatch, recomputing: %s" % path)
        return None, warnings
    payload = record.get("payload", "")
    digest = hashlib.sha256(payload.encode()).hexdigest()
    if digest != record.get("digest"):
        warnings.append("cache record failed its digest check, recomputing: %s" % path)
        return None, warnings
    return json.loads(payload), warnings
