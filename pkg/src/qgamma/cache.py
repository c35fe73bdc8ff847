"""Persistent cache of q_n power-sum expansions.

File layout (JSON):
    {"version": 1, "entries": {"<n>": {"terms": <GammaElement JSON>, "sha256": "<hex>"}}}

Entries whose checksum does not match are dropped and recomputed.  Cache
problems only cost time; they never change results.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile

from .gamma_ring import _QGEN, qgen, seed_qgen
from .serialize import gamma_from_json, gamma_to_json

log = logging.getLogger(__name__)

CACHE_VERSION = 1
ENV_VAR = "QGAMMA_CACHE"

__all__ = ["CACHE_VERSION", "ENV_VAR", "default_path", "cache_load", "cache_store"]


def default_path() -> str | None:
    return os.environ.get(ENV_VAR) or None


def _digest(terms) -> str:
    blob = json.dumps(terms, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def cache_load(path: str | None) -> int:
    """Seed the q_n table from `path`; returns how many entries were accepted."""
    if not path or not os.path.exists(path):
        return 0
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, ValueError) as exc:
        log.warning("ignoring unreadable cache %s: %s", path, exc)
        return 0
    if not isinstance(data, dict) or data.get("version") != CACHE_VERSION:
        log.warning("ignoring cache %s with unknown version", path)
        return 0
    table = {}
    for key, entry in data.get("entries", {}).items():
        try:
            n = int(key)
            terms = entry["terms"]
            if _digest(terms) != entry["sha256"]:
                log.warning("cache entry q_%s failed its checksum; recomputing", key)
                continue
            table[n] = gamma_from_json(terms)
        except (KeyError, TypeError, ValueError) as exc:
            log.warning("cache entry %r is malformed (%s); recomputing", key, exc)
    seed_qgen(table)
    return len(table)


def cache_store(path: str | None, upto: int | None = None) -> bool:
    """Write every memoised q_n (or q_0..q_upto) to `path` atomically."""
    if not path:
        return False
    if upto is not None:
        qgen(upto)
    n_max = len(_QGEN) - 1 if upto is None else upto
    entries = {}
    for n in range(n_max + 1):
        terms = gamma_to_json(qgen(n))
        entries[str(n)] = {"terms": terms, "sha256": _digest(terms)}
    payload = {"version": CACHE_VERSION, "entries": entries}
    try:
        directory = os.path.dirname(os.path.abspath(path))
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".qgamma-cache-")
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh)
        os.replace(tmp, path)
    except OSError as exc:
        log.warning("could not write cache %s: %s", path, exc)
        return False
    return True
