"""Optional on-disk persistence of the root/Sigma memo.

Set QSR_CACHE_DIR to persist enumeration contexts between CLI runs.  The
format is a small binary envelope: magic, format version, SHA-256 of the
payload, then a pickled value.  Anything that fails to verify is treated
as absent and rebuilt silently.
"""

from __future__ import annotations

import hashlib
import os
import pickle
from pathlib import Path
from typing import Any, Optional

MAGIC = b"QSRC"
VERSION = 1


def cache_dir() -> Optional[Path]:
    d = os.environ.get("QSR_CACHE_DIR")
    return Path(d) if d else None


def _path_for(key: str) -> Optional[Path]:
    d = cache_dir()
    if d is None:
        return None
    return d / (hashlib.sha256(key.encode()).hexdigest()[:32] + ".qsrc")


def store(key: str, value: Any) -> None:
    path = _path_for(key)
    if path is None:
        return
    payload = pickle.dumps(value, protocol=4)
    blob = MAGIC + VERSION.to_bytes(2, "big") + hashlib.sha256(payload).digest() + payload
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_bytes(blob)
    tmp.replace(path)


def load(key: str) -> Optional[Any]:
    """The cached value, or None when missing, stale or corrupted."""
    path = _path_for(key)
    if path is None or not path.exists():
        return None
    try:
        blob = path.read_bytes()
        if blob[:4] != MAGIC or int.from_bytes(blob[4:6], "big") != VERSION:
            return None
        digest, payload = blob[6:38], blob[38:]
        if hashlib.sha256(payload).digest() != digest:
            return None
        return pickle.loads(payload)
    except (OSError, pickle.UnpicklingError, EOFError, IndexError):
        return None
