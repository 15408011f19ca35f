"""On-disk result cache: one JSON file per key, written atomically."""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from collections.abc import Callable, Mapping
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

from . import __version__

__all__ = ["CACHE_ENV", "cache_key", "default_cache_dir", "ResultCache"]

CACHE_ENV = "SUBSUMLAB_CACHE"

log = logging.getLogger(__name__)


def cache_key(
    op: str,
    n: int | None = None,
    a: int | None = None,
    cls: object = None,
    params: Mapping[str, object] | None = None,
) -> str:
    """Canonical key ``op=..;n=..;a=..;class=..;params=k1=v1,k2=v2``.

    Absent fields are left empty; params are sorted by name.
    """
    fields = ["" if v is None else str(v) for v in (n, a, cls)]
    plist = ",".join(f"{k}={params[k]}" for k in sorted(params or {}))
    return f"op={op};n={fields[0]};a={fields[1]};class={fields[2]};params={plist}"


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    base = os.environ.get("XDG_DATA_HOME") or Path.home() / ".local" / "share"
    return Path(base) / "subsumlab" / "cache"


def _major(version: str) -> str:
    return version.split(".", 1)[0]


class ResultCache:
    """Keyed JSON cache. Any I/O or decode failure degrades to recomputing."""

    def __init__(self, directory: str | os.PathLike | None = None, *, enabled: bool = True,
                 version: str = __version__):
        self.directory = Path(directory) if directory is not None else default_cache_dir()
        self.enabled = enabled
        self.version = version

    def path_for(self, key: str) -> Path:
        return self.directory / (hashlib.sha256(key.encode()).hexdigest() + ".json")

    def get(self, key: str) -> Any | None:
        if not self.enabled:
            return None
        path = self.path_for(key)
        try:
            with open(path, encoding="utf-8") as fh:
                entry = json.load(fh)
        except FileNotFoundError:
            return None
        except (OSError, ValueError) as exc:
            log.warning("ignoring unreadable cache entry %s (%s)", path, exc)
            return None
        if not isinstance(entry, dict) or entry.get("key") != key or "value" not in entry:
            log.warning("ignoring malformed cache entry %s", path)
            return None
        if _major(str(entry.get("tool_version", ""))) != _major(self.version):
            return None
        return entry["value"]

    def put(self, key: str, value: Any) -> None:
        if not self.enabled:
            return
        entry = {
            "key": key,
            "value": value,
            "created_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
            "tool_version": self.version,
        }
        path = self.path_for(key)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as fh:
                    json.dump(entry, fh, sort_keys=True)
                os.replace(tmp, path)
            except BaseException:
                os.unlink(tmp)
                raise
        except OSError as exc:
            log.warning("could not write cache entry %s (%s)", path, exc)

    def get_or_compute(self, key: str, compute: Callable[[], Any]) -> Any:
        hit = self.get(key)
        if hit is not None:
            return hit
        value = compute()
        # normalise through JSON so hits and misses return identical objects
        value = json.loads(json.dumps(value, sort_keys=True))
        self.put(key, value)
        return value
