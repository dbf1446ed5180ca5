"""Line-delimited JSON cache of dedecks and reports, keyed by canonical form."""
from __future__ import annotations

import fcntl
import json
import logging
import os
from dataclasses import dataclass
from pathlib import Path

from . import __version__

log = logging.getLogger(__name__)

CACHE_ENV = "DERECON_CACHE"


@dataclass(frozen=True)
class CacheEntry:
    key: str
    dedeck: str
    report: dict | None
    tool_version: str = __version__

    def to_line(self) -> str:
        return json.dumps(
            {"key": self.key, "tool_version": self.tool_version, "dedeck": self.dedeck, "report": self.report},
            sort_keys=True,
        ) + "\n"


class Cache:
    """Append-only cache file; on load the last entry for a key wins.

    IO errors are logged and swallowed so callers can always fall back to
    computing.
    """

    def __init__(self, path: str | os.PathLike, tool_version: str = __version__):
        self.path = Path(path)
        self.tool_version = tool_version
        self._entries: dict[str, CacheEntry] = {}
        self._load()

    def _load(self) -> None:
        try:
            text = self.path.read_text(encoding="utf-8")
        except FileNotFoundError:
            return
        except OSError as exc:
            log.warning("cannot read cache %s: %s", self.path, exc)
            return
        for line in text.splitlines():
            try:
                raw = json.loads(line)
                entry = CacheEntry(raw["key"], raw["dedeck"], raw["report"], raw["tool_version"])
            except (ValueError, KeyError, TypeError):
                continue
            if entry.tool_version == self.tool_version:
                self._entries[entry.key] = entry

    def get(self, key: str) -> CacheEntry | None:
        return self._entries.get(key)

    def put(self, entry: CacheEntry) -> None:
        if entry.tool_version != self.tool_version:
            raise ValueError("entry tool_version does not match cache")
        self._entries[entry.key] = entry
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "a", encoding="utf-8") as fh:
                fcntl.flock(fh, fcntl.LOCK_EX)
                fh.write(entry.to_line())
                fcntl.flock(fh, fcntl.LOCK_UN)
        except OSError as exc:
            log.warning("cannot write cache %s: %s", self.path, exc)

    def __len__(self) -> int:
        return len(self._entries)


def default_cache_path() -> str | None:
    return os.environ.get(CACHE_ENV) or None
