"""On-disk character cache.

One character per file, in the JSON-lines format of
:meth:`GradedCharacter.to_jsonl`.  Keys are injective over distinct
mathematical objects and carry a format version; bumping the version
orphans every prior entry.  Writes are atomic (write to a temp file in the
same directory, then rename), so concurrent readers never observe a torn
file and concurrent writers of the same key simply race to identical
content.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass

from .charalg import GradedCharacter

__all__ = ["FORMAT_VERSION", "CacheKey", "CharacterCache", "resolve_cache_dir"]

FORMAT_VERSION = 1

ENV_VAR = "DEMKIT_CACHE"


def resolve_cache_dir(explicit=None):
    """Cache directory: explicit flag, else $DEMKIT_CACHE, else a per-user
    default under the XDG cache home."""
    if explicit:
        return os.path.abspath(explicit)
    env = os.environ.get(ENV_VAR)
    if env:
        return os.path.abspath(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return os.path.join(base, "demkit")


@dataclass(frozen=True)
class CacheKey:
    system: str
    kind: str  # demazure | weyl | affine-truncated
    level: int
    weight: tuple
    truncation: object = None  # int for affine-truncated, else None
    version: int = FORMAT_VERSION

    def filename(self):
        coords = "_".join(str(c) for c in self.weight)
        trunc = "" if self.truncation is None else f"_g{self.truncation}"
        return f"v{self.version}_{self.kind}_{self.system}_l{self.level}_w{coords}{trunc}.jsonl"

    @property
    def expected_header_kind(self):
        return "plain" if self.kind == "weyl" else "graded"


class CharacterCache:
    def __init__(self, directory):
        self.directory = directory

    def _path(self, key):
        return os.path.join(self.directory, key.filename())

    def load(self, key):
        """The cached character, or None on a miss.  The header line is
        re-validated; stale or corrupt entries count as misses."""
        path = self._path(key)
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError:
            return None
        try:
            header = json.loads(text.splitlines()[0])
            if header.get("system") != key.system or header.get("kind") != key.expected_header_kind:
                return None
            return GradedCharacter.from_jsonl(text, expect_system=key.system)
        except (ValueError, IndexError):
            return None

    def store(self, key, char):
        os.makedirs(self.directory, exist_ok=True)
        payload = char.to_jsonl(kind=key.expected_header_kind)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(payload)
            os.replace(tmp, self._path(key))
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise

    def entries(self):
        try:
            names = os.listdir(self.directory)
        except OSError:
            return []
        return sorted(n for n in names if n.endswith(".jsonl"))

    def stats(self):
        return {"entries": len(self.entries())}

    def clear(self):
        removed = 0
        for name in self.entries():
            try:
                os.unlink(os.path.join(self.directory, name))
                removed += 1
            except OSError:
                pass
        return removed
