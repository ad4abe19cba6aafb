"""On-disk cache of evaluation results, one JSON file per record.

Records are addressed by the SHA-256 of a canonical key, and written to a
temporary file and renamed into place so readers never see partial data.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from .errors import CacheError

ENV_VAR = "MDZETA_CACHE_DIR"


@dataclass(frozen=True)
class CacheRecord:
    key: str
    value_re: float
    value_im: float
    tail: float | None
    term_count: int
    created_at: float

    def to_dict(self) -> dict:
        return asdict(self)


def canonical_key(d: int | None, domain: str, symbol: str, truncation: str) -> str:
    """Whitespace-insensitive key; callers pass already-normalized symbol text."""

    def squash(text: str) -> str:
        return "".join(text.split())

    field = "" if d is None else str(d)
    return "|".join([field, squash(domain), squash(symbol), squash(truncation)])


def resolve_cache_dir(flag: str | None = None) -> Path:
    if flag:
        return Path(flag)
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "mdzeta"


class ResultCache:
    def __init__(self, root: str | os.PathLike):
        self.root = Path(root)

    def _path(self, key: str) -> Path:
        return self.root / (hashlib.sha256(key.encode()).hexdigest() + ".json")

    def read(self, key: str) -> CacheRecord | None:
        path = self._path(key)
        try:
            data = json.loads(path.read_text())
        except FileNotFoundError:
            return None
        except (OSError, ValueError) as exc:
            raise CacheError(f"cannot read cache record {path}: {exc}") from exc
        if data.get("key") != key:
            return None
        return CacheRecord(**data)

    def write(self, record: CacheRecord) -> Path:
        path = self._path(record.key)
        try:
            self.root.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.root, prefix=".tmp-", suffix=".json")
            try:
                with os.fdopen(fd, "w") as fh:
                    json.dump(record.to_dict(), fh, sort_keys=True)
                os.replace(tmp, path)
            except BaseException:
                if os.path.exists(tmp):
                    os.unlink(tmp)
                raise
        except OSError as exc:
            raise CacheError(f"cannot write cache record {path}: {exc}") from exc
        return path

    def list(self) -> list[CacheRecord]:
        if not self.root.exists():
            return []
        out = []
        try:
            for path in sorted(self.root.glob("*.json")):
                out.append(CacheRecord(**json.loads(path.read_text())))
        except (OSError, ValueError, TypeError) as exc:
            raise CacheError(f"cannot list cache at {self.root}: {exc}") from exc
        return sorted(out, key=lambda r: r.key)

    def clear(self) -> int:
        if not self.root.exists():
            return 0
        removed = 0
        try:
            for path in self.root.glob("*.json"):
                path.unlink()
                removed += 1
        except OSError as exc:
            raise CacheError(f"cannot clear cache at {self.root}: {exc}") from exc
        return removed


def make_record(key: str, value: complex, tail: float | None, term_count: int) -> CacheRecord:
    return CacheRecord(key, value.real, value.imag, tail, term_count, time.time())
