"""On-disk store for Jack expansions.

One file per expansion::

    jack|3,1|4|v1
    3,1|1|1
    2,2|2*a|a + 1
    ...
    end|5

The trailer is there so a file cut short at a line boundary is still
recognized as damaged. Files are written to a temporary name and renamed into
place, so readers see either nothing or a complete record.
"""

from __future__ import annotations

import logging
import os
import tempfile
import threading
from pathlib import Path

from .alg import AlphaRat, format_poly, parse_poly
from .errors import JackLRError
from .partition import Partition, format_partition, parse_partition

log = logging.getLogger(__name__)

ENV_VAR = "JACKLR_CACHE"
DEFAULT_DIR = ".jackcache"
RECORD_VERSION = "v1"


class CorruptRecord(JackLRError):
    pass


def default_cache_dir() -> Path:
    return Path(os.environ.get(ENV_VAR, DEFAULT_DIR))


def encode_record(lam: Partition, nvars: int, coeffs: dict) -> str:
    lines = [f"jack|{format_partition(lam)}|{nvars}|{RECORD_VERSION}"]
    for mu, c in coeffs.items():
        lines.append(f"{format_partition(mu)}|{format_poly(c.num)}|{format_poly(c.den)}")
    lines.append(f"end|{len(coeffs)}")
    return "\n".join(lines) + "\n"


def decode_record(text: str, lam: Partition, nvars: int) -> dict:
    if not text.endswith("\n"):
        raise CorruptRecord("missing final newline")
    lines = text[:-1].split("\n")
    header = lines[0].split("|")
    if len(header) != 4 or header[0] != "jack" or header[3] != RECORD_VERSION:
        raise CorruptRecord(f"bad header {lines[0]!r}")
    if parse_partition(header[1]) != lam or int(header[2]) != nvars:
        raise CorruptRecord(f"header {lines[0]!r} does not match key {lam}, {nvars}")
    trailer = lines[-1].split("|")
    if len(trailer) != 2 or trailer[0] != "end":
        raise CorruptRecord("missing trailer")
    body = lines[1:-1]
    if int(trailer[1]) != len(body):
        raise CorruptRecord(f"trailer says {trailer[1]} terms, found {len(body)}")
    out = {}
    for line in body:
        fields = line.split("|")
        if len(fields) != 3:
            raise CorruptRecord(f"bad term line {line!r}")
        mu = parse_partition(fields[0])
        num, den = parse_poly(fields[1]), parse_poly(fields[2])
        if den.is_zero():
            raise CorruptRecord(f"zero denominator in {line!r}")
        out[mu] = AlphaRat(num, den)
    if out.get(lam) != 1:
        raise CorruptRecord(f"leading coefficient of {lam} is not 1")
    return out


def _filename(lam: Partition, nvars: int) -> str:
    body = "-".join(map(str, lam)) or "empty"
    return f"jack_{body}_n{nvars}.txt"


class DiskStore:
    """get_or_compute over files in ``root``; safe across threads and processes."""

    def __init__(self, root: str | os.PathLike):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self.hits = 0
        self.misses = 0
        self._mem: dict = {}
        self._lock = threading.Lock()

    def path_for(self, key) -> Path:
        lam, nvars = key
        return self.root / _filename(lam, nvars)

    def load(self, key):
        lam, nvars = key
        path = self.path_for(key)
        try:
            text = path.read_text(encoding="ascii")
        except FileNotFoundError:
            return None
        try:
            return decode_record(text, lam, nvars)
        except (JackLRError, ValueError) as exc:
            log.warning("discarding damaged cache entry %s: %s", path, exc)
            return None

    def store(self, key, value) -> None:
        lam, nvars = key
        data = encode_record(lam, nvars, value)
        fd, tmp = tempfile.mkstemp(prefix=".tmp_", dir=self.root)
        try:
            with os.fdopen(fd, "w", encoding="ascii") as fh:
                fh.write(data)
            os.replace(tmp, self.path_for(key))
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise

    def get_or_compute(self, key, producer):
        with self._lock:
            if key in self._mem:
                self.hits += 1
                return self._mem[key]
        value = self.load(key)
        if value is not None:
            with self._lock:
                self.hits += 1
                return self._mem.setdefault(key, value)
        value = producer()
        self.store(key, value)
        with self._lock:
            self.misses += 1
            return self._mem.setdefault(key, value)


def cache_get_or_compute(store, key, producer):
    return store.get_or_compute(key, producer)
