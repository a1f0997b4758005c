"""Line-oriented persistence for the one-component invariant tables.

File layout::

    rc_count-cache v1 entries=<count>
    <key>=<value>
    ...

Keys are canonical ``InvariantKey`` strings sorted lexicographically; values
are decimal integers or ``p/q`` in lowest terms.  Anything that does not parse
exactly (wrong version, bad line, short file) is rejected as a whole.
"""
from __future__ import annotations

import os
import warnings
from fractions import Fraction
from pathlib import Path
from typing import Dict, Optional

from .descendant import DESCENDANT_MEMO
from .exact import InvariantKey
from .nodes import MODIFIED_MEMO
from .primary import PRIMARY_MEMO

FORMAT_VERSION = "v1"
MAGIC = "rc_count-cache"
ENV_VAR = "RC_COUNT_CACHE"


class CacheFormatError(ValueError):
    pass


def default_path() -> Optional[Path]:
    value = os.environ.get(ENV_VAR)
    return Path(value) if value else None


def clear_memory() -> None:
    """Empty every in-process memo table, including the uncached modified-class one."""
    for table in (PRIMARY_MEMO, DESCENDANT_MEMO, MODIFIED_MEMO):
        table.clear()


def evaluations() -> int:
    return PRIMARY_MEMO.misses + DESCENDANT_MEMO.misses


def snapshot() -> Dict[str, Fraction]:
    entries = {}
    for table in (PRIMARY_MEMO, DESCENDANT_MEMO):
        for key, value in table.items():
            entries[str(key)] = value
    return entries


def dumps(entries: Dict[str, Fraction]) -> str:
    lines = [f"{MAGIC} {FORMAT_VERSION} entries={len(entries)}"]
    lines.extend(f"{key}={entries[key]}" for key in sorted(entries))
    return "\n".join(lines) + "\n"


def loads(text: str) -> Dict[str, Fraction]:
    lines = text.split("\n")
    if not lines or lines[-1] != "":
        raise CacheFormatError("file does not end with a newline")
    lines.pop()
    if not lines:
        raise CacheFormatError("empty file")
    header = lines[0].split(" ")
    if len(header) != 3 or header[0] != MAGIC or not header[2].startswith("entries="):
        raise CacheFormatError("missing header line")
    if header[1] != FORMAT_VERSION:
        raise CacheFormatError(f"format version {header[1]} is not {FORMAT_VERSION}")
    expected = int(header[2][len("entries="):])
    body = lines[1:]
    if len(body) != expected:
        raise CacheFormatError(f"header announces {expected} entries, found {len(body)}")
    entries = {}
    for line in body:
        key, sep, value = line.partition("=")
        if not sep:
            raise CacheFormatError(f"malformed line {line!r}")
        parsed = InvariantKey.parse(key)
        if str(parsed) != key:
            raise CacheFormatError(f"non-canonical key {key!r}")
        number = Fraction(value)
        if str(number) != value:
            raise CacheFormatError(f"non-canonical value {value!r}")
        entries[key] = number
    return entries


def load(path: Path) -> int:
    """Fill the memo tables from ``path``; return the number of entries read.

    A missing file reads as empty.  A damaged file triggers a warning and is
    ignored, so every value gets recomputed.
    """
    path = Path(path)
    if not path.exists():
        return 0
    try:
        entries = loads(path.read_text(encoding="utf-8"))
    except (CacheFormatError, ValueError, IndexError, ZeroDivisionError) as exc:
        warnings.warn(f"ignoring cache {path}: {exc}; recomputing from scratch", RuntimeWarning, stacklevel=2)
        return 0
    primary, descendant = {}, {}
    for key, value in entries.items():
        parsed = InvariantKey.parse(key)
        (primary if parsed.descendant is None else descendant)[parsed] = value
    PRIMARY_MEMO.update(primary)
    DESCENDANT_MEMO.update(descendant)
    return len(entries)


def save(path: Path) -> int:
    path = Path(path)
    entries = snapshot()
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(dumps(entries), encoding="utf-8")
    os.replace(tmp, path)
    return len(entries)
