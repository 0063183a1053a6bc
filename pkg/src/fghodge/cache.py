"""Plain-text disk cache for computed characters.

One JSON file per (type, highest weight), human-inspectable by design.
The directory comes from --cache-dir, else the FGHODGE_CACHE_DIR
environment variable, else ~/.cache/fghodge.  Entries carry a format
version; a mismatch invalidates the entry and it is recomputed.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from .character import Character, character_from_payload, irrep_character
from .rootdatum import RootDatum

CACHE_VERSION = 1
ENV_VAR = "FGHODGE_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    xdg = os.environ.get("XDG_CACHE_HOME")
    base = Path(xdg) if xdg else Path.home() / ".cache"
    return base / "fghodge"


def cache_key(datum: RootDatum, lam) -> str:
    """Canonical key "FAMILY:RANK:c1,c2,...,cn"."""
    return f"{datum.stype.family}:{datum.rank}:" + ",".join(str(c) for c in lam)


def _entry_path(cache_dir: Path, key: str) -> Path:
    return cache_dir / (key.replace(":", "_") + ".json")


def load_character(datum: RootDatum, lam, cache_dir: Path) -> Character | None:
    path = _entry_path(cache_dir, cache_key(datum, lam))
    if not path.is_file():
        return None
    try:
        payload = json.loads(path.read_text())
    except (ValueError, OSError):
        return None
    if payload.get("version") != CACHE_VERSION:
        return None
    if payload.get("key") != cache_key(datum, lam):
        return None
    return character_from_payload(datum, payload["highest"], payload["mult"])


def store_character(char: Character, cache_dir: Path) -> Path:
    cache_dir.mkdir(parents=True, exist_ok=True)
    key = cache_key(char.datum, char.highest)
    payload = {
        "version": CACHE_VERSION,
        "key": key,
        "highest": list(char.highest),
        "mult": [[list(w), m] for w, m in sorted(char.mult.items())],
    }
    path = _entry_path(cache_dir, key)
    path.write_text(json.dumps(payload, separators=(",", ":")) + "\n")
    return path


def cached_character(datum: RootDatum, lam, cache_dir: Path | None = None) -> Character:
    """irrep_character with a read-through disk cache."""
    cache_dir = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    lam = datum.check_weight(lam)
    hit = load_character(datum, lam, cache_dir)
    if hit is not None:
        return hit
    char = irrep_character(datum, lam)
    try:
        store_character(char, cache_dir)
    except OSError:
        pass  # caching is best-effort; results never depend on it
    return char
