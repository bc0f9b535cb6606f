"""Content-addressed disk cache for enumerated subgroup lattices.

Entries are JSON sidecar files named by the group's content key (a digest of
its multiplication table), so a cache hit can never pair a lattice with the
wrong group: renaming or re-deriving a group with the same table still hits,
while any change to the table misses.  Serialization is deterministic, so a
cache hit is byte-identical to what recomputation would store.  Corrupted or
version-mismatched entries are silently recomputed and overwritten; I/O
failures degrade to recomputation with a warning.
"""

from __future__ import annotations

import json
import os
import warnings
from typing import Dict, Optional

from .bitset import ElementSet
from .fileio import atomic_write_text
from .groups import FiniteGroup
from .lattice import Lattice, Subgroup, enumerate_subgroups

__all__ = [
    "CACHE_FORMAT_VERSION",
    "LatticeCache",
    "default_cache_dir",
    "serialize_lattice",
    "deserialize_lattice",
    "memo_lattice",
    "clear_memo",
]

CACHE_FORMAT_VERSION = 1


def default_cache_dir() -> str:
    env = os.environ.get("POWCOV_CACHE_DIR")
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "powcov")


def serialize_lattice(lat: Lattice) -> str:
    """Deterministic JSON text for a lattice (stable key order, no float
    content, trailing newline)."""
    payload = {
        "format_version": CACHE_FORMAT_VERSION,
        "content_key": lat.group.content_key(),
        "descriptor": lat.group.descriptor,
        "order": lat.group.order,
        "subgroups": [
            {
                "bits": format(s.elements.bits, "x"),
                "order": s.order,
                "proper": s.is_proper,
                "abelian": s.is_abelian,
                "normal": s.is_normal,
                "maximal": s.is_maximal,
                "powerful": s.is_powerful,
                "powerfully_embedded": s.is_powerfully_embedded,
                "tag": s.tag,
            }
            for s in lat.subgroups
        ],
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


class CacheEntryError(ValueError):
    """A cache file exists but cannot be used for this group."""


def deserialize_lattice(text: str, g: FiniteGroup) -> Lattice:
    """Rebuild a Lattice for g from cached text; raises CacheEntryError on
    any mismatch (bad JSON, wrong version, wrong group)."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise CacheEntryError(f"not valid JSON: {e}")
    if not isinstance(payload, dict):
        raise CacheEntryError("top level is not an object")
    if payload.get("format_version") != CACHE_FORMAT_VERSION:
        raise CacheEntryError(
            f"format version {payload.get('format_version')!r} != {CACHE_FORMAT_VERSION}"
        )
    if payload.get("content_key") != g.content_key():
        raise CacheEntryError("content key does not match the group")
    if payload.get("order") != g.order:
        raise CacheEntryError("order does not match the group")
    subs = []
    try:
        for row in payload["subgroups"]:
            subs.append(
                Subgroup(
                    elements=ElementSet(int(row["bits"], 16), g.order),
                    order=int(row["order"]),
                    is_proper=bool(row["proper"]),
                    is_abelian=bool(row["abelian"]),
                    is_normal=bool(row["normal"]),
                    is_maximal=bool(row["maximal"]),
                    is_powerful=row["powerful"],
                    is_powerfully_embedded=row["powerfully_embedded"],
                    tag=str(row["tag"]),
                )
            )
    except (KeyError, TypeError, ValueError) as e:
        raise CacheEntryError(f"malformed subgroup record: {e}")
    return Lattice(group=g, subgroups=tuple(subs))


class LatticeCache:
    """get/put of lattices keyed by the group's content key."""

    def __init__(self, directory: Optional[str] = None):
        self.directory = directory or default_cache_dir()

    def path_for(self, g: FiniteGroup) -> str:
        return os.path.join(self.directory, f"{g.content_key()}.lattice.json")

    def get(self, g: FiniteGroup) -> Optional[Lattice]:
        """Cached lattice for g, or None on miss/corruption/I-O trouble."""
        path = self.path_for(g)
        try:
            with open(path) as fh:
                text = fh.read()
        except FileNotFoundError:
            return None
        except OSError as e:
            warnings.warn(f"lattice cache read failed ({e}); recomputing")
            return None
        try:
            return deserialize_lattice(text, g)
        except CacheEntryError:
            return None

    def put(self, g: FiniteGroup, lat: Lattice) -> Optional[str]:
        """Store the lattice; returns the path, or None if writing failed."""
        path = self.path_for(g)
        try:
            os.makedirs(self.directory, exist_ok=True)
            atomic_write_text(path, serialize_lattice(lat))
        except OSError as e:
            warnings.warn(f"lattice cache write failed ({e}); continuing without cache")
            return None
        return path

    def get_or_compute(self, g: FiniteGroup, cap: Optional[int] = None) -> Lattice:
        """Cache hit, or enumerate + store (overwriting any unusable entry)."""
        hit = self.get(g)
        if hit is not None:
            return hit
        lat = enumerate_subgroups(g, cap=cap)
        self.put(g, lat)
        return lat


_MEMO: Dict[str, Lattice] = {}


def memo_lattice(
    g: FiniteGroup,
    cache: Optional[LatticeCache] = None,
    cap: Optional[int] = None,
) -> Lattice:
    """Process-wide memo over enumerate_subgroups, optionally backed by a
    disk cache.  Suites that revisit the same group (by table content) pay
    for enumeration once."""
    key = g.content_key()
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    if cache is not None:
        lat = cache.get_or_compute(g, cap=cap)
    else:
        lat = enumerate_subgroups(g, cap=cap)
    _MEMO[key] = lat
    return lat


def clear_memo() -> None:
    _MEMO.clear()
