"""Named collections of groups to sweep and verify against.

The built-in catalog holds every group the descriptor grammar can build
directly, restricted to p-groups (the covering predicates are only defined
there): cyclic groups of prime-power order, the four 2-power families,
elementary abelian groups, and a spread of direct products, all of order
at most 128.  Elementary 2-groups stop at order 32 because their subgroup
counts explode combinatorially (order 64 already has 2825 subgroups).

External catalogs are plain text files, one entry per line::

    # comment
    my-d16  dihedral:16
    cas-export-7  perm:groups/o64_007.perm
    weird  file:tables/weird.cayley

Relative perm:/file: paths are resolved against the catalog file's own
directory, so a catalog directory can be moved as a unit.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import List, Optional

from .groups import FiniteGroup, build_group

__all__ = ["CatalogEntry", "builtin_catalog", "load_catalog_file"]


@dataclass(frozen=True)
class CatalogEntry:
    """A catalog row: a stable id plus the source text that builds the group.

    source is a descriptor ("dihedral:16", "file:PATH") or "perm:PATH" for a
    permutation-generator file.
    """

    id: str
    source: str

    def build(self, cap: Optional[int] = None) -> FiniteGroup:
        if self.source.startswith("perm:"):
            from .fileio import load_permutation_generators

            return load_permutation_generators(self.source[len("perm:"):], cap=cap)
        return build_group(self.source, cap=cap)


def _prime_powers(limit: int) -> List[int]:
    primes = [p for p in range(2, limit + 1) if all(p % d for d in range(2, int(p**0.5) + 1))]
    out = []
    for p in primes:
        q = p
        while q <= limit:
            out.append(q)
            q *= p
    return sorted(out)


def builtin_catalog(max_order: int = 128) -> List[CatalogEntry]:
    """The shipped catalog, in deterministic order, filtered to max_order."""
    specs: List[str] = ["cyclic:1"]
    specs += [f"cyclic:{q}" for q in _prime_powers(128)]
    specs += [f"elementary:2^{k}" for k in range(2, 6)]
    specs += ["elementary:3^2", "elementary:3^3", "elementary:3^4",
              "elementary:5^2", "elementary:7^2"]
    specs += [f"dihedral:{m}" for m in (4, 8, 16, 32, 64, 128)]
    specs += [f"quaternion:{m}" for m in (8, 16, 32, 64, 128)]
    specs += [f"semidihedral:{m}" for m in (16, 32, 64, 128)]
    # modular:8 is skipped: at order 8 the presentation collapses onto the
    # dihedral group already listed.
    specs += [f"modular:{m}" for m in (16, 32, 64, 128)]
    specs += [
        "product:(cyclic:4,cyclic:2)",
        "product:(cyclic:4,cyclic:4)",
        "product:(cyclic:8,cyclic:2)",
        "product:(dihedral:8,cyclic:2)",
        "product:(dihedral:8,cyclic:4)",
        "product:(dihedral:16,cyclic:2)",
        "product:(dihedral:32,cyclic:2)",
        "product:(quaternion:8,cyclic:2)",
        "product:(dihedral:8,dihedral:8)",
    ]

    def order_of(spec: str) -> int:
        if spec.startswith("cyclic:"):
            return int(spec.split(":")[1])
        if spec.startswith("elementary:"):
            p, k = spec.split(":")[1].split("^")
            return int(p) ** int(k)
        if spec.startswith("product:"):
            inner = spec[len("product:(") : -1]
            depth, cut = 0, None
            for i, ch in enumerate(inner):
                if ch == "(":
                    depth += 1
                elif ch == ")":
                    depth -= 1
                elif ch == "," and depth == 0:
                    cut = i
                    break
            return order_of(inner[:cut]) * order_of(inner[cut + 1 :])
        return int(spec.split(":")[1])

    return [CatalogEntry(id=s, source=s) for s in specs if order_of(s) <= max_order]


def load_catalog_file(path: str) -> List[CatalogEntry]:
    """Parse an external catalog file into entries, resolving relative paths."""
    base = os.path.dirname(os.path.abspath(path))
    entries = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            text = raw.strip()
            if not text or text.startswith("#"):
                continue
            parts = text.split(None, 1)
            if len(parts) != 2:
                raise ValueError(
                    f"{path}:{lineno}: expected '<id> <source>', got {text!r}"
                )
            entry_id, source = parts[0], parts[1].strip()
            for prefix in ("perm:", "file:"):
                if source.startswith(prefix):
                    rel = source[len(prefix):]
                    if not os.path.isabs(rel):
                        source = prefix + os.path.join(base, rel)
            entries.append(CatalogEntry(id=entry_id, source=source))
    return entries
