"""Batch computation of covering numbers over a catalog, with CSV/Markdown
reports.

One row per catalog entry, in input order regardless of worker scheduling.
The CSV has a fixed column order (id, order, p, class, coclass, sigma,
sigma_A, sigma_P, sigma_PE, time_ms, error); families that were not
requested stay blank, infeasible values print as INF, and per-entry errors
land in the error column without stopping the sweep.  The Markdown report
carries a per-family summary plus a violations section for the chain
inequality, the order-2^(n+1) bound sigma_P <= 2^(n-1)+1, and subgroup
monotonicity over structurally nested entries.

time_ms is wall-clock and therefore varies run to run; stable_timing=True
writes 0 there instead, making the reports byte-for-byte reproducible.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .cache import LatticeCache, memo_lattice
from .catalog import CatalogEntry
from .cover import FamilySelector, covering_number
from .groups import FiniteGroup, GroupError, coclass, is_p_group, nilpotence_class

__all__ = [
    "SweepRow",
    "CSV_COLUMNS",
    "ALL_FAMILIES",
    "sweep_entry",
    "run_sweep",
    "rows_to_csv",
    "markdown_report",
]

CSV_COLUMNS = (
    "id",
    "order",
    "p",
    "class",
    "coclass",
    "sigma",
    "sigma_A",
    "sigma_P",
    "sigma_PE",
    "time_ms",
    "error",
)

ALL_FAMILIES = (
    FamilySelector.ALL,
    FamilySelector.ABELIAN,
    FamilySelector.POWERFUL,
    FamilySelector.POWERFULLY_EMBEDDED,
)

# int = computed minimum, "INF" = no cover exists, None = not computed
SigmaCell = Union[int, str, None]


@dataclass(frozen=True)
class SweepRow:
    id: str
    source: str
    order: Optional[int]
    p: Optional[int]
    nilpotence_class: Optional[int]
    coclass: Optional[int]
    sigma: SigmaCell
    sigma_a: SigmaCell
    sigma_p: SigmaCell
    sigma_pe: SigmaCell
    time_ms: int
    error: str
    witness_summaries: Tuple[Tuple[str, str], ...]


def _cell(value) -> str:
    return "" if value is None else str(value)


def sweep_entry(
    entry: CatalogEntry,
    families: Sequence[FamilySelector] = ALL_FAMILIES,
    cache: Optional[LatticeCache] = None,
    stable_timing: bool = False,
) -> SweepRow:
    """Compute one row; any error is captured in the row, not raised."""
    t0 = time.perf_counter()
    sigmas: Dict[FamilySelector, SigmaCell] = {f: None for f in ALL_FAMILIES}
    witnesses: List[Tuple[str, str]] = []
    order = p = cls = cocls = None
    error = ""
    try:
        g = entry.build()
        order = g.order
        p = is_p_group(g)
        try:
            cls = nilpotence_class(g)
        except GroupError:
            cls = None
        try:
            cocls = coclass(g)
        except GroupError:
            cocls = None
        lat = memo_lattice(g, cache=cache)
        for fam in families:
            try:
                res = covering_number(g, fam, lat=lat)
            except GroupError:
                # family undefined for this group (e.g. powerful off a
                # p-group): leave the cell blank, keep the other columns
                continue
            if res.optimal:
                sigmas[fam] = res.size
                orders = ",".join(str(len(w)) for w in res.witness)
                witnesses.append((fam.sigma_label, f"member orders {orders}"))
            else:
                sigmas[fam] = "INF"
    except Exception as e:  # keep sweeping; the row records what went wrong
        error = f"{type(e).__name__}: {e}"
    elapsed_ms = 0 if stable_timing else int(round((time.perf_counter() - t0) * 1000))
    return SweepRow(
        id=entry.id,
        source=entry.source,
        order=order,
        p=p,
        nilpotence_class=cls,
        coclass=cocls,
        sigma=sigmas[FamilySelector.ALL],
        sigma_a=sigmas[FamilySelector.ABELIAN],
        sigma_p=sigmas[FamilySelector.POWERFUL],
        sigma_pe=sigmas[FamilySelector.POWERFULLY_EMBEDDED],
        time_ms=elapsed_ms,
        error=error,
        witness_summaries=tuple(witnesses),
    )


def rows_to_csv(rows: Sequence[SweepRow]) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for r in rows:
        lines.append(
            ",".join(
                [
                    r.id,
                    _cell(r.order),
                    _cell(r.p),
                    _cell(r.nilpotence_class),
                    _cell(r.coclass),
                    _cell(r.sigma),
                    _cell(r.sigma_a),
                    _cell(r.sigma_p),
                    _cell(r.sigma_pe),
                    str(r.time_ms),
                    r.error.replace(",", ";"),
                ]
            )
        )
    return "\n".join(lines) + "\n"


def _finite(cell: SigmaCell) -> Optional[int]:
    return cell if isinstance(cell, int) else None


def _chain_violations(rows: Sequence[SweepRow]) -> List[str]:
    out = []
    for r in rows:
        s, sp, sa = _finite(r.sigma), _finite(r.sigma_p), _finite(r.sigma_a)
        if s is not None and sp is not None and s > sp:
            out.append(f"{r.id}: sigma {s} > sigma_P {sp}")
        if sp is not None and sa is not None and sp > sa:
            out.append(f"{r.id}: sigma_P {sp} > sigma_A {sa}")
        if s is not None and sa is not None and s > sa:
            out.append(f"{r.id}: sigma {s} > sigma_A {sa}")
    return out


def _bound_violations(rows: Sequence[SweepRow]) -> List[str]:
    """sigma_P <= 2^(n-1)+1 for noncyclic 2-groups of order 2^(n+1) >= 8."""
    out = []
    for r in rows:
        sp = _finite(r.sigma_p)
        if (
            sp is not None
            and r.p == 2
            and r.order is not None
            and r.order >= 8
            and _finite(r.sigma) is not None  # finite sigma => noncyclic
        ):
            n = r.order.bit_length() - 2
            bound = (1 << (n - 1)) + 1
            if sp > bound:
                out.append(f"{r.id}: sigma_P {sp} > bound {bound}")
    return out


def _structural_pairs(rows: Sequence[SweepRow]) -> List[Tuple[SweepRow, SweepRow]]:
    """(subgroup-row, group-row) pairs nested by construction: each 2-power
    family embeds its half-order member, a semidihedral group embeds the
    half-order dihedral and quaternion groups, elementary groups embed lower
    ranks, and direct-product factors embed in the product."""
    by_source = {r.source: r for r in rows}
    pairs = []

    def link(sub_source: str, row: SweepRow):
        sub = by_source.get(sub_source)
        if sub is not None:
            pairs.append((sub, row))

    for r in rows:
        if ":" not in r.source or r.order is None:
            continue
        kind, _, arg = r.source.partition(":")
        if kind in ("cyclic", "dihedral", "quaternion", "semidihedral", "modular"):
            half = r.order // 2
            if kind == "semidihedral":
                link(f"dihedral:{half}", r)
                link(f"quaternion:{half}", r)
            else:
                link(f"{kind}:{half}", r)
        elif kind == "elementary":
            p_str, k_str = arg.split("^")
            if int(k_str) > 1:
                link(f"elementary:{p_str}^{int(k_str) - 1}", r)
        elif kind == "product":
            inner = arg[1:-1]
            depth, cut = 0, None
            for i, ch in enumerate(inner):
                if ch == "(":
                    depth += 1
                elif ch == ")":
                    depth -= 1
                elif ch == "," and depth == 0:
                    cut = i
                    break
            if cut is not None:
                link(inner[:cut], r)
                link(inner[cut + 1 :], r)
    return pairs


def _monotonicity_violations(rows: Sequence[SweepRow]) -> List[str]:
    out = []
    for sub, big in _structural_pairs(rows):
        a, b = _finite(sub.sigma_p), _finite(big.sigma_p)
        if a is not None and b is not None and a > b:
            out.append(f"{sub.id} <= {big.id}: sigma_P {a} > {b}")
    return out


def markdown_report(rows: Sequence[SweepRow]) -> str:
    families: Dict[str, List[SweepRow]] = {}
    for r in rows:
        families.setdefault(r.source.partition(":")[0], []).append(r)

    lines = ["# covering-number sweep", "", "## summary", ""]
    lines.append("| family | entries | orders | errors |")
    lines.append("|---|---|---|---|")
    for fam in sorted(families):
        rs = families[fam]
        orders = sorted({r.order for r in rs if r.order is not None})
        span = f"{orders[0]}..{orders[-1]}" if orders else "-"
        errs = sum(1 for r in rs if r.error)
        lines.append(f"| {fam} | {len(rs)} | {span} | {errs} |")

    lines += ["", "## violations", ""]
    sections = (
        ("chain sigma <= sigma_P <= sigma_A", _chain_violations(rows)),
        ("bound sigma_P <= 2^(n-1)+1 on noncyclic 2-groups", _bound_violations(rows)),
        ("subgroup monotonicity on nested entries", _monotonicity_violations(rows)),
    )
    for title, found in sections:
        if found:
            lines.append(f"- {title}: {len(found)} violation(s)")
            lines += [f"  - {v}" for v in found]
        else:
            lines.append(f"- {title}: none")
    return "\n".join(lines) + "\n"


def run_sweep(
    entries: Sequence[CatalogEntry],
    families: Sequence[FamilySelector] = ALL_FAMILIES,
    out_csv: Optional[str] = None,
    cache: Optional[LatticeCache] = None,
    workers: int = 4,
    stable_timing: bool = False,
) -> List[SweepRow]:
    """Sweep all entries; write CSV and Markdown reports when out_csv is set.

    The Markdown lands next to the CSV with the extension replaced by .md.
    Rows come back in input order regardless of worker completion order.
    """
    if workers <= 1 or len(entries) <= 1:
        rows = [
            sweep_entry(e, families, cache=cache, stable_timing=stable_timing)
            for e in entries
        ]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(
                    sweep_entry, e, families, cache=cache, stable_timing=stable_timing
                )
                for e in entries
            ]
            rows = [f.result() for f in futures]

    if out_csv is not None:
        from .fileio import atomic_write_text

        atomic_write_text(out_csv, rows_to_csv(rows))
        stem = out_csv[: -len(".csv")] if out_csv.endswith(".csv") else out_csv
        atomic_write_text(stem + ".md", markdown_report(rows))
    return rows
