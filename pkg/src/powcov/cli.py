"""Command-line front end.

Subcommands: sigma (covering number of one group), lattice (subgroup
statistics), construct (export a Cayley file), verify (run a claim suite),
sweep (batch report over a catalog).

Exit codes: 0 = success / all checks passed; 1 = a domain finding (no cover
exists for a single query, a theorem check failed, or a conjecture
counterexample was found); 2 = usage or data error.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from typing import List, Optional

from .cache import LatticeCache, memo_lattice
from .catalog import builtin_catalog, load_catalog_file
from .cover import FamilySelector, covering_number
from .descriptors import DescriptorError
from .fileio import FileFormatError, save_cayley_file
from .groups import FiniteGroup, GroupError, build_group
from .sweep import ALL_FAMILIES, run_sweep
from .verify import SUITE_NAMES, format_report, run_suite

__all__ = ["main"]


def _print_members(g: FiniteGroup, members) -> str:
    return "{" + ", ".join(g.name_of(i) for i in members) + "}"


def cmd_sigma(args) -> int:
    g = build_group(args.descriptor)
    family = FamilySelector.from_name(args.family)
    lat = memo_lattice(g, cache=None if args.no_cache else LatticeCache())
    res = covering_number(g, family, lat=lat)
    if res.infeasible:
        if int(g.element_orders.max()) == g.order:
            print(f"{family.sigma_label} = INF (cyclic group has no proper-subgroup cover)")
        else:
            print(f"{family.sigma_label} = INF (no cover by this family exists)")
        return 1
    print(f"{family.sigma_label} = {res.size}")
    print("witness:")
    for w in res.witness:
        print(f"  order {len(w):>3}: {_print_members(g, w)}")
    return 0


def cmd_lattice(args) -> int:
    g = build_group(args.descriptor)
    lat = memo_lattice(g, cache=None if args.no_cache else LatticeCache())
    c = lat.counts()
    print(f"{args.descriptor}: order {g.order}, {c['subgroups']} subgroups")
    for key in ("proper", "abelian", "normal", "maximal", "powerful", "powerfully_embedded"):
        label = key.replace("_", " ")
        print(f"  {label}: {c[key]}")
    tags = Counter(s.tag for s in lat.subgroups)
    parts = [f"{tag} x{n}" for tag, n in sorted(tags.items())]
    print("  tags: " + ", ".join(parts))
    return 0


def cmd_construct(args) -> int:
    g = build_group(args.descriptor)
    save_cayley_file(g, args.out)
    print(f"wrote {args.descriptor} (order {g.order}) to {args.out}")
    return 0


def cmd_verify(args) -> int:
    catalog = load_catalog_file(args.catalog) if args.catalog else None
    report = run_suite(
        args.suite,
        max_n=args.max_n,
        max_order=args.max_order,
        catalog=catalog,
        cache=None if args.no_cache else LatticeCache(),
    )
    print(format_report(report))
    return 0 if report.passed else 1


def cmd_sweep(args) -> int:
    if args.catalog:
        entries = load_catalog_file(args.catalog)
    else:
        entries = builtin_catalog(max_order=args.max_order or 128)
    if args.max_order is not None and args.catalog:
        kept = []
        for e in entries:
            try:
                if e.build().order <= args.max_order:
                    kept.append(e)
            except Exception:
                kept.append(e)  # let the sweep row record the build error
        entries = kept
    if args.families:
        families = tuple(
            FamilySelector.from_name(f.strip()) for f in args.families.split(",")
        )
    else:
        families = ALL_FAMILIES
    rows = run_sweep(
        entries,
        families=families,
        out_csv=args.out,
        cache=None if args.no_cache else LatticeCache(),
        workers=args.workers,
        stable_timing=args.stable_timing,
    )
    failed = [r for r in rows if r.error]
    print(f"swept {len(rows)} entries ({len(failed)} errors) -> {args.out}")
    for r in failed:
        print(f"  error {r.id}: {r.error}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powcov",
        description="Covering numbers of finite p-groups by families of proper subgroups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sigma", help="covering number of one group")
    p.add_argument("descriptor", help="group descriptor, e.g. dihedral:16")
    p.add_argument(
        "family",
        help="subgroup family: all | abelian | powerful | powerfully-embedded (pe)",
    )
    p.add_argument("--no-cache", action="store_true", help="skip the lattice disk cache")
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("lattice", help="subgroup lattice statistics")
    p.add_argument("descriptor")
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("construct", help="write a group as a Cayley file")
    p.add_argument("descriptor")
    p.add_argument("--out", required=True, help="output path")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="run a claim suite")
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument("--max-n", type=int, default=None, help="largest tower index n")
    p.add_argument("--max-order", type=int, default=None, help="largest group order")
    p.add_argument("--catalog", default=None, help="catalog file instead of built-in")
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="batch covering numbers over a catalog")
    p.add_argument("--catalog", default=None, help="catalog file (default: built-in)")
    p.add_argument(
        "--families",
        default=None,
        help="comma-separated families (default: all four)",
    )
    p.add_argument("--out", required=True, help="CSV output path (.md lands beside it)")
    p.add_argument("--max-order", type=int, default=None)
    p.add_argument("--workers", type=int, default=4)
    p.add_argument(
        "--stable-timing",
        action="store_true",
        help="write 0 for time_ms so reports are byte-reproducible",
    )
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DescriptorError, GroupError, FileFormatError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
