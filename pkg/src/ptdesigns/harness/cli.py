"""Command-line interface.

Exit status: 0 on success, 1 when a verification fails, 2 on usage or
file-format errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from ..errors import FormatError, PTDError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_group(source: str):
    from ..constructions import REGISTRY, load_sporadic
    from ..permgroup import load_grp
    from .search import bundled_small_groups

    if source in REGISTRY:
        return load_sporadic(source).group
    small = bundled_small_groups()
    if source in small:
        return small[source]()
    if os.path.exists(source):
        return load_grp(source)
    raise PTDError(f"{source!r} is neither a group file nor a known group name "
                   f"(known: {', '.join(sorted(REGISTRY) + sorted(small))})")


# -- subcommands ----------------------------------------------------------------


def cmd_construct(args) -> int:
    from ..constructions import catalog, catalog_row
    from ..designs import format_dsg
    from ..permgroup import format_grp

    if args.list or not args.tag:
        for row in catalog():
            print(row.tag)
        return EXIT_OK
    row = catalog_row(args.tag)
    _write(format_dsg(row.design, expect=True), args.out)
    if args.group_out:
        if row.group is None:
            raise PTDError(f"{args.tag}: no group available (construction-only)")
        Path(args.group_out).write_text(format_grp(row.group))
    return EXIT_OK


def cmd_group(args) -> int:
    from ..permgroup import action_report, format_grp, transitivity_degree

    G = _load_group(args.source)
    rep = action_report(G)
    lines = [
        f"group: {G.label or args.source}",
        f"degree: {G.degree}",
        f"order: {G.order()}",
        f"transitive: {'yes' if rep.transitive else 'no'}",
    ]
    if rep.transitive:
        lines += [
            f"rank: {rep.rank}",
            f"transitivity_degree: {transitivity_degree(G)}",
            f"primitive: {'yes' if rep.primitive else 'no'}",
            f"suborbits: {' '.join(map(str, rep.suborbit_sizes))}",
        ]
    print("\n".join(lines))
    if args.out:
        Path(args.out).write_text(format_grp(G))
    return EXIT_OK


def cmd_params(args) -> int:
    from ..designs import identities, is_quasisymmetric, is_symmetric, load_dsg, parameters, structural_checks

    D = load_dsg(args.design)
    p = parameters(D)
    s = structural_checks(D)
    lines = [
        f"design: {p.describe()}",
        f"v: {p.v}",
        f"b: {p.b}",
        f"k: {p.k if p.k is not None else '-'}",
        f"r: {p.r if p.r is not None else '-'}",
        f"lambda: {p.lam if p.lam is not None else '-'}",
        f"t_max: {p.t_max}",
        "intersections: " + " ".join(f"{a}:{n}" for a, n in p.intersection_profile.items()),
        f"mu: {p.mu if p.mu is not None else '-'}",
        f"symmetric: {'yes' if is_symmetric(D, p) else 'no'}",
        f"quasisymmetric: {'yes' if is_quasisymmetric(D, p)[0] else 'no'}",
        f"connected: {'yes' if s.connected else 'no'}",
        f"repeated_blocks: {'yes' if s.repeated_blocks else 'no'}",
        f"trivial: {'yes' if s.trivial else 'no'}",
    ]
    for name, ok in identities(p).items():
        lines.append(f"identity.{name}: {'ok' if ok else 'violated'}")
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    from ..designs import is_trivial, load_dsg, parameters
    from ..pairwise import classify_block_action, format_certificate, verify

    D = load_dsg(args.design)
    G = _load_group(args.group)
    report = verify(D, G, args.mode)
    p = parameters(D)
    blocks = classify_block_action(D, G) if p.is_2_design and not is_trivial(p) else None
    text = format_certificate(D.label or Path(args.design).stem, p, report, blocks,
                              group_label=G.label, group_order=G.order(), timing=not args.no_timing)
    _write(text, args.out)
    return EXIT_OK if report.verdict else EXIT_FAIL


def cmd_certify_all(args) -> int:
    from .certify import certify_all

    bundle = certify_all(args.max_points, args.mode)
    if args.out:
        Path(args.out).write_text(bundle.body(timing=not args.no_timing))
    else:
        for row in bundle.rows:
            if row.status == "skipped":
                mark = "skip"
            else:
                mark = "pass" if row.passed else "FAIL"
            line = f"{mark:4s} {row.tag}"
            if row.params is not None:
                line += f"  {row.params.describe()}"
            if row.status not in ("verified", "skipped"):
                line += f"  [{row.status}]"
            if row.problems:
                line += "  " + "; ".join(row.problems)
            print(line)
    print(bundle.summary())
    return EXIT_OK if bundle.passed else EXIT_FAIL


def cmd_gammal1(args) -> int:
    from ..constructions import GammaL1Subgroup, gammal1_is_transitive, gammal1_orbits

    try:
        s = GammaL1Subgroup(args.p, args.d, args.i, args.j, args.t)
    except ValueError as exc:
        raise PTDError(f"not in standard form: {exc}") from exc
    verdict = gammal1_is_transitive(s)
    print(f"transitive: {'yes' if verdict else 'no'}")
    if args.orbits:
        sizes = sorted(len(o) for o in gammal1_orbits(s))
        print(f"orbit_sizes: {' '.join(map(str, sizes))}")
        if (len(sizes) == 1) != verdict:
            print("criterion disagrees with the orbit computation")
            return EXIT_FAIL
    return EXIT_OK


def cmd_zsigmondy(args) -> int:
    from ..constructions import zsigmondy_ppd

    if args.d < 2:
        raise PTDError("d must be at least 2")
    primes = sorted(zsigmondy_ppd(args.p, args.d))
    print(f"ppd: {' '.join(map(str, primes)) if primes else 'none'}")
    return EXIT_OK


def _k_range(text: str | None):
    if text is None:
        return None
    lo, _, hi = text.partition("-")
    return range(int(lo), int(hi or lo) + 1)


def cmd_search(args) -> int:
    from .search import search_small, table_match

    G = _load_group(args.group)
    hits = search_small(G, _k_range(args.k))
    for h in hits:
        p = h.params
        rows = table_match(p.v, p.k, p.lam, p.mu) or ["no table row"]
        print(f"{h.describe()}  matches: {', '.join(rows)}")
    print(f"hits: {len(hits)}")
    return EXIT_OK


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ptdesigns", description="Pairwise transitive 2-designs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="write a catalog design as a .dsg file")
    p.add_argument("tag", nargs="?", help="catalog row tag, e.g. 'Table2:line4'")
    p.add_argument("--list", action="store_true", help="list catalog tags")
    p.add_argument("--out", help="design output file (default stdout)")
    p.add_argument("--group-out", help="also write the acting group as a .grp file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("group", help="order and action data of a group")
    p.add_argument("source", help="a .grp file or a bundled group name")
    p.add_argument("--out", help="write the group as a .grp file")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("params", help="parameters of a design file")
    p.add_argument("--design", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_params)

    for name, fn, hlp in [("verify", cmd_verify, "certify pairwise transitivity of a group on a design"),
                          ("certify-all", cmd_certify_all, "certify every catalog row")]:
        p = sub.add_parser(name, help=hlp)
        if name == "verify":
            p.add_argument("--design", required=True)
            p.add_argument("--group", required=True, help="a .grp file or a bundled group name")
        else:
            p.add_argument("--max-points", type=int, default=200)
        p.add_argument("--mode", choices=("fast", "brute", "both"), default="both")
        p.add_argument("--out")
        p.add_argument("--no-timing", action="store_true", help="omit timings from certificates")
        p.set_defaults(func=fn)

    p = sub.add_parser("gammal1", help="transitivity criterion for <tau^i, tau^j sigma^t> in GammaL(1,p^d)")
    for flag in ("p", "d", "i", "j", "t"):
        p.add_argument(f"--{flag}", type=int, required=True)
    p.add_argument("--orbits", action="store_true", help="also compute the orbits explicitly")
    p.set_defaults(func=cmd_gammal1)

    p = sub.add_parser("zsigmondy", help="primitive prime divisors of p^d - 1")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_zsigmondy)

    p = sub.add_parser("search", help="pairwise transitive orbit designs of a small group")
    p.add_argument("--group", required=True, help="a .grp file or a bundled group name")
    p.add_argument("--k", help="block size or range, e.g. 4 or 3-6")
    p.set_defaults(func=cmd_search)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PTDError, KeyError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
