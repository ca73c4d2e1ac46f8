"""Command-line front end.

Exit codes: 0 for a delivered result (including "no" verdicts), 1 when an
internal cross-check fails (a claimed identity does not hold), 2 for usage
or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import corpus, invariance
from .colouring import poly_bruteforce, poly_reduction
from .formats import FORMATS, MIXED, FormatError, parse, serialize
from .graph import MixedGraph, gen_dn, gen_star, gen_tk2, gen_tournament
from .roots import DEFAULT_PRECISION, roots_report, verify_negative_root
from .structure import predict_coefficients

USAGE_ERROR = 2
MISMATCH = 1


class CliError(Exception):
    def __init__(self, message, code=USAGE_ERROR):
        super().__init__(message)
        self.code = code


def _gen_from_spec(spec: str) -> MixedGraph:
    """Family specs: dn:<n>, star:<i>,<o>, tk2:<t>, tournament:<n>,<seed>."""
    try:
        name, _, args = spec.partition(":")
        nums = [int(a) for a in args.split(",")] if args else []
        if name == "dn":
            return gen_dn(*nums)
        if name == "star":
            return gen_star(*nums)
        if name == "tk2":
            return gen_tk2(*nums)
        if name == "tournament":
            return gen_tournament(*nums)
    except (ValueError, TypeError) as exc:
        raise CliError(f"bad family spec {spec!r}: {exc}") from None
    raise CliError(f"unknown family {name!r}")


def _load_graph(args) -> MixedGraph:
    sources = [s for s in (args.graph, args.inline, args.gen) if s]
    if len(sources) != 1:
        raise CliError("provide exactly one of: input path, --inline, --gen")
    if args.gen:
        return _gen_from_spec(args.gen)
    if args.inline:
        text = args.inline.replace(";", "\n")
    elif args.graph == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.graph, encoding="ascii") as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(f"cannot read {args.graph}: {exc}") from None
    try:
        return parse(text, args.format)
    except FormatError as exc:
        raise CliError(f"parse error: {exc}") from None


def _emit(args, data: dict, text_lines):
    if args.out == "json":
        print(json.dumps(data, indent=2))
    else:
        for line in text_lines:
            print(line)


def cmd_poly(args) -> int:
    g = _load_graph(args)
    data = {}
    lines = []
    if args.method in ("reduction", "both"):
        p, stats = poly_reduction(g, max_n=args.max_reduce)
        data["reduction"] = p.to_coeff_strings()
        data["stats"] = {"node_count": stats.node_count,
                         "cache_hits": stats.cache_hits,
                         "max_depth": stats.max_depth}
        lines.append(f"reduction:  {p.to_text()}")
    if args.method in ("bruteforce", "both"):
        try:
            q = poly_bruteforce(g, max_n=args.max_brute)
        except ValueError as exc:
            raise CliError(str(exc)) from None
        data["bruteforce"] = q.to_coeff_strings()
        lines.append(f"bruteforce: {q.to_text()}")
    _emit(args, data, lines)
    if args.method == "both" and data["reduction"] != data["bruteforce"]:
        print("MISMATCH between reduction and brute force", file=sys.stderr)
        return MISMATCH
    return 0


def cmd_analyze(args) -> int:
    g = _load_graph(args)
    report = predict_coefficients(g)
    p, _ = poly_reduction(g, max_n=args.max_reduce)
    actual_c1 = p.coefficient(g.n - 1) if g.n >= 1 else 0
    actual_c2 = p.coefficient(g.n - 2) if g.n >= 2 else 0
    data = report.to_dict()
    data["polynomial"] = p.to_coeff_strings()
    data["actual_c1"] = actual_c1
    data["actual_c2"] = actual_c2
    lines = [
        f"polynomial: {p.to_text()}",
        f"arcs={report.arc_count} edges={report.edge_count}",
        f"dipath pairs ({len(report.dipath_pairs)}): {list(report.dipath_pairs)}",
        f"obstructing pairs ({len(report.obstructing_pairs)}): "
        f"{list(report.obstructing_pairs)}",
        f"triangles: {report.triangle_count}",
        f"c1 predicted {report.predicted_c1}, actual {actual_c1}",
        f"c2 first-order {report.predicted_c2}, closure {report.closure_c2}, "
        f"actual {actual_c2}",
    ]
    _emit(args, data, lines)
    ok = actual_c1 == report.predicted_c1 and (
        g.n < 2 or actual_c2 == report.closure_c2)
    if not ok:
        print("MISMATCH between predicted and computed coefficients",
              file=sys.stderr)
        return MISMATCH
    return 0


def cmd_invar(args) -> int:
    g = _load_graph(args)
    if not g.is_oriented():
        raise CliError("invar takes an oriented graph (no edges)")
    verdict = invariance.ochrom_invar(g)
    _emit(args, verdict.to_dict(),
          [f"chromatically invariant: {'yes' if verdict.verdict else 'no'}",
           f"certificate ({verdict.certificate_kind}): {verdict.certificate}"])
    return 0


def cmd_orient(args) -> int:
    g = _load_graph(args)
    if not g.is_simple():
        raise CliError("orient takes a simple graph (no arcs)")
    verdict = invariance.chrom_invar(g)
    lines = [f"invariant orientation exists: {'yes' if verdict.verdict else 'no'}"]
    if verdict.verdict:
        lines.append(serialize(verdict.certificate, MIXED).rstrip("\n"))
    else:
        lines.append(f"certificate ({verdict.certificate_kind}): "
                     f"{verdict.certificate}")
    _emit(args, verdict.to_dict(), lines)
    return 0


def cmd_equiv(args) -> int:
    g = _load_graph(args)
    if not g.is_oriented():
        raise CliError("equiv takes an oriented graph (no edges)")
    witness = invariance.equivalence_witness(g)
    if witness is not None:
        data = {"equivalent": "yes",
                "witness": serialize(witness, MIXED)}
        lines = ["equivalent simple graph:",
                 serialize(witness, MIXED).rstrip("\n")]
    else:
        data = {"equivalent": "unknown", "witness": None}
        lines = ["no witness: the graph has obstructing arcs; "
                 "equivalence status unknown"]
        if args.search and g.n <= 5:
            found = invariance.search_equivalent_simple(g)
            if found is not None:
                data = {"equivalent": "yes (exhaustive search)",
                        "witness": serialize(found, MIXED)}
                lines = ["exhaustive search found an equivalent graph:",
                         serialize(found, MIXED).rstrip("\n")]
            else:
                data["equivalent"] = "no (exhaustive search)"
                lines.append("exhaustive search over simple graphs found none")
    _emit(args, data, lines)
    return 0


def cmd_roots(args) -> int:
    g = _load_graph(args)
    if args.threshold is not None:
        if not (args.gen or "").startswith("dn:"):
            raise CliError("--threshold applies to the dn:<n> family")
        n = g.n
        try:
            ok, interval = verify_negative_root(
                n, Fraction(args.threshold), precision=args.precision)
        except ValueError as exc:
            raise CliError(str(exc)) from None
        data = {"n": n, "threshold": args.threshold,
                "certified": ok,
                "interval": interval.to_dict() if ok else None}
        lines = [f"certified root below {args.threshold}: {'yes' if ok else 'no'}"]
        if ok:
            lines.append(f"interval: [{interval.lo}, {interval.hi}]")
        _emit(args, data, lines)
        return 0
    p, _ = poly_reduction(g, max_n=args.max_reduce)
    report = roots_report(p, precision=args.precision)
    lines = [f"polynomial: {report['polynomial']}"]
    for r in report["real_roots"]:
        tag = "exact" if r["exact"] else "isolated"
        lines.append(f"  {tag}: [{r['lo']}, {r['hi']}] ~ {r['approx']:.9f}")
    _emit(args, report, lines)
    return 0


def cmd_scan_window(args) -> int:
    hits = corpus.scan_root_window(Fraction(args.lo), Fraction(args.hi),
                                   max_n=args.max_n)
    data = {"window": [args.lo, args.hi],
            "hits": [{"graph": serialize(g, MIXED), "poly": p.to_text()}
                     for g, p in hits]}
    lines = [f"{len(hits)} oriented graphs (n <= {args.max_n}) with a real "
             f"root in ({args.lo}, {args.hi})"]
    lines += [f"  {p.to_text()}" for _, p in hits]
    _emit(args, data, lines)
    return 0


def cmd_verify(args) -> int:
    names = list(corpus.SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in corpus.SUITES:
            raise CliError(f"unknown suite {name!r}; "
                           f"choose from {', '.join(corpus.SUITES)}")
    worst = 0
    for name in names:
        passed, total, failures = corpus.SUITES[name]()
        print(f"{name}: {passed}/{total} pass")
        for f in failures[:10]:
            print(f"  FAIL {f}")
        if failures:
            worst = MISMATCH
    return worst


def _add_graph_args(sub):
    sub.add_argument("graph", nargs="?", help="input path, or - for stdin")
    sub.add_argument("--inline", help="inline mixed-text, ';' for newlines")
    sub.add_argument("--gen", help="family spec, e.g. dn:5, star:2,3, tk2:3")
    sub.add_argument("--format", choices=FORMATS, default=MIXED)
    sub.add_argument("--out", choices=("text", "json"), default="text")
    sub.add_argument("--max-brute", type=int, default=8)
    sub.add_argument("--max-reduce", type=int, default=14)
    sub.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    sub.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ochrom",
        description="Exact oriented chromatic polynomials of mixed graphs")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("poly", help="compute the polynomial")
    _add_graph_args(p)
    p.add_argument("--method", choices=("reduction", "bruteforce", "both"),
                   default="reduction")
    p.set_defaults(func=cmd_poly)

    p = subs.add_parser("analyze", help="structural sets and coefficient check")
    _add_graph_args(p)
    p.set_defaults(func=cmd_analyze)

    p = subs.add_parser("invar", help="is an oriented graph chromatically invariant")
    _add_graph_args(p)
    p.set_defaults(func=cmd_invar)

    p = subs.add_parser("orient", help="find a chromatically invariant orientation")
    _add_graph_args(p)
    p.set_defaults(func=cmd_orient)

    p = subs.add_parser("equiv", help="equivalent simple graph, when certifiable")
    _add_graph_args(p)
    p.add_argument("--search", action="store_true",
                   help="exhaustive small-n search when no witness exists")
    p.set_defaults(func=cmd_equiv)

    p = subs.add_parser("roots", help="isolate real roots")
    _add_graph_args(p)
    p.add_argument("--threshold",
                   help="certify a root below this rational (dn family)")
    p.set_defaults(func=cmd_roots)

    p = subs.add_parser("scan-window", help="search for roots in a window")
    p.add_argument("--lo", default="1")
    p.add_argument("--hi", default="32/27")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--out", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_scan_window)

    p = subs.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", help=f"one of: all, {', '.join(corpus.SUITES)}")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
