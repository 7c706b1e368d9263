"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 a proved bound was
violated (or a witness was not reproduced), 3 time limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from collections.abc import Sequence

from ._timeout import SolverTimeout, time_limit
from .coloring import BoundNotApplicable, bound_report, chi_g_exact
from .critical import extract_critical
from .enumerate import enumerate_small_graphs
from .formats import ParseError, encode_graph6, parse_dimacs, parse_graph6, read_graph6
from .graph import Graph, GraphError
from .named import complete, complete_bipartite, construct_named, cycle, path
from .ng import WitnessMismatch, check_refined_conditions, ng_sum, verify_corpus, witness_suite
from .patterns import PatternSpec

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, EXIT_TIMEOUT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_pattern(text: str, host: Graph | None = None, *, induced: bool = False) -> PatternSpec:
    """Resolve a pattern descriptor.

    ``K<n>``, ``C<n>``, ``P<n>``, ``K<a>,<b>``, ``cycles`` (all 2-regular
    graphs), ``self`` (the input graph itself) and ``g6:<graph6>``.
    """
    t = text.strip()
    try:
        if t == "cycles":
            return PatternSpec.all_two_regular()
        if t == "self":
            if host is None:
                raise UsageError("pattern 'self' needs an input graph")
            return PatternSpec.single(host, induced=induced, label="self")
        if t.startswith("g6:"):
            return PatternSpec.single(parse_graph6(t[3:]), induced=induced, label=t)
        for rx, build in ((r"K(\d+),(\d+)", lambda a, b: complete_bipartite(int(a), int(b))),
                          (r"K(\d+)", lambda a: complete(int(a))),
                          (r"C(\d+)", lambda a: cycle(int(a))),
                          (r"P(\d+)", lambda a: path(int(a)))):
            m = re.fullmatch(rx, t)
            if m:
                return PatternSpec.single(build(*m.groups()), induced=induced, label=t)
    except (GraphError, ParseError, ValueError) as exc:
        raise UsageError(f"bad pattern {text!r}: {exc}") from None
    raise UsageError(f"unrecognised pattern descriptor {text!r}")


def _read_input(path: str) -> list[Graph]:
    data = sys.stdin.read() if path == "-" else open(path, encoding="ascii").read()
    if re.search(r"^\s*p\s+(edge|col)", data, re.M):
        return [parse_dimacs(data)]
    return [g for _, g in read_graph6(data.splitlines(), strict=True)]


def _graphs(args) -> list[Graph]:
    if args.graph:
        return [construct_named(args.graph)]
    if args.input:
        return _read_input(args.input)
    raise UsageError("give --graph or --input")


def _emit(args, doc, text: str) -> None:
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(text)


# -- commands -------------------------------------------------------------------

def cmd_chi(args) -> int:
    docs, texts = [], []
    for g in _graphs(args):
        pat = parse_pattern(args.pattern, g, induced=args.induced)
        with time_limit(args.time_limit):
            res = chi_g_exact(g, pat)
            rep = bound_report(g, pat, exact=res.value)
        bounds = {name: {"value": v, "slack": None if v is None else v - res.value}
                  for name, v in (("degeneracy", rep.bound_degeneracy), ("maxdeg", rep.bound_maxdeg),
                                  ("chromatic", rep.bound_chromatic), ("size", rep.trivial_size_bound))}
        classes = [c for c in res.witness.classes()]
        docs.append({"graph6": encode_graph6(g), "pattern": pat.name, "n": g.n,
                     "chi": res.value, "classes": classes, "bounds": bounds})
        lines = [f"graph {encode_graph6(g)} (n={g.n}, m={g.m})  pattern {pat.name}",
                 f"chi_G = {res.value}"]
        lines += [f"  class {i}: {c}" for i, c in enumerate(classes)]
        for name, b in bounds.items():
            val = "n/a" if b["value"] is None else f"{b['value']}  slack {b['slack']}"
            lines.append(f"  bound {name:<11} {val}")
        texts.append("\n".join(lines))
    _emit(args, docs[0] if len(docs) == 1 else docs, "\n\n".join(texts))
    return EXIT_OK


def cmd_ng(args) -> int:
    docs, texts, bad = [], [], False
    for g in _graphs(args):
        pat = parse_pattern(args.pattern, g, induced=args.induced)
        with time_limit(args.time_limit):
            rec = ng_sum(g, pat)
        bad |= bool(rec.violations)
        docs.append(rec.as_dict())
        claims = ", ".join(f"{c.name}<={c.bound}{'' if c.holds else ' VIOLATED'}" for c in rec.claims)
        texts.append(
            f"graph {rec.graph6} (n={rec.n})  pattern {rec.pattern}  delta={rec.delta}\n"
            f"chi_G(H) = {rec.chi}, chi_G(complement) = {rec.chi_complement}, sum = {rec.sum}\n"
            f"bound {rec.bound} ({rec.branch}), slack {rec.slack}{', sharp' if rec.sharp else ''}\n"
            f"claims: {claims}")
    _emit(args, docs[0] if len(docs) == 1 else docs, "\n\n".join(texts))
    return EXIT_VIOLATION if bad else EXIT_OK


def cmd_critical(args) -> int:
    docs, texts, bad = [], [], False
    for g in _graphs(args):
        pat = parse_pattern(args.pattern, g, induced=args.induced)
        with time_limit(args.time_limit):
            cert = extract_critical(g, pat)
        bad |= not cert.mindeg_check
        docs.append({"graph6": encode_graph6(g), **cert.as_dict()})
        texts.append(
            f"graph {encode_graph6(g)}  pattern {pat.name}  k = {cert.k}\n"
            f"critical subgraph: {len(cert.vertices)} vertices {list(cert.vertices)}, "
            f"{len(cert.edges)} edges\n"
            f"min degree {cert.min_degree} >= {pat.delta} * {max(cert.k - 1, 0)}: {cert.mindeg_check}\n"
            f"evidence: {len(cert.vertex_evidence)} vertex deletions, {len(cert.edge_evidence)} edge deletions")
    _emit(args, docs[0] if len(docs) == 1 else docs, "\n\n".join(texts))
    return EXIT_VIOLATION if bad else EXIT_OK


def cmd_refined(args) -> int:
    g = _graphs(args)[0]
    with time_limit(args.time_limit):
        rep = check_refined_conditions(g, args.d, evaluate_sum=True)
    doc = {k: v for k, v in vars(rep).items()}
    _emit(args, doc, "\n".join(f"{k}: {v}" for k, v in doc.items()))
    return EXIT_VIOLATION if rep.holds is False else EXIT_OK


def cmd_verify(args) -> int:
    if args.enumerate is not None:
        source = [g for n in range(args.enumerate + 1) for g in enumerate_small_graphs(n)] \
            if args.cumulative else enumerate_small_graphs(args.enumerate)
    elif args.input:
        source = (sys.stdin.read() if args.input == "-" else open(args.input).read()).splitlines()
    else:
        raise UsageError("give --enumerate N or --input FILE")
    if not args.pattern:
        raise UsageError("give at least one --pattern")
    pats = [parse_pattern(p, induced=args.induced) for p in args.pattern]
    report = verify_corpus(source, pats, workers=args.workers, certificates=not args.no_certificates,
                           time_limit_per_graph=args.time_limit)
    if args.format == "json":
        print(report.to_json(include_records=not args.summary_only))
    else:
        print(report.table())
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_witness(args) -> int:
    try:
        with time_limit(args.time_limit):
            records = witness_suite()
    except WitnessMismatch as exc:
        print(f"witness not reproduced: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    doc = [r.as_dict() for r in records]
    text = "\n".join(f"PASS {r.pattern:<5} n={r.n:<3} {r.chi} + {r.chi_complement} = {r.sum} "
                     f"= ceil(n/{r.delta}) + 1" for r in records)
    _emit(args, doc, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gfree", description="G-free colorings and Nordhaus-Gaddum bounds")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, graph=True, pattern=True):
        if graph:
            src = sp.add_mutually_exclusive_group()
            src.add_argument("--graph", help="named graph (K5, C5, K4,4, K6+4K1, Petersen) or g6:<graph6>")
            src.add_argument("--input", help="graph6 or DIMACS file ('-' for stdin)")
        if pattern:
            sp.add_argument("--pattern", required=True, help="K<n>, C<n>, P<n>, K<a>,<b>, cycles, self, g6:<...>")
            sp.add_argument("--induced", action="store_true", help="forbid induced copies only")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--time-limit", type=float, default=None, metavar="SECONDS")

    common(sub.add_parser("chi", help="exact G-free chromatic number with witness and bounds"))
    common(sub.add_parser("ng", help="Nordhaus-Gaddum sum against the applicable bound"))
    common(sub.add_parser("critical", help="extract a G-free critical subgraph with certificate"))
    sp = sub.add_parser("refined", help="2d-subset conditions for G = K_{d+1}, n = k*d")
    common(sp, pattern=False)
    sp.add_argument("--d", type=int, required=True)
    sp = sub.add_parser("verify", help="audit a corpus against every bound")
    sp.add_argument("--enumerate", type=int, metavar="N", help="all graphs on N vertices")
    sp.add_argument("--cumulative", action="store_true", help="with --enumerate: all orders 0..N")
    sp.add_argument("--input", help="graph6 file ('-' for stdin)")
    sp.add_argument("--pattern", action="append", default=[])
    sp.add_argument("--induced", action="store_true")
    sp.add_argument("--workers", type=int, default=None, help="process count (capped by GFREE_MAX_WORKERS)")
    sp.add_argument("--no-certificates", action="store_true", help="skip critical-subgraph extraction")
    sp.add_argument("--summary-only", action="store_true", help="omit per-pair records from JSON")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--time-limit", type=float, default=None, metavar="SECONDS")
    common(sub.add_parser("witness", help="reproduce the sharpness examples"), graph=False, pattern=False)
    return p


COMMANDS = {"chi": cmd_chi, "ng": cmd_ng, "critical": cmd_critical, "refined": cmd_refined,
            "verify": cmd_verify, "witness": cmd_witness}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "time_limit", None) is not None and args.time_limit <= 0:
        print("gfree: error: --time-limit must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except SolverTimeout as exc:
        print(f"gfree: timeout: {exc}", file=sys.stderr)
        return EXIT_TIMEOUT
    except (UsageError, ParseError, GraphError, BoundNotApplicable, OSError) as exc:
        print(f"gfree: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
