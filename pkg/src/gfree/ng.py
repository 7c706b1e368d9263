"""Nordhaus–Gaddum sums ``chi_G(H) + chi_G(complement H)`` and their audit.

:func:`ng_sum` evaluates one (graph, pattern) pair and decides which upper
bounds are applicable:

``general``      ``ceil(n/delta) + 2`` for every graph
``critical``     ``ceil(n/delta) + 1`` when ``H`` or its complement is critical
``cycles``       ``ceil(n/2) + 1`` when the pattern is 2-regular or the 2-regular family
``complete``     ``ceil(n/delta) + 1`` for ``G = K_{delta+1}`` unless ``n = k*delta``
                 with ``k, delta >= 3``
``complete-kd``  ``k + 2`` for ``G = K_{d+1}``, ``n = k*d``, ``k, d >= 3``, lowered to
                 ``k + 1`` when a 2d-subset condition holds

The record keeps every applicable bound; ``bound`` is the tightest.
"""

from __future__ import annotations

import itertools
import json
import logging
import os
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from ._timeout import time_limit
from .coloring import (
    BoundNotApplicable,
    bound_chromatic,
    bound_degeneracy,
    bound_maxdeg,
    chi_g_exact,
    size_bound,
)
from .critical import extract_critical, is_critical
from .formats import encode_graph6, parse_graph6, read_graph6
from .graph import Graph
from .named import clique_plus_independent, complete, complete_bipartite, cycle
from .patterns import PatternSpec, _max_clique, girth

log = logging.getLogger(__name__)

WORKERS_ENV = "GFREE_MAX_WORKERS"


def _cdiv(a: int, b: int) -> int:
    return -(-a // b)


@dataclass
class Claim:
    name: str
    bound: int
    holds: bool


@dataclass
class NGRecord:
    graph6: str
    pattern: str
    n: int
    delta: int
    chi: int
    chi_complement: int
    sum: int
    branch: str
    bound: int
    slack: int
    sharp: bool
    claims: list[Claim] = field(default_factory=list)
    h_critical: bool = False
    complement_critical: bool = False

    @property
    def violations(self) -> list[Claim]:
        return [c for c in self.claims if not c.holds]

    def as_dict(self) -> dict:
        return asdict(self)


def _is_two_regular(pat: PatternSpec) -> bool:
    return pat.graph is None or (pat.graph.min_degree == 2 and pat.graph.max_degree == 2)


def _complete_delta(pat: PatternSpec) -> int | None:
    t = pat.clique_size
    return None if t is None else t - 1


def ng_sum(h: Graph, pat: PatternSpec, *, criticality: tuple[bool, bool] | None = None,
           refined: RefinedConditionReport | None = None) -> NGRecord:
    """Evaluate ``chi_G(H) + chi_G(complement H)`` against every applicable bound.

    ``criticality`` may pass precomputed ``(H critical, complement critical)``.
    """
    if pat.delta < 1:
        raise BoundNotApplicable("Nordhaus-Gaddum bounds need a pattern of minimum degree >= 1")
    hc = h.complement()
    chi = chi_g_exact(h, pat).value
    chic = chi_g_exact(hc, pat).value
    total = chi + chic
    n, delta = h.n, pat.delta
    base = _cdiv(n, delta)

    if criticality is None:
        criticality = (is_critical(h, pat, chi), is_critical(hc, pat, chic))
    crit_h, crit_c = criticality

    claims = [Claim("general", base + 2, total <= base + 2)]
    if crit_h or crit_c:
        claims.append(Claim("critical", base + 1, total <= base + 1))
    if _is_two_regular(pat):
        b = _cdiv(n, 2) + 1
        claims.append(Claim("cycles", b, total <= b))
    d = _complete_delta(pat)
    if d is not None and d >= 1:
        if n % d == 0 and n // d >= 3 and d >= 3:
            k = n // d
            claims.append(Claim("complete-kd", k + 2, total <= k + 2))
            if refined is None:
                refined = check_refined_conditions(h, d, criticality=criticality)
            if refined.cond_ii or refined.cond_iii:
                claims.append(Claim("complete-kd-refined", k + 1, total <= k + 1))
        else:
            claims.append(Claim("complete", base + 1, total <= base + 1))

    tight = min(claims, key=lambda c: (c.bound, c.name))
    return NGRecord(
        graph6=encode_graph6(h), pattern=pat.name, n=n, delta=delta, chi=chi,
        chi_complement=chic, sum=total, branch=tight.name, bound=tight.bound,
        slack=tight.bound - total, sharp=tight.bound == total, claims=claims,
        h_critical=crit_h, complement_critical=crit_c,
    )


# -- refined conditions for G = K_{d+1}, n = k d ------------------------------

@dataclass
class RefinedConditionReport:
    applicable: bool
    d: int
    k: int | None = None
    cond_i: bool = False
    cond_ii: bool = False
    cond_iii: bool = False
    subset_ii: tuple[int, ...] | None = None
    subset_iii: tuple[int, ...] | None = None
    sum: int | None = None
    refined_bound: int | None = None
    holds: bool | None = None
    reason: str = ""

    @property
    def any(self) -> bool:
        return self.cond_i or self.cond_ii or self.cond_iii


def check_refined_conditions(h: Graph, d: int, *,
                             criticality: tuple[bool, bool] | None = None,
                             evaluate_sum: bool = False) -> RefinedConditionReport:
    """Test the three 2d-subset conditions that lower the ``k + 2`` bound to ``k + 1``.

    (I) ``H`` or its complement is ``K_{d+1}``-free critical; (II) some
    2d-set ``S`` has both ``H[S]`` and its complement ``K_{d+1}``-free;
    (III) some 2d-set ``S`` has ``girth(H[S]) = 2d`` or the same in the
    complement.  The subset searches are exhaustive.
    """
    n = h.n
    if d < 3 or n % d or n // d < 3:
        return RefinedConditionReport(False, d, reason=f"needs n = k*d with k, d >= 3 (n={n}, d={d})")
    k = n // d
    pat = PatternSpec.single(complete(d + 1), label=f"K{d + 1}")
    hc = h.complement()
    rep = RefinedConditionReport(True, d, k)
    if criticality is None:
        criticality = (is_critical(h, pat), is_critical(hc, pat))
    rep.cond_i = any(criticality)
    rows, crows = h.rows, hc.rows
    for s in itertools.combinations(range(n), 2 * d):
        mask = sum(1 << v for v in s)
        if rep.subset_ii is None:
            if (not _max_clique(rows, mask, target=d + 1)
                    and not _max_clique(crows, mask, target=d + 1)):
                rep.subset_ii = s
        if rep.subset_iii is None:
            sub = h.induced_subgraph(s)
            if girth(sub) == 2 * d or girth(sub.complement()) == 2 * d:
                rep.subset_iii = s
        if rep.subset_ii is not None and rep.subset_iii is not None:
            break
    rep.cond_ii = rep.subset_ii is not None
    rep.cond_iii = rep.subset_iii is not None
    if evaluate_sum or rep.any:
        rep.sum = chi_g_exact(h, pat).value + chi_g_exact(hc, pat).value
        if rep.any:
            rep.refined_bound = k + 1
            rep.holds = rep.sum <= k + 1
    return rep


# -- sharpness witnesses -------------------------------------------------------

@dataclass(frozen=True)
class Witness:
    name: str
    graph: Graph
    pattern: PatternSpec
    chi: int
    chi_complement: int


class WitnessMismatch(AssertionError):
    pass


def default_witnesses() -> list[Witness]:
    """The extremal examples: each meets ``ceil(n/delta) + 1`` with equality."""
    k44 = complete_bipartite(4, 4)
    c5 = cycle(5)
    out = [
        Witness("K4,4 / G=H", k44, PatternSpec.single(k44, label="K4,4"), 2, 1),
        Witness("C5 / G=H", c5, PatternSpec.single(c5, label="C5"), 2, 2),
    ]
    for k, d in [(3, 3), (3, 4), (4, 3)]:
        h = clique_plus_independent((k - 1) * d, d + 1)
        pat = PatternSpec.single(complete(d + 1), label=f"K{d + 1}")
        out.append(Witness(f"{h.name} / K{d + 1} (k={k}, delta={d})", h, pat, k, 2))
    out.append(Witness("K3+3K1 / K3", clique_plus_independent(3, 3),
                       PatternSpec.single(complete(3), label="K3"), 2, 2))
    return out


def witness_suite(witnesses: Sequence[Witness] | None = None) -> list[NGRecord]:
    """Evaluate each witness; raise :class:`WitnessMismatch` on any deviation."""
    if witnesses is None:
        witnesses = default_witnesses()
    out = []
    for w in witnesses:
        rec = ng_sum(w.graph, w.pattern)
        target = _cdiv(w.graph.n, w.pattern.delta) + 1
        if (rec.chi, rec.chi_complement) != (w.chi, w.chi_complement) or rec.sum != target:
            raise WitnessMismatch(
                f"{w.name}: computed chi={rec.chi}, chi_complement={rec.chi_complement} "
                f"(sum {rec.sum}); expected {w.chi} + {w.chi_complement} = {target}")
        out.append(rec)
    return out


# -- corpus audit ----------------------------------------------------------------

@dataclass
class AuditEntry:
    record: NGRecord
    bounds: dict[str, dict[str, int | None]]
    bound_violations: list[str]
    chromatic_bound_violations: list[str]
    certificates: list[dict]
    mindeg_failures: list[str]


def _side_bounds(g: Graph, pat: PatternSpec, exact: int) -> tuple[dict, list[str], list[str]]:
    values: dict[str, int | None] = {}
    for name, fn in [("degeneracy", bound_degeneracy), ("size", size_bound), ("chromatic", bound_chromatic)]:
        try:
            values[name] = fn(g, pat)
        except BoundNotApplicable:
            values[name] = None
    try:
        cert = bound_maxdeg(g, pat)
        values["maxdeg"] = cert.value
        if not cert.coloring.is_valid(g):
            values["maxdeg"] = None
            raise AssertionError("Lovász decomposition produced an invalid coloring")
    except BoundNotApplicable:
        values["maxdeg"] = None
    proved = [name for name in ("degeneracy", "size", "maxdeg")
              if values[name] is not None and exact > values[name]]
    unproved = ["chromatic"] if values["chromatic"] is not None and exact > values["chromatic"] else []
    return values, proved, unproved


def audit_pair(h: Graph, pat: PatternSpec, *, certificates: bool = True) -> AuditEntry:
    """Full audit of one (graph, pattern) pair."""
    rec = ng_sum(h, pat)
    hc = h.complement()
    bounds, bviol, pviol = {}, [], []
    certs, mfail = [], []
    for side, g, exact in (("H", h, rec.chi), ("complement", hc, rec.chi_complement)):
        vals, proved, unproved = _side_bounds(g, pat, exact)
        bounds[side] = {"exact": exact, **vals}
        bviol += [f"{side}:{name}" for name in proved]
        pviol += [f"{side}:{name}" for name in unproved]
        if certificates and g.n:
            cert = extract_critical(g, pat)
            certs.append({"side": side, **cert.as_dict()})
            if not cert.mindeg_check:
                mfail.append(side)
    return AuditEntry(rec, bounds, bviol, pviol, certs, mfail)


def _audit_task(args):
    g6, pat, certificates, seconds = args
    with time_limit(seconds):
        return audit_pair(parse_graph6(g6), pat, certificates=certificates)


def _workers(requested: int | None) -> int:
    cap = os.environ.get(WORKERS_ENV)
    n = requested if requested is not None else 1
    if cap:
        n = min(n, max(1, int(cap)))
    return max(1, n)


@dataclass
class AuditReport:
    entries: list[AuditEntry] = field(default_factory=list)
    skipped: list[int] = field(default_factory=list)

    @property
    def violations(self) -> list[dict]:
        out = []
        for e in self.entries:
            r = e.record
            for c in r.violations:
                out.append({"graph6": r.graph6, "pattern": r.pattern, "kind": "ng",
                            "claim": c.name, "bound": c.bound, "sum": r.sum})
            for b in e.bound_violations:
                out.append({"graph6": r.graph6, "pattern": r.pattern, "kind": "bound", "claim": b})
            for side in e.mindeg_failures:
                out.append({"graph6": r.graph6, "pattern": r.pattern, "kind": "mindeg", "claim": side})
        return out

    @property
    def chromatic_bound_violations(self) -> list[dict]:
        return [{"graph6": e.record.graph6, "pattern": e.record.pattern, "side": s,
                 "exact": e.bounds[s.split(":")[0]]["exact"],
                 "bound": e.bounds[s.split(":")[0]]["chromatic"]}
                for e in self.entries for s in e.chromatic_bound_violations]

    @property
    def sharp(self) -> list[dict]:
        return [{"graph6": e.record.graph6, "pattern": e.record.pattern, "sum": e.record.sum,
                 "bound": e.record.bound, "branch": e.record.branch}
                for e in self.entries if e.record.sharp]

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> dict:
        records = [e.record for e in self.entries]
        return {
            "pairs": len(records),
            "graphs": len({r.graph6 for r in records}),
            "patterns": sorted({r.pattern for r in records}),
            "violations": len(self.violations),
            "chromatic_bound_violations": len(self.chromatic_bound_violations),
            "sharp": sum(r.sharp for r in records),
            "max_slack": max((r.slack for r in records), default=None),
            "certificates": sum(len(e.certificates) for e in self.entries),
            "skipped_lines": list(self.skipped),
        }

    def to_json(self, *, include_records: bool = True, indent: int | None = 2) -> str:
        doc = {
            "summary": self.summary(),
            "violations": self.violations,
            "chromatic_bound_violations": self.chromatic_bound_violations,
            "sharp": self.sharp,
            "records": [
                {**e.record.as_dict(), "bounds": e.bounds} for e in self.entries
            ] if include_records else [],
        }
        return json.dumps(doc, indent=indent)

    def table(self) -> str:
        head = f"{'graph6':<14} {'pattern':<8} {'n':>2} {'chi':>3} {'chi~':>4} {'sum':>3} {'bound':>5} {'branch':<20} sharp"
        lines = [head, "-" * len(head)]
        for e in self.entries:
            r = e.record
            flag = "*" if r.sharp else ""
            bad = " VIOLATION" if r.violations or e.bound_violations or e.mindeg_failures else ""
            lines.append(f"{r.graph6:<14} {r.pattern:<8} {r.n:>2} {r.chi:>3} {r.chi_complement:>4} "
                         f"{r.sum:>3} {r.bound:>5} {r.branch:<20} {flag}{bad}")
        s = self.summary()
        lines.append(f"{s['pairs']} pairs, {s['violations']} violations, "
                     f"{s['chromatic_bound_violations']} chromatic-bound violations (report only), {s['sharp']} sharp")
        return "\n".join(lines)


def verify_corpus(source: Iterable[Graph] | Iterable[str], patterns: Sequence[PatternSpec], *,
                  workers: int | None = None, certificates: bool = True,
                  time_limit_per_graph: float | None = None) -> AuditReport:
    """Audit every (graph, pattern) pair of a corpus.

    ``source`` is an iterable of graphs or of graph6 lines (e.g. an open
    file); unreadable lines are skipped with a warning.  Entries are ordered
    by graph6 string, then pattern name, whatever the worker count.  A pair
    that exceeds ``time_limit_per_graph`` raises :class:`SolverTimeout`.
    """
    report = AuditReport()
    graphs: list[str] = []
    items = list(source)
    if items and isinstance(items[0], str):
        parsed = list(read_graph6(items))
        read_lines = {ln for ln, _ in parsed}
        nonblank = {i for i, s in enumerate(items, start=1) if s.strip() and s.strip() != ">>graph6<<"}
        report.skipped = sorted(nonblank - read_lines)
        graphs = [encode_graph6(g) for _, g in parsed]
    else:
        graphs = [encode_graph6(g) for g in items]
    tasks = sorted(((g6, p, certificates, time_limit_per_graph) for g6 in dict.fromkeys(graphs) for p in patterns),
                   key=lambda t: (t[0], t[1].name))
    nw = _workers(workers)
    if nw == 1 or len(tasks) < 2:
        report.entries = [_audit_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=nw) as pool:
            report.entries = list(pool.map(_audit_task, tasks, chunksize=8))
    return report
