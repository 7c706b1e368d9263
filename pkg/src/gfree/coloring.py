"""Exact G-free chromatic number and constructive upper bounds.

A G-free k-coloring splits the vertices into ``k`` classes none of which
induces a subgraph containing a copy of the forbidden pattern.  The exact
solver is a backtracking search; when a vertex joins a class only copies
through that vertex need to be looked for, since the class was
pattern-free before.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from .graph import DegreeBounds, Graph, degeneracy, iter_bits, popcount
from .named import complete
from .patterns import PatternSpec, _max_clique, contains_copy, copy_in_mask, copy_through

K2 = PatternSpec.single(complete(2), label="K2")


class BoundNotApplicable(ValueError):
    """The hypotheses of a bound do not hold for this input."""


@dataclass(frozen=True)
class Coloring:
    """Color index per vertex (``assignment[v]`` in ``0..k-1``)."""

    assignment: tuple[int, ...]
    k: int
    pattern: PatternSpec

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.assignment):
            out[c].append(v)
        return out

    @property
    def used(self) -> int:
        """Number of non-empty classes."""
        return len(set(self.assignment))

    def is_valid(self, h: Graph) -> bool:
        """Independent check: every class is pattern-free and every vertex is colored."""
        if len(self.assignment) != h.n or any(not 0 <= c < self.k for c in self.assignment):
            return False
        return not any(contains_copy(h.induced_subgraph(cls), self.pattern) for cls in self.classes())


def _search_order(h: Graph) -> list[int]:
    return list(reversed(degeneracy(h).ordering))


def decide_k_colorable(h: Graph, pat: PatternSpec, k: int) -> Coloring | None:
    """A G-free ``k``-coloring of ``h`` if one exists, else None.

    Vertices are colored in reverse degeneracy order.  A vertex may open at
    most one new class, which removes the ``k!`` relabelings of each
    solution from the search.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    n = h.n
    rows = h.rows
    order = _search_order(h)
    classes = [0] * k
    color = [0] * n

    def rec(i: int, opened: int) -> bool:
        if i == n:
            return True
        v = order[i]
        bit = 1 << v
        for c in range(min(opened + 1, k)):
            trial = classes[c] | bit
            if copy_through(rows, trial, v, pat):
                continue
            classes[c] = trial
            color[v] = c
            if rec(i + 1, max(opened, c + 1)):
                return True
            classes[c] ^= bit
        return False

    if not rec(0, 0):
        return None
    return Coloring(tuple(color), k, pat)


def lower_bound(h: Graph, pat: PatternSpec) -> int:
    """Cheap lower bound on the G-free chromatic number."""
    if h.n == 0:
        return 0
    t = pat.clique_size
    if t is not None:
        # each class holds at most t-1 vertices of any clique
        omega = len(_max_clique(h.rows, h.vertex_mask))
        return max(1, -(-omega // (t - 1)))
    return 2 if copy_in_mask(h.rows, h.vertex_mask, pat) is not None else 1


@dataclass(frozen=True)
class ChiResult:
    value: int
    witness: Coloring


def chi_g_exact(h: Graph, pat: PatternSpec) -> ChiResult:
    """Smallest ``k`` admitting a G-free ``k``-coloring, with a witness.

    The graph with no vertices has value 0; any other pattern-free graph has
    value 1.
    """
    if h.n == 0:
        return ChiResult(0, Coloring((), 0, pat))
    upper = greedy_degeneracy_coloring(h, pat)
    k = lower_bound(h, pat)
    while k < upper.k:
        col = decide_k_colorable(h, pat, k)
        if col is not None:
            return ChiResult(k, col)
        k += 1
    return ChiResult(upper.k, upper)


def chi_g(h: Graph, pat: PatternSpec) -> int:
    return chi_g_exact(h, pat).value


def chromatic_number(h: Graph) -> int:
    return chi_g_exact(h, K2).value


def greedy_degeneracy_coloring(h: Graph, pat: PatternSpec) -> Coloring:
    """First-fit over the reverse peel order.

    Each vertex has at most ``degeneracy(h)`` previously colored neighbours,
    so with ``1 + ceil(degeneracy / delta(pat))`` classes one of them holds
    fewer than ``delta(pat)`` of those neighbours and stays pattern-free.
    """
    rows = h.rows
    classes: list[int] = []
    color = [0] * h.n
    for v in _search_order(h):
        bit = 1 << v
        for c, mask in enumerate(classes):
            if not copy_through(rows, mask | bit, v, pat):
                classes[c] = mask | bit
                color[v] = c
                break
        else:
            color[v] = len(classes)
            classes.append(bit)
    return Coloring(tuple(color), len(classes), pat)


def bound_degeneracy(h: Graph, pat: PatternSpec) -> int:
    """``1 + ceil(degeneracy(h) / delta(pat))``."""
    d = pat.delta
    if d < 1:
        raise BoundNotApplicable("pattern has an isolated vertex (minimum degree 0)")
    return 1 + -(-degeneracy(h).value // d)


# -- Lovász decomposition ----------------------------------------------------

@dataclass
class Decomposition:
    """Result of :func:`lovasz_decomposition`.

    ``potentials[0]`` is the potential of the starting partition and each
    later entry follows one recorded move ``(vertex, from_class, to_class)``.
    """

    classes: list[list[int]]
    bounds: DegreeBounds
    moves: list[tuple[int, int, int]] = field(default_factory=list)
    potentials: list[int] = field(default_factory=list)

    def class_max_degrees(self, h: Graph) -> list[int]:
        out = []
        for cls in self.classes:
            mask = sum(1 << v for v in cls)
            out.append(max((popcount(h.row(v) & mask) for v in cls), default=0))
        return out


def partition_potential(h: Graph, classes: Sequence[Sequence[int]], bounds: Sequence[int]) -> int:
    """``sum_i e(V_i) - d_i * |V_i|``."""
    total = 0
    for cls, d in zip(classes, bounds):
        mask = sum(1 << v for v in cls)
        edges = sum(popcount(h.row(v) & mask) for v in cls) // 2
        total += edges - d * len(cls)
    return total


def lovasz_decomposition(h: Graph, bounds: Sequence[int] | DegreeBounds) -> Decomposition:
    """Split ``V(h)`` into ``k`` classes with ``Delta(h[V_i]) <= d_i``.

    Requires ``sum(d_i) >= Delta(h) - k + 1``.  Starting from a round-robin
    partition, a vertex with too many neighbours in its own class moves to
    the class ``j`` minimising ``deg_j(v) - d_j``.  Under the hypothesis that
    minimum is at most 0 while the violated class gives at least 1, so every
    move lowers the potential ``sum_i e(V_i) - d_i |V_i|`` and the loop ends.
    """
    bounds = bounds if isinstance(bounds, DegreeBounds) else DegreeBounds(bounds)
    k = bounds.k
    if sum(bounds) < h.max_degree - k + 1:
        raise BoundNotApplicable(
            f"sum of target degrees {sum(bounds)} < Delta - k + 1 = {h.max_degree - k + 1}")
    rows = h.rows
    where = [v % k for v in range(h.n)]
    masks = [0] * k
    for v, c in enumerate(where):
        masks[c] |= 1 << v
    out = Decomposition([], bounds)
    phi = partition_potential(h, [list(iter_bits(m)) for m in masks], bounds)
    out.potentials.append(phi)
    while True:
        for v in range(h.n):
            i = where[v]
            if popcount(rows[v] & masks[i]) > bounds[i]:
                break
        else:
            break
        here = popcount(rows[v] & masks[i]) - bounds[i]
        scores = [popcount(rows[v] & masks[j]) - bounds[j] for j in range(k)]
        j = min(range(k), key=lambda c: (scores[c], c))
        if scores[j] >= here:
            raise AssertionError("no improving move; hypothesis check is wrong")
        masks[i] &= ~(1 << v)
        masks[j] |= 1 << v
        where[v] = j
        phi += scores[j] - here
        out.moves.append((v, i, j))
        out.potentials.append(phi)
    out.classes = [list(iter_bits(m)) for m in masks]
    return out


@dataclass(frozen=True)
class BoundCertificate:
    value: int
    coloring: Coloring


def bound_maxdeg(h: Graph, pat: PatternSpec) -> BoundCertificate:
    """``ceil((Delta(h) + 1) / Delta(pat))`` with a coloring that attains it.

    Built from a Lovász decomposition with every target degree equal to
    ``Delta(pat) - 1``: a class of smaller maximum degree than the pattern
    cannot contain it.  For the 2-regular family ``Delta = 2``.
    """
    dg = pat.max_degree
    if dg < 1:
        raise BoundNotApplicable("pattern has no edges")
    k = -(-(h.max_degree + 1) // dg)
    dec = lovasz_decomposition(h, [dg - 1] * k)
    assignment = [0] * h.n
    for c, cls in enumerate(dec.classes):
        for v in cls:
            assignment[v] = c
    return BoundCertificate(k, Coloring(tuple(assignment), k, pat))


def bound_chromatic(h: Graph, pat: PatternSpec) -> int:
    """``ceil(chi(h) / (chi(G) - 1))``; only defined for a single pattern with an edge."""
    if pat.graph is None:
        raise BoundNotApplicable("chromatic bound needs a single forbidden graph")
    chi_pat = chromatic_number(pat.graph)
    if chi_pat < 2:
        raise BoundNotApplicable("pattern is edgeless, chi(G) - 1 = 0")
    return -(-chromatic_number(h) // (chi_pat - 1))


def size_bound(h: Graph, pat: PatternSpec) -> int:
    """``ceil(n / delta(pat))``: classes of ``delta`` vertices are always pattern-free."""
    d = pat.delta
    if d < 1:
        raise BoundNotApplicable("pattern has minimum degree 0")
    return -(-h.n // d)


@dataclass
class BoundReport:
    exact: int
    bound_degeneracy: int | None
    bound_maxdeg: int | None
    bound_chromatic: int | None
    trivial_size_bound: int | None
    passes: dict[str, bool | None]

    def as_dict(self) -> dict:
        return {
            "exact": self.exact,
            "bound_degeneracy": self.bound_degeneracy,
            "bound_maxdeg": self.bound_maxdeg,
            "bound_chromatic": self.bound_chromatic,
            "trivial_size_bound": self.trivial_size_bound,
            "passes": dict(self.passes),
        }


def _try(fn, *args):
    try:
        return fn(*args)
    except BoundNotApplicable:
        return None


def bound_report(h: Graph, pat: PatternSpec, exact: int | None = None) -> BoundReport:
    """Exact value next to every upper bound; ``passes[name]`` is None when not applicable."""
    if exact is None:
        exact = chi_g(h, pat)
    maxdeg = _try(bound_maxdeg, h, pat)
    values = {
        "degeneracy": _try(bound_degeneracy, h, pat),
        "maxdeg": None if maxdeg is None else maxdeg.value,
        "chromatic": _try(bound_chromatic, h, pat),
        "size": _try(size_bound, h, pat),
    }
    passes = {name: (None if v is None else exact <= v) for name, v in values.items()}
    return BoundReport(exact, values["degeneracy"], values["maxdeg"], values["chromatic"],
                       values["size"], passes)
