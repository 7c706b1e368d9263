"""G-free critical subgraphs and their certificates.

``H`` is G-free ``k``-critical when ``chi_G(H) = k`` and every proper
subgraph (vertex- or edge-deleted) has a G-free ``(k-1)``-coloring.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import Coloring, chi_g, chi_g_exact, decide_k_colorable
from .graph import Graph, GraphError, edge_subgraph
from .patterns import PatternSpec


def _drops_below(g: Graph, pat: PatternSpec, k: int) -> Coloring | None:
    """A (k-1)-coloring of ``g`` if ``chi_G(g) < k``; for k=1 only the empty graph qualifies."""
    if k <= 1:
        return Coloring((), 0, pat) if g.n == 0 else None
    return decide_k_colorable(g, pat, k - 1)


@dataclass
class CriticalCertificate:
    """A critical subgraph ``F`` of a host graph, in host labels.

    ``vertex_evidence[v]`` and ``edge_evidence[(u, v)]`` are G-free
    ``(k-1)``-colorings of ``F - v`` and ``F - uv`` (in the labels of
    :attr:`graph` after the deletion), which show that every deletion
    lowers the G-free chromatic number.
    """

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    k: int
    pattern: PatternSpec
    vertex_evidence: dict[int, Coloring] = field(default_factory=dict)
    edge_evidence: dict[tuple[int, int], Coloring] = field(default_factory=dict)
    min_degree: int = 0

    @property
    def graph(self) -> Graph:
        """``F`` relabeled so that ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(self.vertices)}
        return Graph(len(self.vertices), [(index[u], index[v]) for u, v in self.edges])

    @property
    def mindeg_check(self) -> bool:
        """Minimum degree of ``F`` is at least ``delta(G) * (k - 1)``."""
        if not self.vertices:
            return True
        return self.min_degree >= self.pattern.delta * (self.k - 1)

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "pattern": self.pattern.name,
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
            "min_degree": self.min_degree,
            "required_min_degree": self.pattern.delta * max(self.k - 1, 0),
            "mindeg_check": self.mindeg_check,
            "vertex_evidence": {str(v): list(c.assignment) for v, c in self.vertex_evidence.items()},
            "edge_evidence": {f"{u}-{v}": list(c.assignment) for (u, v), c in self.edge_evidence.items()},
        }


def is_critical(h: Graph, pat: PatternSpec, k: int | None = None) -> bool:
    """Is ``h`` G-free ``chi_G(h)``-critical?

    Deleting an edge leaves a spanning subgraph that contains ``h - v`` for
    either endpoint, so it is enough to test edge deletions and the
    deletion of isolated vertices.
    """
    if h.n == 0:
        return False
    if k is None:
        k = chi_g(h, pat)
    for u, v in h.edges():
        if _drops_below(h.remove_edge(u, v), pat, k) is None:
            return False
    for v in range(h.n):
        if h.degree(v) == 0 and _drops_below(h.remove_vertex(v), pat, k) is None:
            return False
    return True


def extract_critical(h: Graph, pat: PatternSpec) -> CriticalCertificate:
    """Shrink ``h`` to a G-free ``chi_G(h)``-critical subgraph.

    Vertices are tried in increasing degree, then edges in lexicographic
    order; an element is dropped when the remainder still needs ``k``
    classes.  One pass of each suffices: an element kept once is still
    needed in every smaller subgraph.
    """
    k = chi_g(h, pat)
    keep = list(range(h.n))
    if k == 0:
        return CriticalCertificate((), (), 0, pat)
    for v in sorted(range(h.n), key=lambda u: (h.degree(u), u)):
        trial = [u for u in keep if u != v]
        if _drops_below(h.induced_subgraph(trial), pat, k) is None:
            keep = trial
    edges = [(u, v) for u, v in h.edges() if u in keep and v in keep]
    for e in list(edges):
        trial = [x for x in edges if x != e]
        if _drops_below(edge_subgraph(h, keep, trial), pat, k) is None:
            edges = trial
    return certify(h, keep, edges, pat, k)


def certify(h: Graph, vertices, edges, pat: PatternSpec, k: int | None = None) -> CriticalCertificate:
    """Build a certificate for the subgraph ``(vertices, edges)`` of ``h``.

    Raises ``ValueError`` if some deletion does not lower the G-free
    chromatic number.
    """
    vertices = tuple(vertices)
    edges = tuple(sorted(tuple(sorted(e)) for e in edges))
    f = edge_subgraph(h, vertices, edges)
    if k is None:
        k = chi_g(f, pat)
    cert = CriticalCertificate(vertices, edges, k, pat, min_degree=f.min_degree)
    for i, v in enumerate(vertices):
        col = _drops_below(f.remove_vertex(i), pat, k)
        if col is None:
            raise ValueError(f"deleting vertex {v} keeps chi_G at {k}")
        cert.vertex_evidence[v] = col
    index = {v: i for i, v in enumerate(vertices)}
    for u, v in edges:
        col = _drops_below(f.remove_edge(index[u], index[v]), pat, k)
        if col is None:
            raise ValueError(f"deleting edge {u}-{v} keeps chi_G at {k}")
        cert.edge_evidence[(u, v)] = col
    return cert


def subgraph_with_chi(h: Graph, pat: PatternSpec, target: int) -> Graph:
    """A subgraph of ``h`` whose G-free chromatic number is exactly ``target``.

    Takes the critical core and removes one vertex at a time; each removal
    from a critical graph lowers the value by exactly one.
    """
    top = chi_g_exact(h, pat).value
    if not 0 <= target <= top:
        raise GraphError(f"target {target} outside 0..{top}")
    if target == 0:
        return Graph(0)
    f = extract_critical(h, pat).graph
    for _ in range(top - target):
        f = extract_critical(f.remove_vertex(0), pat).graph
    return f
