"""Forbidden-pattern detection, clique number and girth.

A :class:`PatternSpec` is either a single graph ``G`` (on at least two
vertices) or the family of all 2-regular graphs.  "Contains a copy" means
subgraph containment by default; ``induced=True`` switches to induced
containment for exploration.

The low-level entry points :func:`copy_in_mask` and :func:`copy_through`
work directly on adjacency bitmasks restricted to a vertex mask, which is
what the coloring search needs.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass, field

from .graph import Graph, iter_bits, popcount


@dataclass(frozen=True)
class _Step:
    vertex: int
    back: tuple[int, ...]
    nonback: tuple[int, ...]
    degree: int


def _plan(p: Graph, first: int | None = None) -> tuple[_Step, ...]:
    """Matching order: always extend by the vertex with most placed neighbours."""
    rows = p.rows
    deg = p.degrees()
    remaining = set(range(p.n))
    placed = 0
    pos: dict[int, int] = {}
    steps = []
    while remaining:
        if first is not None and not steps:
            v = first
        else:
            v = max(remaining, key=lambda u: (popcount(rows[u] & placed), deg[u], -u))
        back = tuple(pos[u] for u in iter_bits(rows[v] & placed))
        nonback = tuple(pos[u] for u in iter_bits(placed & ~rows[v]))
        steps.append(_Step(v, back, nonback, deg[v]))
        pos[v] = len(steps) - 1
        placed |= 1 << v
        remaining.discard(v)
    return tuple(steps)


def _embed(rows: Sequence[int], allowed: int, steps: tuple[_Step, ...], induced: bool,
           root: int | None = None) -> list[int] | None:
    """Backtracking embedding of the planned pattern into ``rows`` restricted to ``allowed``.

    Returns the image of each step, or None.  With ``root`` the first step is
    pinned to that host vertex.
    """
    k = len(steps)
    degin = {v: popcount(rows[v] & allowed) for v in iter_bits(allowed)}
    img = [0] * k

    def rec(i: int, used: int) -> bool:
        if i == k:
            return True
        st = steps[i]
        if i == 0 and root is not None:
            cand = (1 << root) & allowed
        else:
            cand = allowed & ~used
            for j in st.back:
                cand &= rows[img[j]]
            if induced:
                for j in st.nonback:
                    cand &= ~rows[img[j]]
        while cand:
            low = cand & -cand
            cand ^= low
            c = low.bit_length() - 1
            if degin[c] < st.degree:
                continue
            img[i] = c
            if rec(i + 1, used | low):
                return True
        return False

    return list(img) if rec(0, 0) else None


def _orbits(p: Graph) -> list[int]:
    """One representative per automorphism orbit of ``p`` (brute force over roots)."""
    reps: list[int] = []
    assigned: set[int] = set()
    for v in range(p.n):
        if v in assigned:
            continue
        reps.append(v)
        assigned.add(v)
        steps = _plan(p, first=v)
        for u in range(v + 1, p.n):
            if u not in assigned and p.degree(u) == p.degree(v):
                if _embed(p.rows, p.vertex_mask, steps, True, root=u) is not None:
                    assigned.add(u)
    return reps


@dataclass(frozen=True)
class PatternSpec:
    """A forbidden pattern: one graph, or (``graph=None``) all 2-regular graphs."""

    graph: Graph | None
    induced: bool = False
    label: str | None = None
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if self.graph is not None and self.graph.n < 2:
            raise ValueError("a forbidden graph must have at least 2 vertices")

    @classmethod
    def single(cls, g: Graph, *, induced: bool = False, label: str | None = None) -> PatternSpec:
        return cls(g, induced=induced, label=label or g.name)

    @classmethod
    def all_two_regular(cls) -> PatternSpec:
        return cls(None, label="cycles")

    @property
    def is_family(self) -> bool:
        return self.graph is None

    @property
    def name(self) -> str:
        if self.label:
            return self.label
        if self.graph is None:
            return "cycles"
        from .formats import encode_graph6

        return "g6:" + encode_graph6(self.graph)

    @property
    def delta(self) -> int:
        """Minimum degree of the pattern (2 for the 2-regular family)."""
        return 2 if self.graph is None else self.graph.min_degree

    @property
    def max_degree(self) -> int:
        return 2 if self.graph is None else self.graph.max_degree

    @property
    def order(self) -> int:
        """Fewest vertices any member can have."""
        return 3 if self.graph is None else self.graph.n

    @property
    def clique_size(self) -> int | None:
        """``t`` when the pattern is the complete graph ``K_t``, else None."""
        if self.graph is not None and self.graph.is_complete():
            return self.graph.n
        return None

    def _steps(self) -> tuple[_Step, ...]:
        if "steps" not in self._cache:
            self._cache["steps"] = _plan(self.graph)
        return self._cache["steps"]

    def _rooted_steps(self) -> list[tuple[_Step, ...]]:
        if "rooted" not in self._cache:
            self._cache["rooted"] = [_plan(self.graph, first=r) for r in _orbits(self.graph)]
        return self._cache["rooted"]

    def __str__(self) -> str:
        return self.name


# -- cycle helpers (2-regular family) ---------------------------------------

def _component(rows: Sequence[int], allowed: int, start: int) -> int:
    comp = frontier = 1 << start
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= rows[u]
        frontier = nxt & allowed & ~comp
        comp |= frontier
    return comp


def _find_cycle(rows: Sequence[int], allowed: int) -> list[int] | None:
    """Vertices of some cycle inside ``allowed`` in cyclic order, or None."""
    parent: dict[int, int] = {}
    depth: dict[int, int] = {}
    for s in iter_bits(allowed):
        if s in parent:
            continue
        parent[s] = -1
        depth[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in iter_bits(rows[u] & allowed):
                if w == parent[u]:
                    continue
                if w in parent:
                    # non-tree edge u-w closes a cycle through their tree paths
                    a, b = u, w
                    left, right = [a], [b]
                    while a != b:
                        if depth[a] >= depth[b]:
                            a = parent[a]
                            left.append(a)
                        else:
                            b = parent[b]
                            right.append(b)
                    right.pop()
                    return left + right[::-1]
                parent[w] = u
                depth[w] = depth[u] + 1
                stack.append(w)
    return None


def _has_cycle(rows: Sequence[int], allowed: int) -> bool:
    # a graph is a forest iff |E| = |V| - #components
    edges = sum(popcount(rows[v] & allowed) for v in iter_bits(allowed)) // 2
    if edges < 3:
        return False
    comps = 0
    rest = allowed
    while rest:
        rest &= ~_component(rows, allowed, (rest & -rest).bit_length() - 1)
        comps += 1
    return edges > popcount(allowed) - comps


def _cycle_through(rows: Sequence[int], allowed: int, v: int) -> bool:
    rest = allowed & ~(1 << v)
    nbrs = rows[v] & rest
    while nbrs:
        x = (nbrs & -nbrs).bit_length() - 1
        comp = _component(rows, rest, x)
        if popcount(nbrs & comp) >= 2:
            return True
        nbrs &= ~comp
    return False


# -- cliques ----------------------------------------------------------------

def _max_clique(rows: Sequence[int], allowed: int, target: int | None = None) -> list[int]:
    """Maximum clique in ``allowed`` (or any clique of size ``target`` if given).

    Branch and bound with greedy-coloring bounds on bitsets.
    """
    best: list[int] = []

    def color_order(cand: int) -> list[tuple[int, int]]:
        # greedy sequential coloring; returns (vertex, color) sorted by color
        out = []
        color = 0
        uncolored = cand
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~low & ~rows[v]
                uncolored &= ~low
                out.append((v, color))
        return out

    def expand(clique: list[int], cand: int) -> bool:
        nonlocal best
        order = color_order(cand)
        for v, c in reversed(order):
            if len(clique) + c <= len(best):
                return False
            clique.append(v)
            new = cand & rows[v]
            if new:
                if expand(clique, new):
                    return True
            elif len(clique) > len(best):
                best = list(clique)
                if target is not None and len(best) >= target:
                    return True
            clique.pop()
            cand &= ~(1 << v)
        return False

    if target is not None:
        if target <= 0:
            return []
        best = [-1] * (target - 1)  # placeholder: prune anything smaller than target
    if allowed:
        expand([], allowed)
    if target is not None and len(best) < target:
        return []
    return best


def clique_number(g: Graph) -> int:
    """Order of a largest clique; 0 for the graph with no vertices."""
    return len(_max_clique(g.rows, g.vertex_mask))


def max_clique(g: Graph) -> list[int]:
    return sorted(_max_clique(g.rows, g.vertex_mask))


def girth(g: Graph) -> float:
    """Length of a shortest cycle, or ``math.inf`` for a forest."""
    rows = g.rows
    best = math.inf
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        for u in queue:
            if 2 * dist[u] + 1 >= best:
                break
            for w in iter_bits(rows[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


# -- containment --------------------------------------------------------------

def copy_in_mask(rows: Sequence[int], mask: int, pat: PatternSpec) -> list[int] | None:
    """Witness for a copy of ``pat`` inside the vertex set ``mask``.

    For a single graph the witness lists the host image of pattern vertex
    ``0, 1, ...``; for the 2-regular family it is the vertex sequence of a
    cycle.
    """
    if pat.graph is None:
        return _find_cycle(rows, mask)
    p = pat.graph
    if popcount(mask) < p.n:
        return None
    t = pat.clique_size
    if t is not None:
        found = _max_clique(rows, mask, target=t)
        return sorted(found[:t]) if found else None
    if sum(popcount(rows[v] & mask) for v in iter_bits(mask)) < 2 * p.m:
        return None
    steps = pat._steps()
    img = _embed(rows, mask, steps, pat.induced)
    if img is None:
        return None
    out = [0] * p.n
    for st, c in zip(steps, img):
        out[st.vertex] = c
    return out


def copy_through(rows: Sequence[int], mask: int, v: int, pat: PatternSpec) -> bool:
    """Does ``mask`` (which contains ``v``) hold a copy of ``pat`` using ``v``?"""
    if pat.graph is None:
        return _cycle_through(rows, mask, v)
    p = pat.graph
    if popcount(mask) < p.n or popcount(rows[v] & mask) < p.min_degree:
        return False
    t = pat.clique_size
    if t is not None:
        nb = rows[v] & mask
        if t == 2:
            return nb != 0
        return bool(_max_clique(rows, nb, target=t - 1))
    for steps in pat._rooted_steps():
        if _embed(rows, mask, steps, pat.induced, root=v) is not None:
            return True
    return False


def find_copy(host: Graph, pat: PatternSpec) -> dict[int, int] | None:
    """Map from pattern vertex (or cycle position) to host vertex, or None."""
    img = copy_in_mask(host.rows, host.vertex_mask, pat)
    return None if img is None else dict(enumerate(img))


def contains_copy(host: Graph, pat: PatternSpec) -> bool:
    if pat.graph is None:
        return _has_cycle(host.rows, host.vertex_mask)
    return copy_in_mask(host.rows, host.vertex_mask, pat) is not None


def is_pattern_free(rows: Sequence[int], mask: int, pat: PatternSpec) -> bool:
    if pat.graph is None:
        return not _has_cycle(rows, mask)
    return copy_in_mask(rows, mask, pat) is None
