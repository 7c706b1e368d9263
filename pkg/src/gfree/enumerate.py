"""Canonical forms and exhaustive generation of small graphs up to isomorphism."""

from __future__ import annotations

from functools import lru_cache

from .formats import encode_graph6
from .graph import Graph, iter_bits, popcount

MAX_ENUMERATE = 8


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbour counts into every cell until stable.

    Sub-cells are ordered by their count signature, so the result depends
    only on the isomorphism type of the (graph, ordered partition) pair.
    """
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        new: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            sig = {v: tuple(popcount(rows[v] & m) for m in masks) for v in c}
            for key in sorted(set(sig.values())):
                new.append([v for v in c if sig[v] == key])
        if len(new) == len(cells):
            return new
        cells = new


def _key(rows: tuple[int, ...], order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    out = []
    for v in order:
        r = 0
        for u in iter_bits(rows[v]):
            r |= 1 << pos[u]
        out.append(r)
    return tuple(out)


def canonical_labeling(g: Graph) -> list[int]:
    """Order of vertices giving the canonical form.

    Every leaf of the individualise-and-refine tree is visited and the one
    with the lexicographically smallest adjacency rows wins, so the result
    is exact (no automorphism pruning).
    """
    rows = g.rows
    best: tuple[tuple[int, ...], list[int]] | None = None

    def search(cells: list[list[int]]) -> None:
        nonlocal best
        cells = _refine(rows, cells)
        for i, c in enumerate(cells):
            if len(c) > 1:
                break
        else:
            order = [c[0] for c in cells]
            key = _key(rows, order)
            if best is None or key < best[0]:
                best = (key, order)
            return
        for v in c:
            search(cells[:i] + [[v], [u for u in c if u != v]] + cells[i + 1:])

    if g.n == 0:
        return []
    search([list(range(g.n))])
    return best[1]


def canonical_form(g: Graph) -> Graph:
    order = canonical_labeling(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


def canonical_graph6(g: Graph) -> str:
    return encode_graph6(canonical_form(g))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0),)
    seen: dict[tuple[int, ...], Graph] = {}
    for g in _classes(n - 1):
        base = g.rows
        for nbrs in range(1 << (n - 1)):
            rows = tuple(r | ((nbrs >> v & 1) << (n - 1)) for v, r in enumerate(base)) + (nbrs,)
            c = canonical_form(Graph._trusted(rows))
            seen.setdefault(c.rows, c)
    return tuple(seen[k] for k in sorted(seen, key=lambda r: encode_graph6(seen[r])))


def enumerate_small_graphs(n: int) -> list[Graph]:
    """One canonical representative of every isomorphism class on ``n`` vertices.

    Graphs are grown one vertex at a time and deduplicated by canonical
    form.  Output is sorted by graph6 string.  Larger orders should be read
    from a graph6 file instead.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > MAX_ENUMERATE:
        raise ValueError(
            f"enumeration is limited to n <= {MAX_ENUMERATE}; "
            "supply larger corpora as a graph6 stream (e.g. from nauty geng)")
    return list(_classes(n))


def enumerate_up_to(n: int) -> list[Graph]:
    return [g for k in range(n + 1) for g in enumerate_small_graphs(k)]
