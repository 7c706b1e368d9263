"""Immutable simple undirected graphs on vertices ``0..n-1``.

Adjacency is stored as one Python ``int`` bitmask per vertex.  Bit ``u`` of
``rows[v]`` is set iff ``uv`` is an edge.  Python integers are unbounded, so
the same representation serves graphs of any order; the algorithms in this
package are only intended for graphs up to a few hundred vertices.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass


class GraphError(ValueError):
    """Raised for invalid graph construction or out-of-range vertices."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """A simple undirected graph with vertices ``0..n-1``.

    Instances are immutable and hashable.  Equality is *labeled* equality:
    two graphs are equal when they have the same order and the same edge
    set.  The optional ``name`` is a display label and takes no part in
    equality.

    >>> g = Graph(3, [(0, 1), (1, 2)])
    >>> g.m, g.degree(1), sorted(g.edges())
    (2, 2, [(0, 1), (1, 2)])
    """

    __slots__ = ("_n", "_rows", "name")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), name: str | None = None):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self._n = n
        self._rows = tuple(rows)
        self.name = name

    @classmethod
    def from_rows(cls, rows: Sequence[int], name: str | None = None) -> Graph:
        """Build from adjacency bitmasks, validating symmetry and loops."""
        n = len(rows)
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {v} references vertices >= {n}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        return cls._trusted(tuple(rows), name)

    @classmethod
    def _trusted(cls, rows: tuple[int, ...], name: str | None = None) -> Graph:
        g = cls.__new__(cls)
        g._n = len(rows)
        g._rows = rows
        g.name = name
        return g

    # -- basic accessors ---------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self._rows) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self._n) - 1

    def row(self, v: int) -> int:
        return self._rows[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self._rows[v]))

    def degree(self, v: int) -> int:
        return popcount(self._rows[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self._rows]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self._rows):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    def is_complete(self) -> bool:
        return all(popcount(r) == self._n - 1 for r in self._rows)

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    # -- derived graphs ----------------------------------------------------

    def complement(self) -> Graph:
        full = self.vertex_mask
        return Graph._trusted(tuple(full & ~r & ~(1 << v) for v, r in enumerate(self._rows)))

    def induced_subgraph(self, vertices: Iterable[int]) -> Graph:
        """Subgraph induced by ``vertices``, relabeled in increasing order."""
        vs = sorted(set(vertices))
        for v in vs:
            if not 0 <= v < self._n:
                raise GraphError(f"vertex {v} out of range for n={self._n}")
        index = {v: i for i, v in enumerate(vs)}
        rows = []
        for v in vs:
            r = 0
            for u in iter_bits(self._rows[v]):
                i = index.get(u)
                if i is not None:
                    r |= 1 << i
            rows.append(r)
        return Graph._trusted(tuple(rows))

    def induced_mask(self, mask: int) -> Graph:
        return self.induced_subgraph(iter_bits(mask))

    def remove_vertex(self, v: int) -> Graph:
        return self.induced_subgraph(u for u in range(self._n) if u != v)

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        rows = list(self._rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._trusted(tuple(rows))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise GraphError("perm must be a permutation of 0..n-1")
        rows = [0] * self._n
        for v, row in enumerate(self._rows):
            r = 0
            for u in iter_bits(row):
                r |= 1 << perm[u]
            rows[perm[v]] = r
        return Graph._trusted(tuple(rows))

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __len__(self) -> int:
        return self._n

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self._n} m={self.m}>"


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint copies of ``g`` and ``h`` plus every edge between them.

    Vertices of ``h`` are shifted by ``g.n``.
    """
    shift = g.n
    g_all = g.vertex_mask
    h_all = h.vertex_mask << shift
    rows = [r | h_all for r in g.rows] + [(r << shift) | g_all for r in h.rows]
    return Graph._trusted(tuple(rows))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph._trusted(tuple(g.rows) + tuple(r << shift for r in h.rows))


def edge_subgraph(g: Graph, vertices: Sequence[int], edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on ``vertices`` (relabeled in the given order) with only ``edges``."""
    index = {v: i for i, v in enumerate(vertices)}
    out = []
    for u, v in edges:
        if not g.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge of the host graph")
        out.append((index[u], index[v]))
    return Graph(len(vertices), out)


@dataclass(frozen=True)
class Degeneracy:
    value: int
    ordering: tuple[int, ...]  # peel order: ordering[0] removed first


def degeneracy(g: Graph) -> Degeneracy:
    """Degeneracy by repeated removal of a minimum-degree vertex.

    The value equals the maximum, over induced subgraphs, of the minimum
    degree.  Ties are broken by smallest label so the ordering is
    deterministic.
    """
    alive = g.vertex_mask
    deg = g.degrees()
    order: list[int] = []
    best = 0
    rows = g.rows
    while alive:
        v = min(iter_bits(alive), key=lambda u: (deg[u], u))
        best = max(best, deg[v])
        order.append(v)
        alive &= ~(1 << v)
        for u in iter_bits(rows[v] & alive):
            deg[u] -= 1
    return Degeneracy(best, tuple(order))


class DegreeBounds(tuple):
    """Non-increasing sequence of non-negative target degrees ``d_1 >= ... >= d_k``."""

    def __new__(cls, values: Iterable[int]) -> DegreeBounds:
        vals = tuple(int(x) for x in values)
        if not vals:
            raise ValueError("DegreeBounds needs at least one class")
        if any(x < 0 for x in vals):
            raise ValueError(f"target degrees must be non-negative: {vals}")
        if any(a < b for a, b in zip(vals, vals[1:])):
            raise ValueError(f"target degrees must be non-increasing: {vals}")
        return super().__new__(cls, vals)

    @property
    def k(self) -> int:
        return len(self)
