"""Builders for the named graph families used throughout the package."""

from __future__ import annotations

import re

from .graph import Graph, GraphError, join


def complete(n: int) -> Graph:
    if n < 0:
        raise GraphError("K_n needs n >= 0")
    full = (1 << n) - 1
    return Graph._trusted(tuple(full & ~(1 << v) for v in range(n)), name=f"K{n}")


def empty(n: int) -> Graph:
    """``n`` isolated vertices (``nK1``)."""
    if n < 0:
        raise GraphError("nK1 needs n >= 0")
    return Graph(n, name=f"{n}K1")


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"C_n needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def path(n: int) -> Graph:
    """Path on ``n`` vertices."""
    if n < 1:
        raise GraphError(f"P_n needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("K_{a,b} needs a, b >= 1")
    g = join(empty(a), empty(b))
    g.name = f"K{a},{b}"
    return g


def clique_plus_independent(m: int, t: int) -> Graph:
    """The join ``K_m + tK1``: a clique of order ``m`` joined to ``t`` independent vertices."""
    g = join(complete(m), empty(t))
    g.name = f"K{m}+{t}K1"
    return g


def complete_minus_hamiltonian_cycle(d: int) -> Graph:
    """``K_{2d}`` with the edges of the cycle ``0-1-...-(2d-1)-0`` removed."""
    if d < 2:
        raise GraphError(f"K_2d minus C_2d needs d >= 2, got {d}")
    n = 2 * d
    cyc = {frozenset((i, (i + 1) % n)) for i in range(n)}
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if frozenset((u, v)) not in cyc]
    return Graph(n, edges, name=f"K{n}-C{n}")


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner, name="Petersen")


_PATTERNS = [
    (re.compile(r"K(\d+),(\d+)"), lambda a, b: complete_bipartite(int(a), int(b))),
    (re.compile(r"K(\d+)\+(\d+)K1"), lambda m, t: clique_plus_independent(int(m), int(t))),
    (re.compile(r"K(\d+)-C(\d+)"), None),
    (re.compile(r"(\d+)K1"), lambda t: empty(int(t))),
    (re.compile(r"K(\d+)"), lambda n: complete(int(n))),
    (re.compile(r"C(\d+)"), lambda n: cycle(int(n))),
    (re.compile(r"P(\d+)"), lambda n: path(int(n))),
]


def construct_named(descriptor: str) -> Graph:
    """Build a graph from a short descriptor.

    Accepted forms: ``K5``, ``C7``, ``P4``, ``K4,4``, ``3K1``, ``K6+4K1``,
    ``K6-C6`` (complete graph minus a Hamiltonian cycle, even order only),
    ``Petersen``, and ``g6:<graph6>``.

    >>> construct_named("K3+3K1").m
    12
    """
    text = descriptor.strip()
    if text.startswith("g6:"):
        from .formats import parse_graph6

        return parse_graph6(text[3:])
    if text.lower() == "petersen":
        return petersen()
    for rx, build in _PATTERNS:
        mt = rx.fullmatch(text)
        if not mt:
            continue
        if build is None:
            n, c = int(mt.group(1)), int(mt.group(2))
            if n != c or n % 2:
                raise GraphError(f"{text}: expected K<2d>-C<2d>")
            return complete_minus_hamiltonian_cycle(n // 2)
        return build(*mt.groups())
    raise GraphError(f"unrecognised graph descriptor {descriptor!r}")
