"""graph6 and DIMACS ``p edge`` readers and writers."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator
from typing import TextIO

from .graph import Graph

log = logging.getLogger(__name__)

_HEADER = ">>graph6<<"


class ParseError(ValueError):
    """Malformed input.  ``offset`` is a byte offset (graph6) or line number (DIMACS)."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message if offset is None else f"{message} (at offset {offset})")
        self.offset = offset


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"graph too large for graph6: n={n}")


def encode_graph6(g: Graph) -> str:
    """Canonical graph6 string (no header, no newline) for this labeled graph."""
    n = g.n
    rows = g.rows
    bits: list[int] = []
    for j in range(1, n):
        rj = rows[j]
        bits.extend((rj >> i) & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    out = [_encode_n(n)]
    for k in range(0, len(bits), 6):
        chunk = bits[k:k + 6]
        value = 0
        for b in chunk:
            value = (value << 1) | b
        out.append(chr(value + 63))
    return "".join(out)


def _decode_n(data: bytes) -> tuple[int, int]:
    def sextet(i: int) -> int:
        if i >= len(data):
            raise ParseError("truncated vertex-count header", i)
        c = data[i] - 63
        if not 0 <= c <= 63:
            raise ParseError(f"byte {data[i]!r} outside graph6 range", i)
        return c

    if not data:
        raise ParseError("empty graph6 string", 0)
    first = sextet(0)
    if first < 63:
        return first, 1
    if len(data) > 1 and data[1] == 126:
        n = 0
        for i in range(2, 8):
            n = (n << 6) | sextet(i)
        return n, 8
    n = 0
    for i in range(1, 4):
        n = (n << 6) | sextet(i)
    return n, 4


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line.

    A leading ``>>graph6<<`` header and trailing whitespace are accepted.
    Raises :class:`ParseError` for a bad header, a short bit string or
    trailing garbage.
    """
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    data = data.rstrip(b"\r\n \t")
    if data.startswith(_HEADER.encode()):
        data = data[len(_HEADER):]
    n, pos = _decode_n(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) < pos + nbytes:
        raise ParseError(f"truncated bit string: need {nbytes} data bytes for n={n}", len(data))
    if len(data) > pos + nbytes:
        raise ParseError("trailing data after graph6 bit string", pos + nbytes)
    rows = [0] * n
    i, j = 0, 1
    k = 0
    for off in range(pos, pos + nbytes):
        c = data[off] - 63
        if not 0 <= c <= 63:
            raise ParseError(f"byte {data[off]!r} outside graph6 range", off)
        for shift in range(5, -1, -1):
            bit = (c >> shift) & 1
            if k < nbits:
                if bit:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                k += 1
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif bit:
                raise ParseError("nonzero padding bits", off)
    return Graph._trusted(tuple(rows))


def read_graph6(lines: Iterable[str] | TextIO, *, strict: bool = False) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each non-blank line of a graph6 stream.

    Unreadable lines are skipped with a warning unless ``strict`` is set.
    """
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line == _HEADER:
            continue
        try:
            yield lineno, parse_graph6(line)
        except ParseError as exc:
            if strict:
                raise
            log.warning("skipping graph6 line %d: %s", lineno, exc)


def parse_dimacs(text: str) -> Graph:
    """Parse a DIMACS ``p edge n m`` graph with 1-indexed ``e u v`` lines.

    Duplicate edges are collapsed.  Self-loops, missing headers and
    out-of-range vertices raise :class:`ParseError` (offset = line number).
    """
    n = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(parts) < 3 or parts[1] not in ("edge", "edges", "col"):
                raise ParseError(f"bad problem line {line!r}", lineno)
            try:
                n = int(parts[2])
            except ValueError:
                raise ParseError(f"bad vertex count {parts[2]!r}", lineno) from None
            if n < 0:
                raise ParseError("negative vertex count", lineno)
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge line before problem line", lineno)
            if len(parts) != 3:
                raise ParseError(f"bad edge line {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"bad edge line {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex out of range 1..{n} in {line!r}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            edges.add((min(u, v) - 1, max(u, v) - 1))
        else:
            raise ParseError(f"unrecognised line {line!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge' header")
    return Graph(n, sorted(edges))


def encode_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
