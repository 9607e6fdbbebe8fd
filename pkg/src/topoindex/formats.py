"""Readers and writers for graph6 (short form) and plain edge lists.

graph6 layout: one byte ``n + 63`` followed by the upper triangle of the
adjacency matrix in column order ``(0,1), (0,2), (1,2), (0,3), ...``,
packed six bits per byte (most significant first), zero padded, each
group offset by 63.  Only ``n <= 62`` is supported.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph, GraphError

GRAPH6_HEADER = ">>graph6<<"
MAX_GRAPH6_N = 62


class FormatError(ValueError):
    """Malformed input.  ``offset`` is a byte offset (graph6) or line number."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at {offset})"
        super().__init__(message)


def _g6_value(text: str, i: int) -> int:
    c = ord(text[i])
    if not 63 <= c <= 126:
        raise FormatError(f"byte {c!r} outside graph6 range 63..126", i)
    return c - 63


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (an optional ``>>graph6<<`` header is allowed)."""
    s = text.strip()
    base = 0
    if s.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
        s = s[base:]
    if not s:
        raise FormatError("empty graph6 string", base)
    n = _g6_value(s, 0)
    if n == 63:
        raise FormatError("long-form graph6 (n > 62) is not supported", base)
    if n == 0:
        raise FormatError("graph6 encodes a graph with no vertices", base)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) != 1 + nbytes:
        raise FormatError(
            f"expected {1 + nbytes} bytes for n={n}, got {len(s)}", base + min(len(s), 1 + nbytes)
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = _g6_value(s, 1 + k // 6)
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6:
        last = _g6_value(s, nbytes)
        if last & ((1 << (6 - nbits % 6)) - 1):
            raise FormatError("nonzero padding bits", base + nbytes)
    return Graph(n, tuple(edges))


def write_graph6(graph: Graph) -> str:
    n = graph.n
    if n > MAX_GRAPH6_N:
        raise FormatError(f"graph6 short form holds at most {MAX_GRAPH6_N} vertices, got {n}")
    bits = [0] * (n * (n - 1) // 2)
    for u, v in graph.edges:
        # u < v; column v starts at bit v(v-1)/2
        bits[v * (v - 1) // 2 + u] = 1
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based).

    Blank lines and ``#`` comments are ignored.  Errors carry the 1-based
    line number.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line))
    if not rows:
        raise FormatError("empty edge list", 1)
    lineno, header = rows[0]
    try:
        n, m = (int(t) for t in header.split())
    except ValueError:
        raise FormatError(f"header must be 'n m', got {header!r}", lineno) from None
    if n < 1 or m < 0:
        raise FormatError(f"invalid header {header!r}", lineno)
    body = rows[1:]
    if len(body) != m:
        raise FormatError(f"header declares {m} edges, found {len(body)}", lineno)
    seen: set[tuple[int, int]] = set()
    for lineno, line in body:
        try:
            u, v = (int(t) for t in line.split())
        except ValueError:
            raise FormatError(f"edge line must be 'u v', got {line!r}", lineno) from None
        if u == v:
            raise FormatError(f"loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex out of range 0..{n - 1} in {line!r}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"duplicate edge {key}", lineno)
        seen.add(key)
    return Graph(n, tuple(seen))


def write_edge_list(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def _looks_like_edge_list(text: str) -> bool:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            parts = line.split()
            return len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts)
    return False


def read_graphs(text: str, fmt: str = "auto") -> list[Graph]:
    """Parse a whole input document.

    ``fmt="graph6"`` reads one graph per non-blank line; ``"edgelist"``
    reads a single edge-list graph; ``"auto"`` picks by the first line.
    A graph6 error is re-raised with the 1-based line number prefixed.
    """
    if fmt == "auto":
        fmt = "edgelist" if _looks_like_edge_list(text) else "graph6"
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    if fmt != "graph6":
        raise ValueError(f"unknown input format {fmt!r}")
    graphs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            graphs.append(parse_graph6(line))
        except (FormatError, GraphError) as exc:
            raise FormatError(f"line {lineno}: {exc}") from exc
    return graphs


def iter_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        if line.strip():
            yield parse_graph6(line)


def dump_graph6(graphs: Iterable[Graph], fh: TextIO) -> None:
    for g in graphs:
        fh.write(write_graph6(g) + "\n")
