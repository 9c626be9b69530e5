"""Simple labeled graphs with bitset adjacency.

Vertex sets are plain ``int`` bitmasks over vertex indices: bit ``i`` is set
when vertex ``i`` belongs to the set.  Deleting vertices from a graph is
normally expressed as a *live mask* over one host graph; `delete_vertices`
exists for the occasions where a standalone relabeled graph is wanted.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 26
EXHAUSTIVE_LIMIT = 7

VertexSet = int


class GraphParseError(ValueError):
    """Malformed graph text.  ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class VertexCapError(ValueError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbour bitset of ``v``.  ``labels`` holds display
    names (original edge-list tokens, or original indices after deletion).
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for w in bits(row):
                if not self.adj[w] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels length does not match n")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
        max_vertices: int | None = MAX_VERTICES,
    ) -> "Graph":
        if max_vertices is not None and n > max_vertices:
            raise VertexCapError(f"{n} vertices exceeds the cap of {max_vertices}")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels) if labels is not None else None)

    @classmethod
    def _unchecked(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        object.__setattr__(g, "labels", None)
        return g

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v] & ((1 << v) - 1))]

    @property
    def edge_count(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int, mask: int | None = None) -> int:
        row = self.adj[v] if mask is None else self.adj[v] & mask
        return popcount(row)

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj), self.labels)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def check_mask(G: Graph, mask: int) -> None:
    if mask < 0 or mask & ~G.full_mask:
        raise ValueError(f"vertex mask {mask:#b} is not a subset of V(G) (n={G.n})")


# -- text formats -----------------------------------------------------------

_COMMENT = re.compile(r"#.*")
_HEADER = re.compile(r"^vertices\s*:\s*(\S+)$", re.IGNORECASE)
_INT = re.compile(r"^\d+$")


def parse_edge_list(text: str, max_vertices: int | None = MAX_VERTICES) -> Graph:
    """Parse ``u v`` lines into a `Graph`.

    Integer endpoints are ordered numerically, symbolic ones by first
    appearance.  A ``vertices: k`` header adds the integer vertices
    ``0..k-1`` even when isolated.
    """
    edges: list[tuple[str, str]] = []
    declared = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _COMMENT.sub("", raw).strip()
        if not line:
            continue
        header = _HEADER.match(line)
        if header:
            if not _INT.match(header.group(1)):
                raise GraphParseError(f"bad vertex count {header.group(1)!r}", lineno)
            declared = max(declared, int(header.group(1)))
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = parts
        if u == v:
            raise ValueError(f"line {lineno}: self-loop at {u!r}")
        edges.append((u, v))

    tokens: list[str] = []
    seen: set[str] = set()
    for e in edges:
        for t in e:
            if t not in seen:
                seen.add(t)
                tokens.append(t)
    numeric = all(_INT.match(t) for t in tokens)
    if declared and not numeric:
        raise GraphParseError("a 'vertices:' header requires integer vertex names")
    if numeric:
        values = {int(t) for t in tokens} | set(range(declared))
        names = [str(v) for v in sorted(values)]
        index = {str(v): i for i, v in enumerate(sorted(values))}
        # tolerate zero-padded tokens such as "01"
        index.update({t: index[str(int(t))] for t in tokens})
    else:
        names = tokens
        index = {t: i for i, t in enumerate(tokens)}
    return Graph.from_edges(
        len(names),
        ((index[u], index[v]) for u, v in edges),
        labels=names,
        max_vertices=max_vertices,
    )


def to_edge_list(G: Graph) -> str:
    labels = [G.label(v) for v in range(G.n)]
    lines = []
    isolated = [v for v in range(G.n) if not G.adj[v]]
    if isolated:
        if not all(_INT.match(t) for t in labels):
            raise ValueError("isolated vertices with symbolic names cannot be written as an edge list")
        values = {int(t) for t in labels}
        k = 0
        while k in values:
            k += 1
        lines.append(f"vertices: {k}")
    lines.extend(f"{labels[u]} {labels[v]}" for u, v in G.edges())
    return "\n".join(lines) + ("\n" if lines else "")


def _graph6_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise GraphParseError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphParseError("truncated graph6 size field")
        chunk, offset = data[2:8], 8
    else:
        if len(data) < 4:
            raise GraphParseError("truncated graph6 size field")
        chunk, offset = data[1:4], 4
    n = 0
    for c in chunk:
        n = (n << 6) | (c - 63)
    return n, offset


def parse_graph6(text: str, max_vertices: int | None = MAX_VERTICES) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        raise GraphParseError("graph6 must be ASCII") from None
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise GraphParseError(f"invalid graph6 character {chr(c)!r} at offset {i}")
    n, offset = _graph6_size(data)
    if max_vertices is not None and n > max_vertices:
        raise VertexCapError(f"{n} vertices exceeds the cap of {max_vertices}")
    nbits = n * (n - 1) // 2
    body = data[offset:]
    if len(body) != (nbits + 5) // 6:
        raise GraphParseError(
            f"graph6 body has {len(body)} characters, expected {(nbits + 5) // 6} for n={n}"
        )
    value = 0
    for c in body:
        value = (value << 6) | (c - 63)
    pad = 6 * len(body) - nbits
    if value & ((1 << pad) - 1):
        raise GraphParseError("nonzero graph6 padding bits")
    value >>= pad
    edges = []
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                edges.append((i, j))
            k -= 1
    return Graph.from_edges(n, edges, max_vertices=max_vertices)


def to_graph6(G: Graph) -> str:
    n = G.n
    if n < 63:
        out = [n + 63]
    elif n < 258048:
        out = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        out = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bitlist = [G.adj[j] >> i & 1 for j in range(1, n) for i in range(j)]
    bitlist += [0] * (-len(bitlist) % 6)
    for k in range(0, len(bitlist), 6):
        chunk = 0
        for b in bitlist[k:k + 6]:
            chunk = (chunk << 1) | b
        out.append(chunk + 63)
    return bytes(out).decode("ascii")


# -- deletion and components ------------------------------------------------

def delete_vertices(G: Graph, S: int) -> Graph:
    """Induced subgraph on ``V(G) \\ S``, renumbered, keeping original labels."""
    check_mask(G, S)
    keep = [v for v in range(G.n) if not S >> v & 1]
    pos = {v: i for i, v in enumerate(keep)}
    adj = tuple(mask_of(pos[w] for w in bits(G.adj[v] & ~S)) for v in keep)
    return Graph(len(keep), adj, tuple(G.label(v) for v in keep))


def component_of(G: Graph, start: int, mask: int) -> int:
    """Vertex mask of the component of ``G[mask]`` containing ``start``."""
    adj = G.adj
    comp = frontier = 1 << start
    while frontier:
        reach = 0
        for v in bits(frontier):
            reach |= adj[v]
        frontier = reach & mask & ~comp
        comp |= frontier
    return comp


def components(G: Graph, mask: int | None = None) -> list[int]:
    """Components of ``G[mask]`` as vertex masks, ordered by least vertex."""
    if mask is None:
        mask = G.full_mask
    else:
        check_mask(G, mask)
    out = []
    rest = mask
    while rest:
        comp = component_of(G, (rest & -rest).bit_length() - 1, rest)
        out.append(comp)
        rest &= ~comp
    return out


def odd_component_count(G: Graph, mask: int | None = None) -> int:
    return sum(popcount(c) & 1 for c in components(G, mask))


# -- corpora ----------------------------------------------------------------

def _pairs(n: int) -> list[tuple[int, int]]:
    # graph6 column order, so the graphs on n vertices extend those on n-1
    return [(i, j) for j in range(1, n) for i in range(j)]


def enumerate_labeled_graphs(
    n: int,
    *,
    random_count: int | None = None,
    edge_probability: float = 0.5,
    seed: int = 0,
) -> Iterator[Graph]:
    """All ``2^(n(n-1)/2)`` labeled graphs on ``n`` vertices, or a seeded
    random sample of ``random_count`` G(n, p) graphs."""
    if n < 0:
        raise ValueError("negative vertex count")
    pairs = _pairs(n)
    if random_count is not None:
        rng = random.Random(seed)
        for _ in range(random_count):
            yield Graph.from_edges(n, [e for e in pairs if rng.random() < edge_probability])
        return
    if n > EXHAUSTIVE_LIMIT:
        raise ValueError(f"exhaustive enumeration is limited to n <= {EXHAUSTIVE_LIMIT}; use random_count")
    # per-pair adjacency bits, combined incrementally over the edge code
    contrib = [(1 << i, 1 << j) for i, j in pairs]
    for code in range(1 << len(pairs)):
        adj = [0] * n
        c, k = code, 0
        while c:
            if c & 1:
                i, j = pairs[k]
                bi, bj = contrib[k]
                adj[i] |= bj
                adj[j] |= bi
            c >>= 1
            k += 1
        yield Graph._unchecked(n, tuple(adj))


def random_graph_with_edges(n: int, m: int, rng: random.Random) -> Graph:
    """Uniform random labeled graph with exactly ``m`` edges."""
    return Graph.from_edges(n, rng.sample(_pairs(n), m))
