"""Simple undirected graphs on dense vertex labels ``0..n-1``.

Graphs are immutable. Every operation that removes vertices relabels the
survivors order-preservingly, so reports and golden files stay stable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

Edge = tuple[int, int]
VertexSet = tuple[int, ...]

GRAPH6_HEADER = ">>graph6<<"


class GraphParseError(ValueError):
    """Raised for malformed edge-list or graph6 input."""


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"negative vertex count {self.n}")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) not normalised or out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        normed = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            normed.add(_norm_edge(u, v))
        return cls(n, frozenset(normed))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def _check_members(g: Graph, u: Iterable[int]) -> VertexSet:
    members = tuple(sorted(set(u)))
    for v in members:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    return members


def induced_subgraph(g: Graph, u: Iterable[int]) -> Graph:
    members = _check_members(g, u)
    index = {v: i for i, v in enumerate(members)}
    edges = [(index[a], index[b]) for a, b in g.edges if a in index and b in index]
    return Graph(len(members), frozenset(edges))


def is_clique(g: Graph, u: Iterable[int]) -> bool:
    members = _check_members(g, u)
    nbrs = g.neighbor_sets
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if b not in nbrs[a]:
                return False
    return True


def delete_edges(g: Graph, edges: Iterable[Sequence[int]]) -> Graph:
    doomed = set()
    for e in edges:
        key = _norm_edge(int(e[0]), int(e[1]))
        if key not in g.edges:
            raise ValueError(f"edge {key} not in graph")
        doomed.add(key)
    return Graph(g.n, g.edges - doomed)


def delete_vertex(g: Graph, v: int) -> Graph:
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    return induced_subgraph(g, [u for u in range(g.n) if u != v])


def components(g: Graph) -> list[VertexSet]:
    """Connected components, each sorted, ordered by smallest member."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        out.append(tuple(sorted(comp)))
    return out


def is_connected(g: Graph) -> bool:
    # n = 0 counts as disconnected: there is nothing to root a tree at
    return g.n > 0 and len(components(g)) == 1


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = [(u + g.n, v + g.n) for u, v in h.edges]
    return Graph(g.n + h.n, g.edges | frozenset(shifted))


# --- named graphs ---------------------------------------------------------

def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def k4_plus() -> Graph:
    """K4 with one pendant edge hanging off vertex 3."""
    return Graph.from_edges(5, list(complete_graph(4).edges) + [(3, 4)])


def worked_example_graph() -> Graph:
    """The six-vertex worked example: four triangles around a hub.

    Labels: r=0, top-left=1, hub=2, bottom-left=3, bottom-right=4,
    top-right=5.
    """
    return Graph.from_edges(6, [
        (0, 1), (1, 2), (0, 2),
        (0, 3), (2, 3),
        (2, 5), (1, 5),
        (2, 4), (3, 4),
    ])


# --- text formats ---------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` then ``u v`` lines; ``#`` lines and blank lines are skipped."""
    n = None
    edges: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1:
                raise GraphParseError(f"line {lineno}: expected vertex count, got {line!r}")
            try:
                n = int(parts[0])
            except ValueError:
                raise GraphParseError(f"line {lineno}: bad vertex count {parts[0]!r}") from None
            if n < 0:
                raise GraphParseError(f"line {lineno}: negative vertex count")
            continue
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if u == v:
            raise GraphParseError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"line {lineno}: vertex out of range [0, {n})")
        edges.add(_norm_edge(u, v))
    if n is None:
        raise GraphParseError("empty input: no vertex count")
    return Graph(n, frozenset(edges))


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def _graph6_size(data: str) -> tuple[int, int]:
    """Return (n, chars consumed) for the size prefix of a graph6 body."""
    def val(i: int) -> int:
        if i >= len(data):
            raise GraphParseError("truncated graph6 size field")
        c = ord(data[i]) - 63
        if not 0 <= c <= 63:
            raise GraphParseError(f"bad graph6 character {data[i]!r}")
        return c

    first = val(0)
    if first < 63:
        return first, 1
    if val(1) < 63:
        n = 0
        for i in range(1, 4):
            n = (n << 6) | val(i)
        return n, 4
    n = 0
    for i in range(2, 8):
        n = (n << 6) | val(i)
    return n, 8


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    if not line:
        raise GraphParseError("empty graph6 input")
    n, pos = _graph6_size(line)
    body = line[pos:]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        kind = "truncated" if len(body) < need else "overlong"
        raise GraphParseError(f"{kind} graph6 bit vector: {len(body)} chars for n={n}, expected {need}")
    bits = 0
    for ch in body:
        c = ord(ch) - 63
        if not 0 <= c <= 63:
            raise GraphParseError(f"bad graph6 character {ch!r}")
        bits = (bits << 6) | c
    bits >>= need * 6 - nbits
    edges = []
    k = nbits - 1
    # upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    for v in range(1, n):
        for u in range(v):
            if (bits >> k) & 1:
                edges.append((u, v))
            k -= 1
    return Graph(n, frozenset(edges))


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = chr(n + 63)
    elif n < 258048:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        head = "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if (u, v) in g.edges else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for i in range(0, len(bits), 6):
        c = 0
        for b in bits[i:i + 6]:
            c = (c << 1) | b
        body.append(chr(c + 63))
    return head + "".join(body)


def iter_graph6_lines(text: str):
    """Yield ``(lineno, Graph)`` for every non-blank line of a graph6 stream."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield lineno, parse_graph6(line)
        except GraphParseError as exc:
            raise GraphParseError(f"line {lineno}: {exc}") from None
