"""Chordality, elimination orderings and clique-tree decompositions.

A chordal graph is a clique-sum of complete graphs, and its clique
polynomial can be read straight off any clique tree:

    C(G, x) = sum_i (1+x)^{n_i} - sum_j (1+x)^{l_j}

with n_i the summand (maximal clique) sizes and l_j the separator sizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, VertexSet, is_clique, is_connected
from .poly import IntPolynomial, binomial_power


@dataclass(frozen=True)
class EliminationOrdering:
    """Vertex order where each vertex's later neighbours form a clique."""

    order: tuple[int, ...]
    later_neighbor_counts: tuple[int, ...]  # indexed by vertex, not position

    @property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}


@dataclass(frozen=True)
class NotChordal:
    """Rejection witness: ``vertex`` has later neighbours ``pair`` that are not adjacent."""

    order: tuple[int, ...]
    vertex: int
    pair: tuple[int, int]


def later_neighbors(g: Graph, order: Sequence[int]) -> list[tuple[int, ...]]:
    pos = {v: i for i, v in enumerate(order)}
    return [tuple(sorted((w for w in g.adjacency[v] if pos[w] > pos[v]), key=pos.__getitem__))
            for v in range(g.n)]


def _find_violation(g: Graph, order: Sequence[int]) -> tuple[int, tuple[int, int]] | None:
    later = later_neighbors(g, order)
    for v in order:
        nb = later[v]
        for i, a in enumerate(nb):
            for b in nb[i + 1:]:
                if not g.has_edge(a, b):
                    return v, (min(a, b), max(a, b))
    return None


def check_peo(g: Graph, order: Sequence[int]) -> EliminationOrdering:
    """Validate ``order`` as a perfect elimination ordering of g."""
    if sorted(order) != list(range(g.n)):
        raise ValueError("ordering is not a permutation of the vertices")
    bad = _find_violation(g, order)
    if bad is not None:
        v, (a, b) = bad
        raise ValueError(f"not a perfect elimination ordering: vertex {v} has non-adjacent later neighbours {a}, {b}")
    later = later_neighbors(g, order)
    return EliminationOrdering(tuple(order), tuple(len(x) for x in later))


def maximum_cardinality_search(g: Graph, start: int | None = None) -> EliminationOrdering | NotChordal:
    """MCS; the reverse of the visiting order is a PEO iff g is chordal.

    Visits the unvisited vertex with most visited neighbours, smallest label
    on ties; ``start`` forces the first visit (it ends up last in the PEO).
    Works component by component on disconnected input.
    """
    weight = [0] * g.n
    visited = [False] * g.n
    visit: list[int] = []
    for step in range(g.n):
        if step == 0 and start is not None:
            if not 0 <= start < g.n:
                raise ValueError(f"start vertex {start} out of range")
            v = start
        else:
            v = max((u for u in range(g.n) if not visited[u]), key=lambda u: (weight[u], -u))
        visited[v] = True
        visit.append(v)
        for w in g.adjacency[v]:
            if not visited[w]:
                weight[w] += 1
    order = tuple(reversed(visit))
    bad = _find_violation(g, order)
    if bad is not None:
        return NotChordal(order, bad[0], bad[1])
    later = later_neighbors(g, order)
    return EliminationOrdering(order, tuple(len(x) for x in later))


def is_chordal(g: Graph) -> bool:
    return isinstance(maximum_cardinality_search(g), EliminationOrdering)


def peo_or_raise(g: Graph) -> EliminationOrdering:
    res = maximum_cardinality_search(g)
    if isinstance(res, NotChordal):
        raise ValueError(f"graph is not chordal: vertex {res.vertex} sees non-adjacent {res.pair}")
    return res


# --- decompositions -------------------------------------------------------

@dataclass(frozen=True)
class CliqueDecomposition:
    summands: tuple[VertexSet, ...]
    separators: tuple[VertexSet, ...]
    tree_edges: tuple[tuple[int, int], ...]

    @property
    def summand_sizes(self) -> list[int]:
        return [len(s) for s in self.summands]

    @property
    def separator_sizes(self) -> list[int]:
        return [len(s) for s in self.separators]

    def to_json(self) -> dict:
        return {
            "summands": [list(s) for s in self.summands],
            "separators": [list(s) for s in self.separators],
            "tree_edges": [list(e) for e in self.tree_edges],
        }

    @classmethod
    def from_json(cls, data: dict) -> CliqueDecomposition:
        return cls(
            tuple(tuple(int(v) for v in s) for s in data["summands"]),
            tuple(tuple(int(v) for v in s) for s in data["separators"]),
            tuple((int(a), int(b)) for a, b in data["tree_edges"]),
        )

    def violations(self, g: Graph | None = None) -> list[str]:
        """Every broken structural invariant, as text; empty when valid."""
        out = []
        r = len(self.summands)
        if len(self.separators) != len(self.tree_edges):
            out.append("separators and tree_edges differ in length")
        if r and len(self.tree_edges) != r - 1:
            out.append(f"{len(self.tree_edges)} tree edges for {r} summands")
        parent = list(range(r))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (i, j), sep in zip(self.tree_edges, self.separators):
            if not (0 <= i < r and 0 <= j < r) or i == j:
                out.append(f"bad tree edge ({i}, {j})")
                continue
            ri, rj = find(i), find(j)
            if ri == rj:
                out.append(f"tree edge ({i}, {j}) closes a cycle")
            parent[ri] = rj
            a, b = set(self.summands[i]), set(self.summands[j])
            if set(sep) != a & b:
                out.append(f"separator {sep} != summand intersection on ({i}, {j})")
            if not (len(sep) < len(a) and len(sep) < len(b)):
                out.append(f"separator {sep} not strictly smaller than both summands ({i}, {j})")
        # running intersection: summands holding v induce a connected subtree
        verts = sorted({v for s in self.summands for v in s})
        for v in verts:
            holders = {i for i, s in enumerate(self.summands) if v in s}
            inner = [(i, j) for i, j in self.tree_edges if i in holders and j in holders]
            if len(inner) != len(holders) - 1:
                out.append(f"vertex {v} breaks running intersection")
        if g is not None:
            for s in self.summands:
                if not is_clique(g, s):
                    out.append(f"summand {s} is not a clique")
            covered = set()
            for s in self.summands:
                covered.update((a, b) for a in s for b in s if a < b)
            if covered != set(g.edges):
                out.append("summands do not cover exactly the edges of g")
            if set(verts) != set(range(g.n)):
                out.append("summands do not cover every vertex")
        return out


def maximal_cliques_from_peo(g: Graph, peo: EliminationOrdering) -> list[VertexSet]:
    """Maximal cliques of a chordal graph: the maximal sets {v} + later(v)."""
    later = later_neighbors(g, peo.order)
    cands = {tuple(sorted((v,) + later[v])) for v in range(g.n)}
    sets = [frozenset(c) for c in cands]
    maximal = [c for c, s in zip(cands, sets) if not any(s < t for t in sets)]
    return sorted(maximal)


def clique_tree(g: Graph, peo: EliminationOrdering) -> CliqueDecomposition:
    """Clique tree as a maximum-weight spanning tree of the clique-intersection graph.

    Summands are sorted lexicographically; equal-weight edges are taken in
    lexicographic (i, j) order.
    """
    if not is_connected(g):
        raise ValueError("clique_tree needs a connected graph")
    check_peo(g, peo.order)
    summands = maximal_cliques_from_peo(g, peo)
    sets = [set(s) for s in summands]
    r = len(summands)
    cand = []
    for i in range(r):
        for j in range(i + 1, r):
            w = len(sets[i] & sets[j])
            if w:
                cand.append((-w, i, j))
    cand.sort()
    parent = list(range(r))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = []
    for _, i, j in cand:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            chosen.append((i, j))
    chosen.sort()
    seps = tuple(tuple(sorted(sets[i] & sets[j])) for i, j in chosen)
    return CliqueDecomposition(tuple(summands), seps, tuple(chosen))


def closed_form_clique_polynomial(d: CliqueDecomposition) -> IntPolynomial:
    total = IntPolynomial()
    for s in d.summands:
        total = total + binomial_power(len(s))
    for q in d.separators:
        total = total - binomial_power(len(q))
    return total


def pasting_polynomial(c1: IntPolynomial, c2: IntPolynomial, i: int) -> IntPolynomial:
    """Clique polynomial of two graphs glued along a shared i-clique."""
    if i < 1:
        raise ValueError("separator clique size must be at least 1")
    return c1 + c2 - binomial_power(i)


def fast_chordal_polynomial(g: Graph, peo: EliminationOrdering) -> IntPolynomial:
    """1 + sum_v x (1+x)^{d_v}, d_v = number of later neighbours of v.

    Every clique has a unique earliest vertex, and in a PEO the rest of the
    clique is any subset of that vertex's later neighbours.
    """
    checked = check_peo(g, peo.order)
    x = IntPolynomial.of(0, 1)
    total = IntPolynomial.of(1)
    for d in checked.later_neighbor_counts:
        total = total + x * binomial_power(d)
    return total


def decomposition_multiplicity(d: CliqueDecomposition) -> int:
    """Predicted multiplicity of -1: the single summand size, else the smallest separator."""
    if not d.summands:
        return 0
    if not d.separators:
        return len(d.summands[0])
    return min(len(q) for q in d.separators)


def paste_graphs(g1: Graph, q1: Sequence[int], g2: Graph, q2: Sequence[int]) -> Graph:
    """Glue g2 onto g1 by identifying q2[k] with q1[k].

    Both lists must be cliques of equal size. g1 keeps its labels; the
    remaining vertices of g2 follow in increasing order.
    """
    if len(q1) != len(q2):
        raise ValueError("shared cliques differ in size")
    if len(set(q1)) != len(q1) or len(set(q2)) != len(q2):
        raise ValueError("repeated vertex in shared clique")
    if not (is_clique(g1, q1) and is_clique(g2, q2)):
        raise ValueError("pasting requires cliques on both sides")
    label = dict(zip(q2, q1))
    nxt = g1.n
    for v in range(g2.n):
        if v not in label:
            label[v] = nxt
            nxt += 1
    edges = set(g1.edges)
    for a, b in g2.edges:
        u, w = label[a], label[b]
        edges.add((min(u, w), max(u, w)))
    return Graph(nxt, frozenset(edges))
