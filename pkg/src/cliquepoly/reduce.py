"""Spanning-tree reduction of a K4-free chordal graph to a triangle-free one.

For connected K4-free chordal G with n vertices and m edges,

    C(G, x) = (1 + x) * Q(x),   Q(x) = 1 + (n-1) x + (m-n+1) x^2,

and Q is itself the clique polynomial of a triangle-free graph: delete the
edges of a spanning tree rooted at v (giving G_hat, where v is isolated),
then delete v (giving G_tilde). The default tree is breadth-first with
ascending neighbour order. Arbitrary spanning trees do not always work;
see ``SUN3_BAD_TREE``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .chordal import is_chordal
from .clique import clique_polynomial, count_cliques, forbidden_clique_check
from .gen import SplitMix64
from .graph import Edge, Graph, delete_edges, delete_vertex, is_connected
from .poly import X_PLUS_ONE, IntPolynomial


class PreconditionError(ValueError):
    """Input outside the class a theorem speaks about.

    ``reason`` is one of ``not_connected``, ``not_chordal``, ``has_k4``.
    """

    def __init__(self, reason: str, detail: str = "") -> None:
        self.reason = reason
        super().__init__(f"{reason}: {detail}" if detail else reason)


def require_k4_free_chordal(g: Graph, *, chordal: bool = True) -> None:
    if not is_connected(g):
        raise PreconditionError("not_connected", f"graph with n={g.n} is not connected")
    if chordal and not is_chordal(g):
        raise PreconditionError("not_chordal", "graph has a chordless cycle of length >= 4")
    if not forbidden_clique_check(g, 4):
        raise PreconditionError("has_k4", "graph contains K4")


def quadratic_factor(n: int, m: int) -> IntPolynomial:
    """1 + (n-1) x + (m-n+1) x^2."""
    if n < 1:
        raise ValueError("need n >= 1")
    if m < n - 1:
        raise ValueError(f"m={m} < n-1={n - 1}: a connected graph has at least n-1 edges")
    return IntPolynomial.of(1, n - 1, m - n + 1)


def bfs_spanning_tree(g: Graph, root: int) -> list[Edge]:
    """Tree edges (sorted pairs) in discovery order."""
    seen = {root}
    queue = deque([root])
    tree = []
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if y not in seen:
                seen.add(y)
                tree.append((min(x, y), max(x, y)))
                queue.append(y)
    if len(seen) != g.n:
        raise PreconditionError("not_connected", "spanning tree does not reach every vertex")
    return tree


def random_spanning_tree(g: Graph, root: int, seed: int) -> list[Edge]:
    """Seeded random spanning tree containing every edge at ``root``.

    Kruskal over the root's star first, then a shuffled order of the rest;
    keeping the whole star is what leaves the root isolated in G_hat.
    """
    rng = SplitMix64(seed)
    rest = [e for e in g.sorted_edges() if root not in e]
    rng.shuffle(rest)
    edges = [(min(root, w), max(root, w)) for w in g.adjacency[root]] + rest
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree = []
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            tree.append((u, v))
    if len(tree) != g.n - 1:
        raise PreconditionError("not_connected", "spanning tree does not reach every vertex")
    return sorted(tree)


def _is_spanning_tree(g: Graph, tree: list[Edge]) -> bool:
    if len(tree) != g.n - 1 or not all(e in g.edges for e in tree):
        return False
    return is_connected(Graph(g.n, frozenset(tree)))


@dataclass(frozen=True)
class ReductionTrace:
    graph: Graph
    root: int
    tree_edges: tuple[Edge, ...]
    g_hat: Graph
    g_tilde: Graph
    q: IntPolynomial
    violations: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        def el(h: Graph) -> dict:
            return {"n": str(h.n), "edges": [[str(u), str(v)] for u, v in h.sorted_edges()]}

        return {
            "root": str(self.root),
            "input": el(self.graph),
            "tree": {"n": str(self.graph.n), "edges": [[str(u), str(v)] for u, v in self.tree_edges]},
            "g_hat": el(self.g_hat),
            "g_tilde": el(self.g_tilde),
            "q": self.q.to_json(),
            "q_text": str(self.q),
            "violations": list(self.violations),
        }


def _trace_violations(g: Graph, root: int, tree: list[Edge], g_hat: Graph, g_tilde: Graph, q: IntPolynomial) -> list[str]:
    out = []
    if not _is_spanning_tree(g, tree):
        out.append("tree_edges are not a spanning tree")
    if g_hat.degree(root) != 0:
        out.append("root is not isolated in g_hat")
    cv = count_cliques(g_tilde)
    if cv[3]:
        out.append(f"g_tilde has {cv[3]} triangles")
    if g_tilde.n != g.n - 1:
        out.append("g_tilde has the wrong vertex count")
    if g_tilde.m != g.m - g.n + 1:
        out.append("g_tilde has the wrong edge count")
    if clique_polynomial(g_tilde) != q:
        out.append("C(g_tilde) differs from Q")
    if clique_polynomial(g) != X_PLUS_ONE * q:
        out.append("C(g) differs from (1+x) Q")
    return out


def triangle_free_reduction(g: Graph, root: int = 0, tree: list[Edge] | None = None) -> ReductionTrace:
    """Run the reduction; ``tree`` defaults to the BFS tree from ``root``.

    Every invariant is re-checked; failures land in ``violations`` instead
    of being raised, so a bad custom tree is reported rather than hidden.
    """
    if not 0 <= root < max(g.n, 1):
        raise ValueError(f"root {root} out of range for n={g.n}")
    require_k4_free_chordal(g)
    if tree is None:
        tree = bfs_spanning_tree(g, root)
    tree = [(min(u, v), max(u, v)) for u, v in tree]
    g_hat = delete_edges(g, tree)
    g_tilde = delete_vertex(g_hat, root)
    q = quadratic_factor(g.n, g.m)
    bad = _trace_violations(g, root, tree, g_hat, g_tilde, q)
    return ReductionTrace(g, root, tuple(tree), g_hat, g_tilde, q, tuple(bad))


def verify_euler_identity(g: Graph) -> bool:
    """1 - n + m - t == 0, t the triangle count; i.e. C(g, -1) == 0."""
    require_k4_free_chordal(g)
    t = count_cliques(g)[3]
    return 1 - g.n + g.m - t == 0


# The 3-sun (triangle 0-1-2 with an ear on each side) and a spanning tree
# rooted at 3 that misses every edge of the central triangle: G_tilde keeps
# a triangle.
SUN3 = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (1, 4), (2, 4), (0, 5), (2, 5)])
SUN3_BAD_TREE = [(0, 3), (1, 3), (1, 4), (2, 4), (2, 5)]
