"""Clique counting and the clique polynomial, computed from first principles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Graph
from .poly import IntPolynomial


@dataclass(frozen=True)
class CliqueVector:
    """counts[k-1] is the number of k-cliques, k = 1..omega."""

    counts: tuple[int, ...]

    @property
    def omega(self) -> int:
        return len(self.counts)

    def __getitem__(self, k: int) -> int:
        """Number of k-cliques (0 beyond omega)."""
        return self.counts[k - 1] if 1 <= k <= len(self.counts) else 0


def degeneracy_order(g: Graph) -> list[int]:
    """Repeatedly remove a minimum-degree vertex (smallest label on ties)."""
    deg = [g.degree(v) for v in range(g.n)]
    removed = [False] * g.n
    order = []
    for _ in range(g.n):
        v = min((u for u in range(g.n) if not removed[u]), key=lambda u: (deg[u], u))
        removed[v] = True
        order.append(v)
        for w in g.adjacency[v]:
            if not removed[w]:
                deg[w] -= 1
    return order


def _forward_neighbors(g: Graph) -> list[frozenset[int]]:
    order = degeneracy_order(g)
    pos = {v: i for i, v in enumerate(order)}
    return [frozenset(w for w in g.adjacency[v] if pos[w] > pos[v]) for v in range(g.n)]


def iter_cliques(g: Graph, max_size: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every nonempty clique exactly once, as a sorted vertex tuple.

    Ordered expansion: a clique is grown only by common neighbours that come
    later in the degeneracy order, so each one has a unique generation path.
    """
    fwd = _forward_neighbors(g)

    def grow(clique: list[int], cand: frozenset[int]):
        yield tuple(sorted(clique))
        if max_size is not None and len(clique) >= max_size:
            return
        for w in sorted(cand):
            clique.append(w)
            yield from grow(clique, cand & fwd[w])
            clique.pop()

    for v in range(g.n):
        yield from grow([v], fwd[v])


def count_cliques(g: Graph) -> CliqueVector:
    fwd = _forward_neighbors(g)
    counts: list[int] = []

    def grow(depth: int, cand: frozenset[int]) -> None:
        if len(counts) < depth:
            counts.append(0)
        counts[depth - 1] += 1
        for w in cand:
            grow(depth + 1, cand & fwd[w])

    for v in range(g.n):
        grow(1, fwd[v])
    return CliqueVector(tuple(counts))


def clique_polynomial(g: Graph) -> IntPolynomial:
    return IntPolynomial((1,) + count_cliques(g).counts)


def forbidden_clique_check(g: Graph, t: int) -> bool:
    """True iff g has no K_t, i.e. omega(g) < t."""
    if t < 2:
        raise ValueError("forbidden clique size must be at least 2")
    fwd = _forward_neighbors(g)

    def reaches(depth: int, cand: frozenset[int]) -> bool:
        if depth >= t:
            return True
        if depth + len(cand) < t:
            return False
        return any(reaches(depth + 1, cand & fwd[w]) for w in cand)

    return not any(reaches(1, fwd[v]) for v in range(g.n))


def cliques_of_size(g: Graph, k: int) -> list[tuple[int, ...]]:
    return [c for c in iter_cliques(g, max_size=k) if len(c) == k]
