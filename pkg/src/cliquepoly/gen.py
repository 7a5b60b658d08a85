"""Seeded generators for the graph families under study.

Randomness comes from SplitMix64 (Steele, Lea & Flood 2014) with its
published constants, so a (config, seed) pair names the same graph in any
language. Bounded draws use rejection sampling to stay unbiased.

The chordal pasting sampler is *not* uniform over chordal graphs.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterable, Iterator, Sequence

from .chordal import CliqueDecomposition, is_chordal
from .clique import forbidden_clique_check
from .graph import Graph, complete_graph, is_connected, iter_graph6_lines

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        # reject the low 2^64 mod bound values so every residue is equally likely
        threshold = (1 << 64) % bound
        while True:
            x = self.next_u64()
            if x >= threshold:
                return x % bound

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        return lo + self.below(hi - lo + 1)

    def choice(self, seq: Sequence):
        return seq[self.below(len(seq))]

    def sample(self, seq: Sequence, k: int) -> list:
        """k distinct items, partial Fisher-Yates; order is the draw order."""
        pool = list(seq)
        if not 0 <= k <= len(pool):
            raise ValueError("sample size out of range")
        for i in range(k):
            j = i + self.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def bernoulli(self, num: int, den: int) -> bool:
        return self.below(den) < num

    def split(self) -> SplitMix64:
        return SplitMix64(self.next_u64())


def derive_seed(base: int, index: int) -> int:
    """Seed for the index-th item of a seeded batch."""
    return SplitMix64((base + index * GOLDEN_GAMMA) & MASK64).next_u64()


class ConfigError(ValueError):
    """Generator configuration that cannot be satisfied."""


FAMILIES = ("complete", "chordal_pasting", "k_tree", "catalog_filter", "random_connected")


@dataclass
class GeneratorConfig:
    family: str = "chordal_pasting"
    n: int | None = None
    n_min: int | None = None
    n_max: int | None = None
    k: int = 3
    summands: int = 5
    max_summand_size: int = 4
    min_separator: int = 1
    clique_cap: int | None = None  # forbid K_t: summands must have size < t
    max_vertices: int | None = None
    edge_prob: tuple[int, int] = (1, 2)
    predicates: list[str] = field(default_factory=list)
    catalog: str | None = None
    seed: int = 0
    count: int = 1

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ConfigError(f"unknown family {self.family!r}")
        self.edge_prob = tuple(self.edge_prob)

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, data: dict | str) -> GeneratorConfig:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(**data)


# --- k-trees ---------------------------------------------------------------

def generate_k_tree(k: int, n: int, seed: int) -> Graph:
    g, _ = generate_k_tree_with_decomposition(k, n, seed)
    return g


def generate_k_tree_with_decomposition(k: int, n: int, seed: int) -> tuple[Graph, CliqueDecomposition]:
    """Start from K_{k+1}; attach each new vertex to a uniformly chosen k-clique."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if n <= k:
        raise ValueError(f"a {k}-tree needs more than {k} vertices")
    rng = SplitMix64(seed)
    base = tuple(range(k + 1))
    edges = set(complete_graph(k + 1).edges)
    kcliques = [tuple(c) for c in itertools.combinations(base, k)]
    summands = [base]
    seps, tree = [], []
    owner = {c: 0 for c in kcliques}  # k-clique -> a summand containing it
    for v in range(k + 1, n):
        host = rng.choice(kcliques)
        edges.update((u, v) for u in host)
        new_summand = host + (v,)
        summands.append(new_summand)
        seps.append(host)
        tree.append((owner[host], len(summands) - 1))
        for drop in range(k):
            c = host[:drop] + host[drop + 1:] + (v,)
            kcliques.append(c)
            owner[c] = len(summands) - 1
    return Graph(n, frozenset(edges)), CliqueDecomposition(tuple(summands), tuple(seps), tuple(tree))


# --- random pastings ---------------------------------------------------------

def generate_chordal_pasting(config: GeneratorConfig, seed: int | None = None) -> tuple[Graph, CliqueDecomposition]:
    """Paste complete graphs one at a time along cliques of placed summands.

    Each new summand of size s is glued along a random l-subset of one
    placed summand, with min_separator <= l < s and l smaller than the
    host, so the as-built summands are exactly the maximal cliques.
    """
    seed = config.seed if seed is None else seed
    rng = SplitMix64(seed)
    top = config.max_summand_size
    if config.clique_cap is not None:
        if config.clique_cap < 2:
            raise ConfigError("clique cap below 2 forbids every vertex")
        top = min(top, config.clique_cap - 1)
    if top < 1:
        raise ConfigError("max_summand_size must be at least 1")
    if config.summands < 1:
        raise ConfigError("need at least one summand")
    lo_sep = max(1, config.min_separator)
    if config.summands > 1 and top < lo_sep + 1:
        raise ConfigError(
            f"cannot paste {config.summands} summands: sizes <= {top} leave no room for separators >= {lo_sep}")
    limit = config.max_vertices

    first = rng.randint(lo_sep + 1 if config.summands > 1 else 1, top)
    if limit is not None and first > limit:
        raise ConfigError("max_vertices smaller than the first summand")
    summands: list[tuple[int, ...]] = [tuple(range(first))]
    n = first
    seps: list[tuple[int, ...]] = []
    tree: list[tuple[int, int]] = []
    edges = set(complete_graph(first).edges)
    for _ in range(config.summands - 1):
        hosts = [i for i, s in enumerate(summands) if len(s) > lo_sep]
        if not hosts:
            break
        h = rng.choice(hosts)
        host = summands[h]
        # separator l in [lo_sep, min(|host|-1, top-1)], summand s in [l+1, top]
        l = rng.randint(lo_sep, min(len(host) - 1, top - 1))
        s = rng.randint(l + 1, top)
        if limit is not None:
            if n + 1 > limit:
                break
            s = min(s, l + limit - n)
        sep = tuple(sorted(rng.sample(host, l)))
        fresh = tuple(range(n, n + s - l))
        n += s - l
        summand = tuple(sorted(sep + fresh))
        edges.update((a, b) for a in summand for b in summand if a < b)
        summands.append(summand)
        seps.append(sep)
        tree.append((h, len(summands) - 1))
    return Graph(n, frozenset(edges)), CliqueDecomposition(tuple(summands), tuple(seps), tuple(tree))


def generate_random_connected(n: int, seed: int, edge_prob: tuple[int, int] = (1, 2)) -> Graph:
    """Random labelled tree (uniform attachment) plus each other pair with prob num/den."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = SplitMix64(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    edges = set()
    for i in range(1, n):
        u, v = perm[i], perm[rng.below(i)]
        edges.add((min(u, v), max(u, v)))
    num, den = edge_prob
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.bernoulli(num, den):
                edges.add((u, v))
    return Graph(n, frozenset(edges))


# --- exhaustive catalogs -----------------------------------------------------

def _refine(g: Graph) -> list[int]:
    """Isomorphism-invariant vertex colours by iterated neighbour-colour refinement."""
    colors = [0] * g.n
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in g.adjacency[v]))) for v in range(g.n)]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if len(palette) == len(set(colors)):
            return new
        colors = new


def canonical_form(g: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Minimum sorted edge tuple over all relabellings that respect refined colours.

    Vertices are laid out colour class by colour class, so only permutations
    inside each class are tried.
    """
    colors = _refine(g)
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    blocks = [classes[c] for c in sorted(classes)]
    best = None
    for perms in itertools.product(*(itertools.permutations(b) for b in blocks)):
        label = {}
        for v in itertools.chain.from_iterable(perms):
            label[v] = len(label)
        key = tuple(sorted((min(label[a], label[b]), max(label[a], label[b])) for a, b in g.edges))
        if best is None or key < best:
            best = key
    return g.n, best


def canonical_graph(g: Graph) -> Graph:
    n, edges = canonical_form(g)
    return Graph(n, frozenset(edges))


@lru_cache(maxsize=None)
def enumerate_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on n vertices up to isomorphism, in canonical-form order.

    Built vertex by vertex: every graph on n vertices is some graph on n-1
    vertices plus one vertex joined to a subset, so extending all n-1
    representatives and deduplicating by canonical form is exhaustive.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return (Graph(0),)
    forms = {canonical_form(Graph(1))}
    for size in range(2, n + 1):
        nxt = set()
        for _, base_edges in forms:
            for mask in range(1 << (size - 1)):
                extra = [(u, size - 1) for u in range(size - 1) if mask >> u & 1]
                nxt.add(canonical_form(Graph(size, frozenset(base_edges) | frozenset(extra))))
        forms = nxt
    return tuple(Graph(k, frozenset(e)) for k, e in sorted(forms, key=lambda f: (len(f[1]), f[1])))


PREDICATES: dict[str, Callable[[Graph], bool]] = {
    "connected": is_connected,
    "chordal": is_chordal,
    "triangle_free": lambda g: forbidden_clique_check(g, 3),
    "k4_free": lambda g: forbidden_clique_check(g, 4),
    "k5_free": lambda g: forbidden_clique_check(g, 5),
}


def _resolve(predicates: Iterable[str]) -> list[Callable[[Graph], bool]]:
    out = []
    for name in predicates:
        if name not in PREDICATES:
            raise ConfigError(f"unknown predicate {name!r}; known: {sorted(PREDICATES)}")
        out.append(PREDICATES[name])
    return out


def exhaustive_catalog(n: int, predicates: Iterable[str] = (), catalog: str | Path | None = None) -> Iterator[Graph]:
    """Every graph on n vertices passing all predicates.

    Reads a graph6 catalog file when given (file order is kept, graphs of
    other sizes are skipped), otherwise uses the built-in enumerator.
    """
    preds = _resolve(predicates)
    if catalog is not None:
        path = Path(catalog)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise FileNotFoundError(f"catalog {path}: {exc}") from exc
        source: Iterable[Graph] = (g for _, g in iter_graph6_lines(text))
    else:
        if n > 8:
            raise ConfigError("built-in enumerator is limited to n <= 8; supply a graph6 catalog")
        source = enumerate_graphs(n)
    for g in source:
        if g.n == n and all(p(g) for p in preds):
            yield g
