#!/usr/bin/env python3
"""Print the four stages of the spanning-tree reduction on the six-vertex example.

    python scripts/reduction_trace.py --root 0
    python scripts/reduction_trace.py --root 4 --random-tree --seed 7
"""

import argparse

from cliquepoly.clique import clique_polynomial, count_cliques
from cliquepoly.graph import worked_example_graph
from cliquepoly.reduce import random_spanning_tree, triangle_free_reduction


def show(label, n, edges):
    print(f"{label:8s} n={n} m={len(edges)}  " + " ".join(f"{u}-{v}" for u, v in edges))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--root", type=int, default=0)
    ap.add_argument("--random-tree", action="store_true")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    g = worked_example_graph()
    tree = random_spanning_tree(g, args.root, args.seed) if args.random_tree else None
    tr = triangle_free_reduction(g, args.root, tree)
    show("G", g.n, g.sorted_edges())
    show("tree", g.n, list(tr.tree_edges))
    show("G_hat", tr.g_hat.n, tr.g_hat.sorted_edges())
    show("G_tilde", tr.g_tilde.n, tr.g_tilde.sorted_edges())
    print(f"triangles: G={count_cliques(g)[3]} G_tilde={count_cliques(tr.g_tilde)[3]}")
    print(f"C(G)       = {clique_polynomial(g)}")
    print(f"Q          = {tr.q}")
    print(f"C(G_tilde) = {clique_polynomial(tr.g_tilde)}")
    print("invariants: " + ("ok" if not tr.violations else "; ".join(tr.violations)))


if __name__ == "__main__":
    main()
