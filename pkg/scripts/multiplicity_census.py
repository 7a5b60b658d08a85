#!/usr/bin/env python3
"""Tabulate real-rootedness against the multiplicity of -1 over random chordal pastings.

Groups graphs by clique number and multiplicity at -1, and counts how many
in each cell are real-rooted. Useful for eyeballing where non-real-rooted
chordal graphs live.

    python scripts/multiplicity_census.py --count 2000 --max-n 30
"""

import argparse
from collections import Counter

from cliquepoly.analyze import analyze_graph
from cliquepoly.gen import GeneratorConfig, SplitMix64, derive_seed, generate_chordal_pasting


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--max-n", type=int, default=30)
    ap.add_argument("--max-summand-size", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    total, rooted = Counter(), Counter()
    for i in range(args.count):
        rng = SplitMix64(derive_seed(args.seed, i))
        cfg = GeneratorConfig(summands=1 + rng.below(12), max_summand_size=args.max_summand_size,
                              max_vertices=args.max_n, seed=rng.next_u64())
        g, _ = generate_chordal_pasting(cfg)
        r = analyze_graph(g)
        key = (r.omega, r.root_analysis.multiplicity_at_minus_one)
        total[key] += 1
        rooted[key] += r.root_analysis.is_real_rooted

    print(f"{'omega':>5} {'mult':>4} {'graphs':>7} {'real-rooted':>11}")
    for key in sorted(total):
        print(f"{key[0]:5d} {key[1]:4d} {total[key]:7d} {rooted[key]:11d}")


if __name__ == "__main__":
    main()
