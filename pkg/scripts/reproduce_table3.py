"""Recompute the graph-comparison table for the fourteen named graphs.

Usage: python scripts/reproduce_table3.py [--smax-bound N] [--csv]
"""

import argparse
import sys

from nbrmat.comparison import compare_many, fmt
from nbrmat.graph import FamilySpec, generate

GRAPHS = [
    ("B_7,7", FamilySpec("barbell", m=7, p=7)),
    ("W_1,20", FamilySpec("wheel", n=20)),
    ("K_1,15", FamilySpec("star", n=15)),
    ("P_16", FamilySpec("path", n=16)),
    ("W_1,31", FamilySpec("wheel", n=31)),
    ("B_10,12", FamilySpec("barbell", m=10, p=12)),
    ("K_32", FamilySpec("complete", n=32)),
    ("K_16,16", FamilySpec("complete-bipartite", m=16, p=16)),
    ("CL_32", FamilySpec("circular-ladder", n=32)),
    ("C_32", FamilySpec("cycle", n=32)),
    ("H_32", FamilySpec("hypercube", n=32)),
    ("L_21,11", FamilySpec("lollipop", m=21, p=11)),
    ("P_32", FamilySpec("path", n=32)),
    ("K_1,31", FamilySpec("star", n=31)),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--smax-bound", type=int, default=8)
    ap.add_argument("--csv", action="store_true")
    args = ap.parse_args()

    names = [n for n, _ in GRAPHS]
    rep = compare_many([generate(s) for _, s in GRAPHS], names, args.smax_bound)
    if args.csv:
        # graph block only
        sys.stdout.write(rep.to_csv().split("\n\n")[0] + "\n")
        return
    header = f"{'graph':<9}{'avg dist':>9}{'avg clu':>9}{'pearson':>10}{'s norm':>12}{'dim':>9}{'frob':>9}"
    print(header)
    print("-" * len(header))
    for p in rep.graphs:
        print(f"{p.name:<9}{fmt(p.average_distance):>9}{fmt(p.average_clustering):>9}"
              f"{fmt(p.pearson):>10}{fmt(p.s_normalized, 'unavail'):>12}"
              f"{p.n:>4} x {p.k:<3}{fmt(p.frobenius):>8}")
    same = [(r.first, r.second) for r in rep.pairs if r.similar]
    print(f"\nsimilar pairs: {same or 'none'}")


if __name__ == "__main__":
    main()
