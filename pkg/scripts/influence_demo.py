"""Rank vertices of a few named graphs by influence and print the top of each list."""

import argparse

from nbrmat.comparison import fmt
from nbrmat.gallery import petersen, six_vertex_example
from nbrmat.graph import FamilySpec, generate
from nbrmat.influence import InfluenceConfig, rank_vertices

CASES = {
    "six-vertex example": six_vertex_example(),
    "barbell(7,7)": generate(FamilySpec("barbell", m=7, p=7)),
    "lollipop(21,11)": generate(FamilySpec("lollipop", m=21, p=11)),
    "star(15)": generate(FamilySpec("star", n=15)),
    "petersen": petersen(),
}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--top", type=int, default=5)
    ap.add_argument("--norm", choices=("l1", "l2"), default="l1")
    ap.add_argument("--weight", type=float, default=None, help="lost-pair weight (default diameter + 1)")
    args = ap.parse_args()
    cfg = InfluenceConfig(norm=args.norm, lost_pair_weight=args.weight)
    for name, g in CASES.items():
        r = rank_vertices(g, cfg)
        top = ", ".join(f"{g.labels[v]}={fmt(r.scores[v])}" for v in r.order[: args.top])
        print(f"{name:<20} {top}")


if __name__ == "__main__":
    main()
