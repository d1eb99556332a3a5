"""Classical graph metrics, matrix signatures and the non-isomorphism certificate."""

from __future__ import annotations

import csv
import io
import json
import math
from fractions import Fraction
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from .graph import Graph
from .invariants import average_distance, is_connected
from .neighbor import NeighborMatrix, build, sort_rows

NOT_ISOMORPHIC = "not_isomorphic"
INCONCLUSIVE = "inconclusive"

DEFAULT_SMAX_BOUND = 8


def clustering(g: Graph) -> tuple[float, float]:
    """(average local clustering, transitivity).

    Local clustering of a vertex with degree < 2 is 0. Transitivity is
    3 * triangles / connected triples, 0 when there are no triples.
    """
    if g.n == 0:
        return 0.0, 0.0
    nbrs = [set(a) for a in g.adjacency]
    local = []
    closed = 0  # ordered pairs of adjacent neighbours, summed over centres
    triples = 0
    for v in range(g.n):
        d = len(nbrs[v])
        if d < 2:
            local.append(0.0)
            continue
        links = sum(1 for a, b in combinations(g.adjacency[v], 2) if b in nbrs[a])
        pairs = d * (d - 1) // 2
        local.append(links / pairs)
        closed += links
        triples += pairs
    # each triangle is seen once from each of its three corners
    trans = closed / triples if triples else 0.0
    return float(np.mean(local)), trans


def pearson_degree_correlation(g: Graph) -> float | None:
    """Degree assortativity over edge endpoints; None when the variance is 0.

    Each edge is counted in both directions, so both endpoint-degree lists
    have the same distribution and the coefficient reduces to cov / var,
    which is evaluated exactly in integers.
    """
    if g.m == 0:
        raise ValueError("degree correlation needs at least one edge")
    deg = g.degrees()
    total = 2 * g.m
    s1 = s2 = sxy = 0
    for u, v in g.edges:
        a, b = deg[u], deg[v]
        s1 += a + b
        s2 += a * a + b * b
        sxy += 2 * a * b
    var = total * s2 - s1 * s1
    if var == 0:
        return None
    return float(Fraction(total * sxy - s1 * s1, var))


def s_value(g: Graph) -> int:
    deg = g.degrees()
    return sum(deg[u] * deg[v] for u, v in g.edges)


def max_s_value(degrees: Sequence[int]) -> int | None:
    """Largest s over all simple graphs with this degree sequence.

    Exhaustive backtracking over edge sets; returns None if the sequence is
    not graphical.
    """
    deg = list(degrees)
    n = len(deg)
    resid = deg[:]
    best = -1

    def walk(i: int, acc: int) -> None:
        nonlocal best
        while i < n and resid[i] == 0:
            i += 1
        if i == n:
            best = max(best, acc)
            return
        need = resid[i]
        cands = [j for j in range(i + 1, n) if resid[j] > 0]
        if len(cands) < need:
            return
        resid[i] = 0
        for chosen in combinations(cands, need):
            for j in chosen:
                resid[j] -= 1
            walk(i + 1, acc + sum(deg[i] * deg[j] for j in chosen))
            for j in chosen:
                resid[j] += 1
        resid[i] = need

    walk(0, 0)
    return best if best >= 0 else None


def s_metric(g: Graph, bound: int = DEFAULT_SMAX_BOUND) -> tuple[int, float | None]:
    """(s, s / s_max).

    Regular graphs normalize to 1 directly. Otherwise s_max is found by
    exhaustive search when ``n <= bound``; beyond that the normalized value
    is None (unavailable).
    """
    s = s_value(g)
    deg = g.degrees()
    if g.m == 0:
        return s, None
    if min(deg) == max(deg):
        return s, 1.0
    if g.n > bound:
        return s, None
    smax = max_s_value(deg)
    return s, s / smax


def frobenius_norm(x: NeighborMatrix | np.ndarray) -> float:
    rows = x.rows if isinstance(x, NeighborMatrix) else x
    return math.sqrt(int((rows.astype(np.int64) ** 2).sum()))


def _pad(rows: np.ndarray, k: int) -> np.ndarray:
    out = np.zeros((rows.shape[0], k), dtype=np.int64)
    out[:, : rows.shape[1]] = rows
    return out


def similar(xg: NeighborMatrix, xh: NeighborMatrix) -> bool:
    """Equal sorted matrices after right-padding the narrower one with zeros."""
    a, b = xg.rows, xh.rows
    if a.shape[0] != b.shape[0]:
        return False
    k = max(a.shape[1], b.shape[1])
    return bool((_pad(a, k) == _pad(b, k)).all())


def padded_distance(xg: NeighborMatrix, xh: NeighborMatrix) -> float | None:
    """Frobenius norm of the difference of padded sorted matrices; None if n differs."""
    a, b = xg.rows, xh.rows
    if a.shape[0] != b.shape[0]:
        return None
    k = max(a.shape[1], b.shape[1])
    return frobenius_norm(_pad(a, k) - _pad(b, k))


def noniso_certificate(g: Graph, h: Graph) -> str:
    """``not_isomorphic`` if n, m or the sorted matrices differ, else ``inconclusive``."""
    if g.n != h.n or g.m != h.m:
        return NOT_ISOMORPHIC
    xg, xh = sort_rows(build(g)), sort_rows(build(h))
    return INCONCLUSIVE if xg == xh else NOT_ISOMORPHIC


@dataclass
class GraphProfile:
    """One row of the comparison table."""

    name: str
    n: int
    k: int
    frobenius: float
    average_distance: float | None
    average_clustering: float
    transitivity: float
    pearson: float | None
    s: int
    s_normalized: float | None
    matrix: NeighborMatrix = field(repr=False)

    @property
    def dimension(self) -> str:
        return f"{self.n} x {self.k}"


def profile(g: Graph, name: str = "G", smax_bound: int = DEFAULT_SMAX_BOUND) -> GraphProfile:
    x = build(g)
    avg_clu, trans = clustering(g)
    s, s_norm = s_metric(g, smax_bound)
    return GraphProfile(
        name=name,
        n=g.n,
        k=x.shape[1],
        frobenius=frobenius_norm(x),
        average_distance=float(average_distance(x)) if is_connected(x) else None,
        average_clustering=avg_clu,
        transitivity=trans,
        pearson=pearson_degree_correlation(g) if g.m else None,
        s=s,
        s_normalized=s_norm,
        matrix=sort_rows(x),
    )


@dataclass
class PairResult:
    first: str
    second: str
    similar: bool
    noniso: str
    distance: float | None  # padded-matrix Frobenius distance, equal n only
    norm_difference: float


@dataclass
class ComparisonReport:
    graphs: list[GraphProfile]
    pairs: list[PairResult]

    def to_dict(self) -> dict:
        return {
            "graphs": [
                {
                    "name": p.name,
                    "dimension": [p.n, p.k],
                    "frobenius_norm": p.frobenius,
                    "average_distance": p.average_distance,
                    "average_clustering": p.average_clustering,
                    "transitivity": p.transitivity,
                    "pearson": "undefined" if p.pearson is None else p.pearson,
                    "s_metric": p.s,
                    "s_metric_normalized": "unavailable" if p.s_normalized is None else p.s_normalized,
                }
                for p in self.graphs
            ],
            "pairs": [
                {
                    "first": r.first,
                    "second": r.second,
                    "similar": r.similar,
                    "noniso": r.noniso,
                    "padded_frobenius_distance": r.distance,
                    "norm_difference": r.norm_difference,
                }
                for r in self.pairs
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_csv(self) -> str:
        """Table-style block (one line per graph), then one line per pair."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["graph", "avg_distance", "avg_cluster_coeff", "pearson",
                    "s_metric_normalized", "dimension", "frobenius_norm"])
        for p in self.graphs:
            w.writerow([
                p.name,
                fmt(p.average_distance, "undefined"),
                fmt(p.average_clustering),
                fmt(p.pearson, "undefined"),
                fmt(p.s_normalized, "unavailable"),
                p.dimension,
                fmt(p.frobenius),
            ])
        w.writerow([])
        w.writerow(["first", "second", "similar", "noniso", "padded_distance", "norm_difference"])
        for r in self.pairs:
            w.writerow([r.first, r.second, str(r.similar).lower(), r.noniso,
                        fmt(r.distance, "n/a"), fmt(r.norm_difference)])
        return buf.getvalue()


def fmt(value: float | None, missing: str = "undefined") -> str:
    """Four significant digits, or ``missing`` for None."""
    if value is None:
        return missing
    return f"{value:.4g}"


def compare_many(
    graphs: Sequence[Graph],
    names: Sequence[str] | None = None,
    smax_bound: int = DEFAULT_SMAX_BOUND,
) -> ComparisonReport:
    names = list(names) if names is not None else [f"G{i + 1}" for i in range(len(graphs))]
    profs = [profile(g, nm, smax_bound) for g, nm in zip(graphs, names)]
    pairs = []
    for i, j in combinations(range(len(graphs)), 2):
        a, b = profs[i], profs[j]
        pairs.append(PairResult(
            first=a.name,
            second=b.name,
            similar=similar(a.matrix, b.matrix),
            noniso=noniso_certificate(graphs[i], graphs[j]),
            distance=padded_distance(a.matrix, b.matrix),
            norm_difference=abs(a.frobenius - b.frobenius),
        ))
    return ComparisonReport(profs, pairs)


def compare(g: Graph, h: Graph, names=("G", "H"), smax_bound: int = DEFAULT_SMAX_BOUND) -> ComparisonReport:
    return compare_many([g, h], names, smax_bound)
