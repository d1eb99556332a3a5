"""Neighbor matrices: per-vertex counts of vertices at each exact distance.

Row ``i``, column ``j`` (0-based column ``j`` holds distance ``j + 1``) counts
the vertices at distance exactly ``j + 1`` from vertex ``i``. The number of
columns ``k`` is the largest finite distance in the graph (the diameter when
connected); an edgeless graph has ``k = 0``.

Three constructions are provided and must agree entry for entry:

* ``build_from_distances`` counts entries of the BFS distance matrix;
* ``build_via_graph_powers`` differences adjacency matrices of G, G^2, ...;
* ``build_via_boolean_matrices`` differences boolean reachability matrices
  ``bool((A + I)^j)``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .distance import all_pairs_distances
from .graph import Graph


def adjacency_matrix(g: Graph, dtype=np.int64) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=dtype)
    if g.edges:
        u, v = np.array(g.edges).T
        a[u, v] = 1
        a[v, u] = 1
    return a


def build_from_distances(d: np.ndarray) -> np.ndarray:
    """Unsorted neighbor matrix from a distance matrix."""
    n = d.shape[0]
    k = int(d.max()) if d.size else 0
    x = np.zeros((n, k), dtype=np.int64)
    for j in range(1, k + 1):
        x[:, j - 1] = (d == j).sum(axis=1)
    return x


def build(g: Graph, method: str = "bfs") -> np.ndarray:
    """Unsorted neighbor matrix of ``g`` by the named method."""
    if method == "bfs":
        return build_from_distances(all_pairs_distances(g))
    if method == "powers":
        return build_via_graph_powers(g)
    if method == "boolean":
        return build_via_boolean_matrices(g)
    raise ValueError(f"unknown method {method!r}")


def build_via_graph_powers(g: Graph) -> np.ndarray:
    """Column j is the row sum of ``A(G^j) - A(G^(j-1))`` with negatives set to 0.

    ``A(G^j)`` is obtained from ``A(G^(j-1))`` by adding every pair joined
    through one more edge: ``A(G^j) = [A(G^(j-1)) + A(G^(j-1)) A > 0]`` off
    the diagonal. Stops once the power graph no longer grows.
    """
    n = g.n
    a = adjacency_matrix(g)
    prev = np.zeros((n, n), dtype=np.int64)
    cur = a.copy()
    cols = []
    while True:
        diff = cur - prev
        diff[diff < 0] = 0
        col = diff.sum(axis=1)
        if not col.any():
            break
        cols.append(col)
        nxt = ((cur + cur @ a) > 0).astype(np.int64)
        np.fill_diagonal(nxt, 0)
        prev, cur = cur, nxt
    if not cols:
        return np.zeros((n, 0), dtype=np.int64)
    return np.stack(cols, axis=1)


def build_via_boolean_matrices(g: Graph) -> np.ndarray:
    """Column j counts pairs reachable in j steps of ``A + I`` but not in j - 1.

    Boolean products never overflow, whatever the walk counts.
    """
    n = g.n
    step = adjacency_matrix(g, dtype=bool)
    np.fill_diagonal(step, True)
    reach_prev = np.eye(n, dtype=bool)
    cols = []
    while True:
        reach = reach_prev @ step  # boolean matmul: OR of ANDs
        exact = reach & ~reach_prev
        if not exact.any():
            break
        cols.append(exact.sum(axis=1))
        reach_prev = reach
    if not cols:
        return np.zeros((n, 0), dtype=np.int64)
    return np.stack(cols, axis=1).astype(np.int64)


@dataclass(frozen=True)
class NeighborMatrix:
    """Rows in reverse lexicographic order.

    ``order[r]`` is the vertex id whose row sits at position ``r``.
    """

    rows: np.ndarray
    order: tuple[int, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows.shape

    def __eq__(self, other):
        if not isinstance(other, NeighborMatrix):
            return NotImplemented
        return self.rows.shape == other.rows.shape and bool((self.rows == other.rows).all())

    __hash__ = None


def sort_rows(x: np.ndarray) -> NeighborMatrix:
    """Sort rows by column 1 descending, ties by column 2 descending, and so on.

    Fully identical rows keep their input order.
    """
    n, k = x.shape
    if k == 0 or n == 0:
        order = np.arange(n)
    else:
        # lexsort uses the last key as primary and is stable
        order = np.lexsort(tuple(-x[:, j] for j in range(k - 1, -1, -1)))
    return NeighborMatrix(rows=x[order].copy(), order=tuple(int(i) for i in order))


def neighbor_matrix(g: Graph, method: str = "bfs") -> NeighborMatrix:
    return sort_rows(build(g, method))


def power_graph(g: Graph, s: int, d: np.ndarray | None = None) -> Graph:
    """G^s: same vertices, an edge for every pair at distance 1..s."""
    if s < 1:
        raise ValueError("power must be >= 1")
    if d is None:
        d = all_pairs_distances(g)
    iu, ju = np.nonzero(np.triu((d >= 1) & (d <= s)))
    return Graph.from_edges(g.n, zip(iu.tolist(), ju.tolist()), g.labels)


def permuted_equivalence_check(g: Graph, perm: Sequence[int]) -> bool:
    """Relabel ``g`` by ``perm`` and confirm the matrices follow the relabeling.

    The row of vertex ``v`` in ``g`` must equal the row of ``perm[v]`` in the
    relabeled graph, and the sorted matrices must be identical.
    """
    h = g.relabel(perm)
    xg = build(g)
    xh = build(h)
    if xg.shape != xh.shape:
        return False
    if not (xh[np.asarray(perm, dtype=np.int64)] == xg).all():
        return False
    return sort_rows(xg) == sort_rows(xh)


# ---------------------------------------------------------------------------
# serialization


def to_csv(rows: np.ndarray) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for r in rows.tolist():
        w.writerow(r)
    return buf.getvalue()


def to_json(rows: np.ndarray, vertex_order: Sequence[str]) -> str:
    """``{"n", "k", "rows", "vertex_order"}``; ``vertex_order[i]`` labels ``rows[i]``."""
    n, k = rows.shape
    doc = {"n": int(n), "k": int(k), "rows": rows.tolist(), "vertex_order": list(vertex_order)}
    return json.dumps(doc)


def from_json(text: str) -> tuple[np.ndarray, list[str]]:
    doc = json.loads(text)
    rows = np.array(doc["rows"], dtype=np.int64).reshape(doc["n"], doc["k"])
    return rows, list(doc["vertex_order"])
