"""Exact all-pairs distances by breadth-first search.

Distances are integers. Pairs in different components get distance 0, so a
zero off the diagonal only means "unreachable" together with the component
labels.
"""

from __future__ import annotations

import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .graph import Graph


def default_workers() -> int:
    """Worker cap from ``NBRMAT_THREADS`` (default 1)."""
    raw = os.environ.get("NBRMAT_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def bfs_levels(g: Graph, source: int) -> list[int]:
    """Distance from ``source`` to every vertex, ``-1`` where unreachable."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph, workers: int | None = None) -> np.ndarray:
    """n x n int64 matrix of geodesic lengths (0 across components)."""
    workers = default_workers() if workers is None else max(1, workers)
    sources = range(g.n)
    if workers > 1 and g.n > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            rows = list(ex.map(lambda s: bfs_levels(g, s), sources))
    else:
        rows = [bfs_levels(g, s) for s in sources]
    d = np.array(rows, dtype=np.int64).reshape(g.n, g.n)
    d[d < 0] = 0
    return d


@dataclass(frozen=True)
class Components:
    labels: tuple[int, ...]  # component id per vertex, ids dense in order of first vertex
    orders: tuple[int, ...]  # vertex count per component id

    @property
    def count(self) -> int:
        return len(self.orders)

    def order_of(self, v: int) -> int:
        return self.orders[self.labels[v]]


def components(g: Graph) -> Components:
    labels = [-1] * g.n
    orders: list[int] = []
    for s in range(g.n):
        if labels[s] >= 0:
            continue
        cid = len(orders)
        labels[s] = cid
        size = 0
        stack = [s]
        while stack:
            u = stack.pop()
            size += 1
            for w in g.adjacency[u]:
                if labels[w] < 0:
                    labels[w] = cid
                    stack.append(w)
        orders.append(size)
    return Components(tuple(labels), tuple(orders))


def eccentricities(d: np.ndarray, comps: Components | None = None) -> np.ndarray:
    """Largest finite distance from each vertex within its own component.

    With the 0-for-unreachable convention the row maximum already ignores
    other components, so ``comps`` is only used to check consistency.
    """
    if comps is not None and d.shape[0] != len(comps.labels):
        raise ValueError("distance matrix and component labels disagree on n")
    if d.size == 0:
        return np.zeros(d.shape[0], dtype=np.int64)
    return d.max(axis=1)
