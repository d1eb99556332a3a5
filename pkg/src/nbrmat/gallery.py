"""Small fixed graphs with known neighbor matrices, used by tests and scripts."""

from __future__ import annotations

from .graph import Graph, cycle


def six_vertex_example() -> Graph:
    """Path v1-v2-v3 where v3 also lies in a K_4 on v3..v6.

    Vertex ids are 0..5 for v1..v6.
    """
    edges = [(0, 1), (1, 2), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]
    return Graph.from_edges(6, edges, [f"v{i}" for i in range(1, 7)])


def shared_row_graph() -> Graph:
    """8-vertex graph with a 4-cycle where v_i (id 0) and v_j (id 1) share a row.

    Layout: 0-1, 0-2, 0-3, 1-4, 1-5, 2-6, 3-6, 4-7.
    """
    edges = [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (3, 6), (4, 7)]
    return Graph.from_edges(8, edges)


def shared_row_tree() -> Graph:
    """13-vertex tree where v_y (id 1) and v_z (id 2) share a row but not an orbit."""
    edges = [
        (0, 1), (0, 2),
        (1, 3), (1, 4), (1, 5),
        (2, 6), (2, 7), (2, 8),
        (4, 9), (4, 10),
        (7, 11), (8, 12),
    ]
    return Graph.from_edges(13, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def twin_pair(n: int = 8) -> tuple[Graph, Graph]:
    """Two non-isomorphic graphs on ``n + 4`` vertices with equal sorted matrices.

    Both start from K_n on vertices 1..n (ids 0..n-1) and add four degree-4
    vertices n+1..n+4; the graphs differ in two attachments of n+1 and n+4.
    """
    if n < 8:
        raise ValueError("twin_pair needs n >= 8 so the attachment sets are distinct")

    def build(attach: dict[int, tuple[int, ...]]) -> Graph:
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for extra, targets in attach.items():
            edges += [(extra - 1, t - 1) for t in targets]
        return Graph.from_edges(n + 4, edges, [str(i) for i in range(1, n + 5)])

    g = build({
        n + 1: (n, n - 1, 3, 4),
        n + 2: (1, 2, 3, 4),
        n + 3: (n, n - 1, n - 2, n - 3),
        n + 4: (1, 2, n - 2, n - 3),
    })
    h = build({
        n + 1: (n, 2, 3, 4),
        n + 2: (1, 2, 3, 4),
        n + 3: (n, n - 1, n - 2, n - 3),
        n + 4: (1, n - 1, n - 2, n - 3),
    })
    return g, h


def triangles(k: int) -> Graph:
    """k disjoint triangles (kC_3)."""
    g = cycle(3)
    out = g
    for _ in range(k - 1):
        out = out.disjoint_union(g)
    return out
