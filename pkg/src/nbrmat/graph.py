"""Simple undirected graphs, edge-list I/O and the named families used for comparison.

Vertices are dense integers ``0..n-1``. External labels read from an edge
list are kept in ``Graph.labels`` so reports can print them back.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence, TextIO

log = logging.getLogger(__name__)

FAMILIES = (
    "complete",
    "path",
    "cycle",
    "star",
    "wheel",
    "complete-bipartite",
    "circular-ladder",
    "hypercube",
    "barbell",
    "lollipop",
)


class EdgeListError(ValueError):
    """Malformed edge-list input. ``lineno`` is 1-based, or None."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``edges`` holds each edge once as ``(u, v)`` with ``u < v``, sorted.
    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False)
    labels: tuple[str, ...] = field(repr=False)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        canon = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            canon.add((u, v) if u < v else (v, u))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in canon:
            adj[u].append(v)
            adj[v].append(u)
        if labels is None:
            labels = [str(i) for i in range(n)]
        elif len(labels) != n:
            raise ValueError("labels must have one entry per vertex")
        return cls(
            n=n,
            edges=tuple(sorted(canon)),
            adjacency=tuple(tuple(sorted(a)) for a in adj),
            labels=tuple(str(x) for x in labels),
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        labels = [""] * self.n
        for v, p in enumerate(perm):
            labels[p] = self.labels[v]
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges), labels)

    def remove_vertex(self, v: int) -> "Graph":
        """Delete ``v``; vertices above it shift down by one."""
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} not in graph")

        def shift(x: int) -> int:
            return x - 1 if x > v else x

        edges = ((shift(a), shift(b)) for a, b in self.edges if v not in (a, b))
        labels = self.labels[:v] + self.labels[v + 1:]
        return Graph.from_edges(self.n - 1, edges, labels)

    def disjoint_union(self, other: "Graph") -> "Graph":
        off = self.n
        edges = list(self.edges) + [(u + off, v + off) for u, v in other.edges]
        return Graph.from_edges(self.n + other.n, edges)


# ---------------------------------------------------------------------------
# edge-list I/O


def parse_edge_list(text: str | TextIO) -> Graph:
    """Parse a whitespace-separated edge list.

    Lines starting with ``#`` and blank lines are skipped. A line with a single
    label declares an (possibly isolated) vertex. Labels get ids in order of
    first appearance. Duplicate edges are kept once, with a warning.
    """
    if not isinstance(text, str):
        text = text.read()
    ids: dict[str, int] = {}
    edges: set[tuple[int, int]] = set()

    def vid(label: str) -> int:
        if label not in ids:
            ids[label] = len(ids)
        return ids[label]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) > 2:
            raise EdgeListError(f"expected one or two labels, got {len(toks)}", lineno)
        for tok in toks:
            if not tok.isprintable():
                raise EdgeListError(f"malformed label {tok!r}", lineno)
        if len(toks) == 1:
            vid(toks[0])
            continue
        a, b = toks
        if a == b:
            raise EdgeListError(f"self-loop on {a!r}", lineno)
        u, v = vid(a), vid(b)
        key = (u, v) if u < v else (v, u)
        if key in edges:
            log.warning("line %d: duplicate edge %s %s ignored", lineno, a, b)
        edges.add(key)
    labels = sorted(ids, key=ids.__getitem__)
    return Graph.from_edges(len(ids), edges, labels)


def read_edge_list(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def to_edge_list(g: Graph) -> str:
    """Canonical ``u v`` lines (``u < v``, sorted) by vertex id.

    Isolated vertices follow as single-id lines so the vertex count survives
    a round trip. Parsing the output back yields the same edge set over the
    id labels.
    """
    lines = [f"{u} {v}" for u, v in g.edges]
    lines += [str(v) for v in range(g.n) if not g.adjacency[v]]
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# generators


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family with its integer parameters.

    ``n`` is the size parameter for single-parameter families (vertex count,
    except ``star``/``wheel`` where it is the number of leaves / rim vertices).
    ``m`` and ``p`` are the two parameters of ``barbell``, ``lollipop`` and
    ``complete-bipartite``.
    """

    family: str
    n: int | None = None
    m: int | None = None
    p: int | None = None


def _need(spec: FamilySpec, name: str, lo: int) -> int:
    val = getattr(spec, name)
    if val is None:
        raise ValueError(f"{spec.family} requires parameter {name}")
    if val < lo:
        raise ValueError(f"{spec.family}: {name}={val} out of range (need >= {lo})")
    return val


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves}; the hub is vertex 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def wheel(rim: int) -> Graph:
    """W_{1,rim}: hub 0 joined to the cycle 1..rim."""
    if rim < 3:
        raise ValueError("wheel needs a rim of at least 3 vertices")
    spokes = [(0, i) for i in range(1, rim + 1)]
    ring = [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Graph.from_edges(rim + 1, spokes + ring)


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: parts ``0..a-1`` and ``a..a+b-1``."""
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def circular_ladder(n: int) -> Graph:
    """Prism C_{n/2} x K_2 on ``n`` vertices.

    Outer ring ``0..h-1``, inner ring ``h..2h-1`` with rung ``i -- i+h``.
    """
    if n % 2 or n < 6:
        raise ValueError("circular ladder needs an even vertex count >= 6")
    h = n // 2
    edges = []
    for i in range(h):
        edges.append((i, (i + 1) % h))
        edges.append((h + i, h + (i + 1) % h))
        edges.append((i, i + h))
    return Graph.from_edges(n, edges)


def hypercube(n: int) -> Graph:
    """Hypercube on ``n = 2**d`` vertices; vertex ids are the bit patterns."""
    if n < 2 or n & (n - 1):
        raise ValueError("hypercube vertex count must be a power of two >= 2")
    d = n.bit_length() - 1
    return Graph.from_edges(n, ((v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)))


def barbell(m: int, p: int) -> Graph:
    """Two K_m joined through a path of ``p`` extra vertices.

    Left clique ``0..m-1``, path ``m..m+p-1``, right clique ``m+p..2m+p-1``.
    The path runs from vertex ``m-1`` to vertex ``m+p``.
    """
    if m < 2 or p < 0:
        raise ValueError("barbell needs m >= 2 and p >= 0")
    left = list(combinations(range(m), 2))
    right = [(u + m + p, v + m + p) for u, v in left]
    chain = [(i, i + 1) for i in range(m - 1, m + p)]
    return Graph.from_edges(2 * m + p, left + right + chain)


def lollipop(m: int, p: int) -> Graph:
    """K_m (``0..m-1``) with a tail of ``p`` vertices hanging off vertex ``m-1``."""
    if m < 2 or p < 0:
        raise ValueError("lollipop needs m >= 2 and p >= 0")
    clique = list(combinations(range(m), 2))
    tail = [(i, i + 1) for i in range(m - 1, m + p - 1)]
    return Graph.from_edges(m + p, clique + tail)


def generate(spec: FamilySpec) -> Graph:
    """Build the graph described by ``spec``. Output is deterministic."""
    fam = spec.family
    if fam == "complete":
        return complete(_need(spec, "n", 1))
    if fam == "path":
        return path(_need(spec, "n", 1))
    if fam == "cycle":
        return cycle(_need(spec, "n", 3))
    if fam == "star":
        return star(_need(spec, "n", 1))
    if fam == "wheel":
        return wheel(_need(spec, "n", 3))
    if fam == "complete-bipartite":
        return complete_bipartite(_need(spec, "m", 1), _need(spec, "p", 1))
    if fam == "circular-ladder":
        return circular_ladder(_need(spec, "n", 6))
    if fam == "hypercube":
        return hypercube(_need(spec, "n", 2))
    if fam == "barbell":
        return barbell(_need(spec, "m", 2), _need(spec, "p", 0))
    if fam == "lollipop":
        return lollipop(_need(spec, "m", 2), _need(spec, "p", 0))
    raise ValueError(f"unknown family {fam!r}; expected one of {', '.join(FAMILIES)}")
