"""Graph invariants read directly off an unsorted neighbor matrix.

Everything here takes the n x k integer matrix (rows indexed by vertex id,
column ``j`` = distance ``j + 1``) and nothing else, so each quantity can be
checked against a direct distance-matrix computation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np


class DisconnectedGraphError(ValueError):
    """Raised when a connected-only invariant is asked of a disconnected graph."""


def _total(x: np.ndarray) -> int:
    return int(x.sum())


def is_connected(x: np.ndarray, n: int | None = None) -> bool:
    n = x.shape[0] if n is None else n
    return _total(x) == n * (n - 1)


def _require_connected(x: np.ndarray, what: str) -> None:
    if not is_connected(x):
        raise DisconnectedGraphError(f"{what} requires a connected graph")


def count_components(x: np.ndarray) -> int:
    """Sum over d of |{rows summing to d}| / (d + 1), including d = 0.

    A component of order q contributes q rows each summing to q - 1.
    """
    sums = x.sum(axis=1) if x.shape[1] else np.zeros(x.shape[0], dtype=np.int64)
    total = 0
    for d, count in zip(*np.unique(sums, return_counts=True)):
        q, r = divmod(int(count), int(d) + 1)
        if r:
            raise ValueError(f"{count} rows sum to {d}; not a multiple of {d + 1}")
        total += q
    return total


def radius_center(x: np.ndarray) -> tuple[int, list[int]]:
    """Radius = last column with no zero entry; center = rows ending there."""
    _require_connected(x, "radius")
    n, k = x.shape
    if k == 0:
        return 0, list(range(n))
    full = np.flatnonzero((x != 0).all(axis=0))
    rad = int(full.max()) + 1
    ends = (x[:, rad:] == 0).all(axis=1)
    center = np.flatnonzero((x[:, rad - 1] != 0) & ends)
    return rad, center.tolist()


def periphery(x: np.ndarray) -> list[int]:
    _require_connected(x, "periphery")
    n, k = x.shape
    if k == 0:
        return list(range(n))
    return np.flatnonzero(x[:, k - 1] != 0).tolist()


def _distance_sums(x: np.ndarray) -> np.ndarray:
    weights = np.arange(1, x.shape[1] + 1, dtype=np.int64)
    return x @ weights


def closeness(x: np.ndarray, n: int | None = None) -> list[Fraction]:
    """(n - 1) / (sum of distances) per vertex, as exact fractions."""
    _require_connected(x, "closeness")
    n = x.shape[0] if n is None else n
    if n == 1:
        # no other vertices; define as 0 rather than 0/0
        return [Fraction(0)]
    return [Fraction(n - 1, int(s)) for s in _distance_sums(x)]


def average_distance(x: np.ndarray, n: int | None = None) -> Fraction:
    _require_connected(x, "average distance")
    n = x.shape[0] if n is None else n
    if n < 2:
        return Fraction(0)
    return Fraction(int(_distance_sums(x).sum()), n * (n - 1))


def degree_stats(x: np.ndarray, n: int | None = None) -> tuple[list[int], int, Fraction]:
    """Non-increasing degree sequence, edge count and density."""
    n = x.shape[0] if n is None else n
    deg = x[:, 0] if x.shape[1] else np.zeros(n, dtype=np.int64)
    twice_m = int(deg.sum())
    if twice_m % 2:
        raise ValueError("first column sums to an odd number; not a neighbor matrix")
    m = twice_m // 2
    density = Fraction(2 * m, n * (n - 1)) if n > 1 else Fraction(0)
    return sorted(deg.tolist(), reverse=True), m, density


def column_sums(x: np.ndarray) -> list[int]:
    return x.sum(axis=0).tolist()


def power_edge_counts(x: np.ndarray) -> list[int]:
    """|E(G^s)| for s = 1..k from cumulative column sums."""
    return [c // 2 for c in np.cumsum(x.sum(axis=0)).tolist()]


def row_partition(x: np.ndarray) -> list[list[int]]:
    """Vertices grouped by identical rows.

    Classes are listed in order of their smallest vertex. Vertices in one
    automorphism orbit always share a class; the converse can fail.
    """
    classes: dict[tuple[int, ...], list[int]] = {}
    for v, row in enumerate(x.tolist()):
        classes.setdefault(tuple(row), []).append(v)
    return list(classes.values())


@dataclass(frozen=True)
class InvariantReport:
    n: int
    k: int
    connected: bool
    component_count: int
    degree_sequence: list[int]
    m: int
    density: Fraction
    column_sums: list[int]
    power_edge_counts: list[int]
    # connected-only fields are None for disconnected graphs
    radius: int | None = None
    diameter: int | None = None
    center: list[int] | None = None
    periphery: list[int] | None = None
    closeness: list[Fraction] | None = None
    average_distance: Fraction | None = None

    def to_dict(self, labels=None) -> dict:
        """JSON-ready dict with a fixed key order; rationals become floats."""
        name = (lambda v: labels[v]) if labels is not None else (lambda v: v)

        def opt(val, fn):
            return None if val is None else fn(val)

        return {
            "n": self.n,
            "k": self.k,
            "connected": self.connected,
            "component_count": self.component_count,
            "radius": self.radius,
            "diameter": self.diameter,
            "center": opt(self.center, lambda vs: [name(v) for v in vs]),
            "periphery": opt(self.periphery, lambda vs: [name(v) for v in vs]),
            "closeness": opt(
                self.closeness,
                lambda cs: {str(name(v)): float(c) for v, c in enumerate(cs)},
            ),
            "average_distance": opt(self.average_distance, float),
            "degree_sequence": self.degree_sequence,
            "m": self.m,
            "density": float(self.density),
            "column_sums": self.column_sums,
            "power_edge_counts": self.power_edge_counts,
        }

    def to_json(self, labels=None) -> str:
        return json.dumps(self.to_dict(labels))


def report(x: np.ndarray) -> InvariantReport:
    n, k = x.shape
    degs, m, dens = degree_stats(x, n)
    base = dict(
        n=n,
        k=k,
        connected=is_connected(x, n),
        component_count=count_components(x),
        degree_sequence=degs,
        m=m,
        density=dens,
        column_sums=column_sums(x),
        power_edge_counts=power_edge_counts(x),
    )
    if not base["connected"]:
        return InvariantReport(**base)
    rad, cen = radius_center(x)
    return InvariantReport(
        **base,
        radius=rad,
        diameter=k,
        center=cen,
        periphery=periphery(x),
        closeness=closeness(x, n),
        average_distance=average_distance(x, n),
    )
