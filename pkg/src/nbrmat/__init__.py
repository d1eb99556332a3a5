"""Neighbor matrices of simple graphs: construction, invariants, comparison and influence."""

from .comparison import (
    INCONCLUSIVE,
    NOT_ISOMORPHIC,
    clustering,
    compare,
    compare_many,
    frobenius_norm,
    noniso_certificate,
    pearson_degree_correlation,
    s_metric,
    similar,
)
from .distance import all_pairs_distances, components, eccentricities
from .graph import FamilySpec, Graph, generate, parse_edge_list, to_edge_list
from .influence import InfluenceConfig, distance_signature, influence_score, rank_vertices
from .invariants import DisconnectedGraphError, report
from .neighbor import (
    NeighborMatrix,
    build,
    build_from_distances,
    build_via_boolean_matrices,
    build_via_graph_powers,
    neighbor_matrix,
    power_graph,
    sort_rows,
)

__all__ = [name for name in dir() if not name.startswith("_")]
