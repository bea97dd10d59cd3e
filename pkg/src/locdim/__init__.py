"""Local resolving sets of size at most floor(n/2) for K4-free graphs, with a brute-force oracle."""

from .constructor import Certificate, ConstructionError, DivisionFactError, construct_certificate
from .fragments import CATALOG, FragmentPlacement, classify_induced, enumerate_placements
from .generators import friendship_graph, labeled_graphs, named_graph, random_k4_free
from .graph import Graph, clique_number, distances_from, has_k4, is_connected, parse_graph6, write_graph6
from .oracle import check_known_bounds, is_local_resolving, local_metric_dimension
from .packing import InputContractError, check_division_facts, local_vertex_division, max_disjoint_packing

__all__ = [
    "CATALOG", "Certificate", "ConstructionError", "DivisionFactError", "FragmentPlacement", "Graph",
    "InputContractError", "check_division_facts", "check_known_bounds", "classify_induced",
    "clique_number", "construct_certificate", "distances_from", "enumerate_placements",
    "friendship_graph", "has_k4", "is_connected", "is_local_resolving", "labeled_graphs",
    "local_metric_dimension", "local_vertex_division", "max_disjoint_packing", "named_graph",
    "parse_graph6", "random_k4_free", "write_graph6",
]
