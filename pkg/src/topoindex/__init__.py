"""Topological indices of simple graphs and checks of the inequalities between them."""

from .bounds import BOUNDS, BoundCheck, SuiteResult, check_graph, run_suite
from .formats import parse_edge_list, parse_graph6, read_graphs, write_edge_list, write_graph6
from .generators import batch, generate
from .graph import (
    UNREACHABLE,
    Bipartition,
    DisconnectedGraphError,
    EdgePeripherality,
    Graph,
    GraphError,
    all_pairs_distances,
    bipartition,
    diameter,
    edge_peripherality,
    is_connected,
    triangle_count,
)
from .indices import (
    IndexReport,
    Invariants,
    albertson,
    bipartite_diam3_mostar_form,
    degree_variance,
    first_zagreb,
    index_report,
    irb,
    mostar,
    szeged,
)
from .spectral import Spectrum, eigenvalues, graph_energy, laplacian, laplacian_spectral_radius

__version__ = "0.1.0"
