"""Densest connected subgraph mining on dual networks.

A dual network pairs an edge-weighted conceptual graph with an unweighted
physical graph over corresponding nodes.  The pipeline merges the two into
a weighted alignment graph (match/gap scoring with a hop threshold), peels
it greedily for a densest subgraph, and verifies or repairs physical
connectivity of the selection.
"""

from .align import AlignmentGraph, GapWeightRule, build_alignment_graph, gap_weight
from .dualnet import Correspondence, DualNetwork, ValidationReport, induced, validate
from .errors import (ConfigError, DualDenseError, IrreparableDisconnection,
                     NoFeasibleSubgraph, ParseError)
from .graph import (Graph, connected_components, density, graphs_equal,
                    is_connected, shortest_path_hops, vol)
from .oracle import OracleResult, brute_force_dcs
from .peel import DensestResult, PeelTrace, exact_densest, peel
from .pipeline import (Connectivity, DcsOptions, DcsResult, extract_dcs,
                       repair_connectivity, result_to_doc,
                       verify_physical_connectivity)
from .synth import PlantedInstance, generate_planted

__version__ = "0.1.0"

__all__ = [
    "AlignmentGraph", "GapWeightRule", "build_alignment_graph", "gap_weight",
    "Correspondence", "DualNetwork", "ValidationReport", "induced", "validate",
    "ConfigError", "DualDenseError", "IrreparableDisconnection",
    "NoFeasibleSubgraph", "ParseError",
    "Graph", "connected_components", "density", "graphs_equal", "is_connected",
    "shortest_path_hops", "vol",
    "OracleResult", "brute_force_dcs",
    "DensestResult", "PeelTrace", "exact_densest", "peel",
    "Connectivity", "DcsOptions", "DcsResult", "extract_dcs",
    "repair_connectivity", "result_to_doc", "verify_physical_connectivity",
    "PlantedInstance", "generate_planted",
]
