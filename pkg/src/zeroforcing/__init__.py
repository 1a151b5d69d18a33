"""Zero forcing and connected zero forcing on simple undirected graphs.

The library covers the propagation process itself, brute-force exact
solvers with witnesses, closed-form solvers for trees, unicyclic
graphs, and pendant-free cactus and block graphs, the hardness
reduction gadget, and set-system (matroid-style) checks over the
connected forcing sets of a graph.
"""

from .blocks import (
    BlockDecomposition,
    FamilyInfo,
    PendantPath,
    block_decomposition,
    classify_family,
    pendant_path_count,
    pendant_path_vertices,
    pendant_paths,
)
from .exact import (
    SolveResult,
    connected_forcing_number_exact,
    connected_subset_masks,
    enumerate_connected_forcing_sets,
    spread_zc,
    zero_forcing_number,
)
from .families import (
    block_graph_zc,
    cactus_zc,
    connected_forcing_number,
    greedy_zc,
    tree_zc,
    unicyclic_zc,
)
from .forcing import (
    ColoringTrace,
    derive,
    is_connected_set,
    is_forcing_set,
)
from .generators import (
    GeneratorSpec,
    complete_graph,
    cycle_graph,
    g1_spread_edge,
    g1_spread_graph,
    g2_spread_edge,
    g2_spread_graph,
    generate,
    path_graph,
    random_block_pendant_free,
    random_cactus_pendant_free,
    random_connected,
    random_outer_cactus,
    random_tree,
    random_unicyclic,
    spider_graph,
    star_graph,
)
from .graph_io import parse_graph, read_dimacs, read_edge_list, to_dot, write_edge_list
from .graphs import Graph, build_graph, connected_components, is_connected
from .setsystems import (
    AxiomReport,
    EqualityReport,
    ReductionInstance,
    ReductionReport,
    SetFamily,
    check_axioms,
    czf_reduction,
    equality_report,
    forcing_complement_family,
    verify_reduction,
)
from .structure import (
    CycleContext,
    StructuralSets,
    cycle_context,
    lower_bounds,
    structural_sets,
)
from .validation import CorpusConfig, ValidationReport, ValidationRow, validate_corpus

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "BlockDecomposition",
    "ColoringTrace",
    "CorpusConfig",
    "CycleContext",
    "EqualityReport",
    "FamilyInfo",
    "GeneratorSpec",
    "Graph",
    "PendantPath",
    "ReductionInstance",
    "ReductionReport",
    "SetFamily",
    "SolveResult",
    "StructuralSets",
    "ValidationReport",
    "ValidationRow",
    "block_decomposition",
    "block_graph_zc",
    "build_graph",
    "cactus_zc",
    "check_axioms",
    "classify_family",
    "complete_graph",
    "connected_components",
    "connected_forcing_number",
    "connected_forcing_number_exact",
    "connected_subset_masks",
    "cycle_context",
    "cycle_graph",
    "czf_reduction",
    "derive",
    "enumerate_connected_forcing_sets",
    "equality_report",
    "forcing_complement_family",
    "g1_spread_edge",
    "g1_spread_graph",
    "g2_spread_edge",
    "g2_spread_graph",
    "generate",
    "greedy_zc",
    "is_connected",
    "is_connected_set",
    "is_forcing_set",
    "lower_bounds",
    "parse_graph",
    "path_graph",
    "pendant_path_count",
    "pendant_path_vertices",
    "pendant_paths",
    "random_block_pendant_free",
    "random_cactus_pendant_free",
    "random_connected",
    "random_outer_cactus",
    "random_tree",
    "random_unicyclic",
    "read_dimacs",
    "read_edge_list",
    "spider_graph",
    "spread_zc",
    "star_graph",
    "structural_sets",
    "to_dot",
    "tree_zc",
    "unicyclic_zc",
    "validate_corpus",
    "verify_reduction",
    "write_edge_list",
    "zero_forcing_number",
]
