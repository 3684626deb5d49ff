"""Hamiltonian-connectedness, path length spectra and cycle spectra of small graphs."""

from .constructions import (
    ConstructionError,
    LabeledGraph,
    cycle_gap_family,
    cycle_gap_gadget,
    expected_cycle_gap_spectrum,
    odd_length_gap_base,
    odd_length_gap_family,
    smallest_counterexample,
)
from .cycles import GapMetrics, cycle_spectrum, spectrum_gap_metrics
from .enumerate_small import MAX_ENUM_VERTICES, EnumFilter, enumerate_graphs
from .graphs import (
    Graph,
    GraphError,
    Graph6Error,
    MAX_GRAPH6_VERTICES,
    MAX_VERTICES,
    are_isomorphic,
    decode_graph6,
    encode_graph6,
    is_connected,
    is_k_connected,
    iter_graph6,
)
from .hamilton import (
    MAX_SEARCH_VERTICES,
    RULES_ALL,
    WitnessMatrix,
    find_hamiltonian_path,
    hamiltonian_path_exists,
    is_hamiltonian_connected,
)
from .oracle import (
    OracleBudgetExceeded,
    all_cycle_lengths_naive,
    all_path_lengths_naive,
    ham_connected_naive,
)
from .pathspectra import (
    FilterMode,
    PathLengthAnalyzer,
    PathPropertyWitness,
    classify,
    has_path_property,
    mode_window,
    path_length_set,
)
from .pipeline import (
    AnalysisOutcome,
    FilterReport,
    FlaggedGraph,
    PipelineInputError,
    build_family,
    run_construct_and_analyze,
    run_filter,
)

__all__ = [
    "AnalysisOutcome",
    "ConstructionError",
    "EnumFilter",
    "FilterMode",
    "FilterReport",
    "FlaggedGraph",
    "GapMetrics",
    "Graph",
    "GraphError",
    "Graph6Error",
    "LabeledGraph",
    "MAX_ENUM_VERTICES",
    "MAX_GRAPH6_VERTICES",
    "MAX_SEARCH_VERTICES",
    "MAX_VERTICES",
    "OracleBudgetExceeded",
    "PathLengthAnalyzer",
    "PathPropertyWitness",
    "PipelineInputError",
    "RULES_ALL",
    "WitnessMatrix",
    "all_cycle_lengths_naive",
    "all_path_lengths_naive",
    "are_isomorphic",
    "build_family",
    "classify",
    "cycle_gap_family",
    "cycle_gap_gadget",
    "cycle_spectrum",
    "decode_graph6",
    "encode_graph6",
    "enumerate_graphs",
    "expected_cycle_gap_spectrum",
    "find_hamiltonian_path",
    "ham_connected_naive",
    "hamiltonian_path_exists",
    "has_path_property",
    "is_connected",
    "is_hamiltonian_connected",
    "is_k_connected",
    "iter_graph6",
    "mode_window",
    "odd_length_gap_base",
    "odd_length_gap_family",
    "path_length_set",
    "run_construct_and_analyze",
    "run_filter",
    "smallest_counterexample",
    "spectrum_gap_metrics",
]
