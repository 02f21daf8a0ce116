"""Greedy solvers, exact oracles and cost-ledger checks for graph
domination problems: plain domination, k-tuple domination (every vertex
needs k chosen vertices in its closed neighborhood) and k-domination
(every non-chosen vertex needs k chosen neighbors)."""

from .exact import (
    DEFAULT_MAX_N,
    ExactResult,
    InstanceTooLargeError,
    exact_minimum,
    exact_minimum_naive,
    verify_monotonicity,
)
from .generators import FAMILIES, FamilySpec, generate, splitmix64
from .graph import Graph, GraphError
from .graphio import (
    CSV_COLUMNS,
    FORMATS,
    FormatError,
    parse_dimacs,
    parse_edge_list,
    parse_graph,
    report_to_dict,
    solution_from_dict,
    solution_to_dict,
    write_dimacs,
    write_edge_list,
    write_graph,
    write_report_csv,
    write_report_json,
)
from .harness import (
    CorpusEntry,
    CorpusSummary,
    GapWitnessCheck,
    RatioReport,
    check_ratio_improvement,
    default_corpus,
    gap_witness_check,
    run_corpus,
    run_entry,
    summarize,
    approximation_bound,
    verify_instance,
)
from .ledger import (
    CostLedger,
    build_ledger,
    check_harmonic_inequalities,
    check_harmonic_log_bound,
    check_neighborhood_bound,
    check_residual_decomposition,
    check_subset_cost_bound,
    check_sum_identity,
    harmonic,
)
from .solvers import (
    IterationRecord,
    KOutOfRangeError,
    Mode,
    Solution,
    greedy_dominating_set,
    greedy_kdominating_set,
    greedy_ktuple_dominating_set,
    is_valid_solution,
    solve,
    verify_greedy_optimality,
)

__all__ = [
    "CSV_COLUMNS",
    "DEFAULT_MAX_N",
    "FAMILIES",
    "FORMATS",
    "CorpusEntry",
    "CorpusSummary",
    "CostLedger",
    "ExactResult",
    "FamilySpec",
    "FormatError",
    "GapWitnessCheck",
    "Graph",
    "GraphError",
    "InstanceTooLargeError",
    "IterationRecord",
    "KOutOfRangeError",
    "Mode",
    "RatioReport",
    "Solution",
    "build_ledger",
    "check_harmonic_inequalities",
    "check_harmonic_log_bound",
    "check_neighborhood_bound",
    "check_ratio_improvement",
    "check_residual_decomposition",
    "check_subset_cost_bound",
    "check_sum_identity",
    "default_corpus",
    "exact_minimum",
    "exact_minimum_naive",
    "gap_witness_check",
    "generate",
    "greedy_dominating_set",
    "greedy_kdominating_set",
    "greedy_ktuple_dominating_set",
    "harmonic",
    "is_valid_solution",
    "parse_dimacs",
    "parse_edge_list",
    "parse_graph",
    "report_to_dict",
    "run_corpus",
    "run_entry",
    "solution_from_dict",
    "solution_to_dict",
    "solve",
    "splitmix64",
    "summarize",
    "approximation_bound",
    "verify_greedy_optimality",
    "verify_instance",
    "verify_monotonicity",
    "write_dimacs",
    "write_edge_list",
    "write_graph",
    "write_report_csv",
    "write_report_json",
]

__version__ = "0.1.0"
