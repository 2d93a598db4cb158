"""Exact domination-family parameters and 3SAT-to-bipartite-graph reductions."""

from ._bipdom import (
    BipdomError,
    CnfInstance,
    Graph,
    ReductionOutput,
    VerificationReport,
    add_edges,
    assignment_to_witness,
    bondage_number,
    closed_neighbors,
    complement_edges,
    domination_number,
    enumerate_minimum_sets,
    evaluate,
    fuzz,
    is_bipartite,
    is_dominating_set,
    is_total_dominating_set,
    isolated_vertices,
    open_neighbors,
    random_instance,
    reduce,
    reinforcement_number,
    remove_edges,
    solve_sat,
    total_bondage_number,
    total_domination_number,
    total_reinforcement_number,
    verify,
    witness_to_assignment,
)

__version__ = "0.1.0"
