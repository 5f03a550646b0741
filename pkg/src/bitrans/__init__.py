"""Minimal transversals of hypergraphs and of red/blue hypergraph pairs.

The package enumerates minimal transversals (hypergraph dualization),
bi-objective minimal transversals of paired red/blue hypergraphs via a
two-phase reduction through minimal B-sets, minimal models of monotone
and-or-and formulas, and two gadget generators that embed 3-SAT into the
bi-objective problem. Every enumeration engine ships with a brute-force
oracle and a solution checker.
"""

from .core import (
    BiInstance,
    BitSet,
    EdgeSubset,
    Error,
    Hypergraph,
    InvalidSolutionError,
    ParseError,
    ResourceLimitError,
    SideConditionError,
    SolutionSet,
    UnsatisfiableError,
    VertexSet,
    bit_indices,
    blue_star,
    f_predicate,
    hit_edges,
    is_transversal,
    minimize_within,
    s_of_b,
)
from .dualize import (
    berge_dualize,
    brute_force_dualize,
    dual_check,
    self_duality_check,
    transversals_allowing_empty,
)
from .biobj import (
    BiSolution,
    bi_transversals,
    bidual_check,
    brute_force_btr,
    brute_force_minimal_bsets,
    build_ha,
    lemma2_check,
    minimal_bsets,
)
from .formula import (
    Formula3,
    evaluate,
    format_formula,
    formula_to_instance,
    gen_check,
    instance_to_formula,
    minimal_models,
    parse_formula,
)
from .generators import (
    SatInstance,
    extract_assignment,
    parse_dimacs,
    random_bi_instance,
    reduce_deg3,
    reduce_dim2,
    side_condition_holds,
)
from .cli import OracleMismatchError, load_hypergraph, load_instance, main

__version__ = "0.1.0"

__all__ = [
    "BiInstance",
    "BiSolution",
    "BitSet",
    "EdgeSubset",
    "Error",
    "Formula3",
    "Hypergraph",
    "InvalidSolutionError",
    "OracleMismatchError",
    "ParseError",
    "ResourceLimitError",
    "SatInstance",
    "SideConditionError",
    "SolutionSet",
    "UnsatisfiableError",
    "VertexSet",
    "berge_dualize",
    "bi_transversals",
    "bidual_check",
    "bit_indices",
    "blue_star",
    "brute_force_btr",
    "brute_force_dualize",
    "brute_force_minimal_bsets",
    "build_ha",
    "dual_check",
    "evaluate",
    "extract_assignment",
    "f_predicate",
    "format_formula",
    "formula_to_instance",
    "gen_check",
    "hit_edges",
    "instance_to_formula",
    "is_transversal",
    "lemma2_check",
    "load_hypergraph",
    "load_instance",
    "main",
    "minimal_bsets",
    "minimal_models",
    "minimize_within",
    "parse_dimacs",
    "parse_formula",
    "random_bi_instance",
    "reduce_deg3",
    "reduce_dim2",
    "s_of_b",
    "self_duality_check",
    "side_condition_holds",
    "transversals_allowing_empty",
    "__version__",
]
