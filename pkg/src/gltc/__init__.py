"""Exact solver for the generalized list T-coloring decision problem.

Given a graph, a finite list of permitted labels per vertex and a set of
forbidden label differences per edge (always containing 0), decide
whether a labeling exists that respects every list and avoids every
forbidden difference — and produce one when it does. The solver is a
label-by-label dynamic program over trie-compressed state-vector sets,
decomposed over a pluggable vertex partition; reductions from list
coloring, L(p,q)-labeling, channel assignment and T-coloring are
included, along with a brute-force reference solver.
"""

from .encoding import (
    BLOCKED,
    OPEN,
    advance_preimage_pairs,
    advance_symbol,
    advance_vector,
    format_vector,
    instance_tau,
    is_complete,
    mark_blocked,
    symbol_alphabet,
)
from .gen import random_instance
from .indsets import independent_set_vectors, restrict_prefix
from .instance import (
    Graph,
    Instance,
    InstanceStats,
    ParseError,
    compress_gaps,
    connected_components,
    gap_compression,
    graph_square,
    induced_instance,
    parse_instance,
    reduce_channel,
    reduce_list_coloring,
    reduce_lpq,
    reduce_tcoloring,
    serialize_instance,
    split_components,
    validate,
)
from .oracle import brute_force_solve, extension_predicate
from .partition import (
    CLIQUE,
    SINGLETON,
    STAR,
    Block,
    ComplexityEstimate,
    NotK1dFreeError,
    Partition,
    base_table_row,
    bfs_spanning_tree,
    build_partition,
    clique_partition,
    feasible_prefixes,
    predict_complexity,
    singleton_partition,
    star_block_base,
    star_partition_k1d,
    star_partition_spanning_tree,
    star_prefix_bound,
    tree_longest_path,
    validate_partition,
)
from .solver import (
    LevelTable,
    ResourceLimitError,
    SolveOptions,
    SolveResult,
    SolveStats,
    Witness,
    apply_bar_level,
    check_witness,
    compute_step,
    direct_step,
    reconstruct_witness,
    solve,
)
from .vectorset import LEAF, VectorTrie

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
