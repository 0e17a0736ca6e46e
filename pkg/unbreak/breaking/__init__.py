from .break_alg import (
    BreakOutcome,
    break_alg,
    min_vertex_cut,
    find_witness_large_components,
    find_witness_small_components,
    split_components,
)
