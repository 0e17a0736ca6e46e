from .brute import (
    OracleBudget,
    default_max_vertices,
    oracle_witnessing_separation,
    oracle_breakable_by_assignment,
    oracle_mwcu,
    oracle_rbcu,
    oracle_connected_sets,
    oracle_treewidth,
    oracle_pendant,
    oracle_equivalence,
)
