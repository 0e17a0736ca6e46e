from .instances import (
    MwcuInstance,
    RbcuInstance,
    PendantInstance,
    read_mwcu,
    parse_mwcu_lines,
    default_s_of_k,
    constant_schedule,
)
from .mwcu import (
    BranchStats,
    mwcu_to_rbcu,
    rbcu_check,
    rbcu_solve_unbreakable,
    mwcu_solve_unbreakable,
    candidate_sets,
)
from .pendant import pendant_check, pendant_size_bound, pendant_solve_unbreakable
from .treewidth import treewidth, treewidth_at_most, treewidth_upper_bound
from .bounds import separation_bound_check
