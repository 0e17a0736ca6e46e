from .properties import (
    Property,
    PROPERTIES,
    CARDINALITY_MODES,
    cardinality_property,
    get_property,
    list_properties,
)
from .universe import enumerate_structures, iter_raw_structures, raw_structure_count
from .classes import (
    RepresentativeTable,
    TableClass,
    compute_classes,
    schedule_s,
    evaluation_vector,
    class_of,
)
from .readwrite import read_table, write_table, parse_table, format_table
from .understand import (
    UnbreakableSolver,
    DirectSolver,
    RecursionStep,
    understand_unbreakable,
    split_beta,
    rejoin_gamma,
    understand,
    solve_cmso,
    optimum_value,
)
