from .framework.Graph import Graph, Separation
from .framework.Boundaried import (
    BoundariedGraph,
    BoundariedStructure,
    Element,
    Kind,
    Structure,
    TypeSignature,
)
from .breaking.break_alg import break_alg, BreakOutcome
from .universal.universal_set import build_universal_set, verify_universal_set
from .enumeration.connected_sets import ConnectedSetQuery, enum_connected_sets
from .finite_state.understand import understand, solve_cmso
from . import framework as fr
from . import universal as us
from . import breaking as br
from . import enumeration as en
from . import finite_state as fs
from . import applications as ap
from . import oracle as oc
