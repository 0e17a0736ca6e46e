from .Graph import (
    Graph,
    Separation,
    BreakParams,
    is_separation,
    is_witnessing,
    is_witnessing_at,
    connected_components,
    induced_subgraph,
    subgraph_with_edge_map,
    remove_vertices,
    remove_edges,
    neighborhood,
)
from .Boundaried import (
    Kind,
    Element,
    TypeSignature,
    BoundariedGraph,
    Structure,
    BoundariedStructure,
    GlueResult,
    glue_graphs,
    compatible,
    compatibility_key,
    glue_structures,
    append,
    empty_context,
)
from .canonical import canonical_code, canonical_form, MAX_CANONICAL_VERTICES
from .exceptions import (
    InputFileError,
    BudgetExceededError,
    IncompatibleStructuresError,
    NoDisjointCutError,
    InternalFaultError,
)
from .readwrite import (
    read_graph,
    parse_graph,
    write_graph,
    format_graph,
    read_boundaried_structure,
    parse_boundaried_lines,
    write_boundaried_structure,
    format_boundaried_structure,
)
