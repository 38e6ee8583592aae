"""Total graphs and line graphs: construction, recognition, inversion."""

from .analysis import (
    NeighborhoodProfile,
    PartitionLabeling,
    classify_maximal_clique,
    count_check,
    edge_vertex_check,
    total_edge_count,
    vertex_vertex_profiles,
)
from .constructors import (
    StructureCertificate,
    TotalGraphLayout,
    check_total_of_cycle,
    check_total_of_path,
    line_graph,
    total_graph,
    total_of_complete,
    total_of_cycle,
    total_of_path,
)
from .errors import DomainError, MalformedInputError, PreconditionError, Refusal
from .graph import (
    Graph,
    are_isomorphic,
    canonical_form,
    find_clique_of_size,
    from_edge_list,
    greedy_extend_clique,
    induced_subgraph,
    is_connected,
    maximal_cliques,
)
from .oracle import brute_force_inverse, enumerate_connected_graphs
from .recognition import (
    RecognitionOutcome,
    inverse_total,
    recognize_complete_total,
    verify_partition,
)

__version__ = "0.1.0"
