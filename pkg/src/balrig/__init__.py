"""Balanced shifting of bipartite graphs and balanced complexes, bipartite
rigidity analysis, and exact randomized rank computation over a prime field."""

from .combinat import (
    BalancedComplex,
    BipartiteGraph,
    VertexOrder,
    antistar,
    cone_left,
    cone_right,
    contract,
    delete_vertex,
    f_vector,
    facet_ridge_graph,
    glue,
    induced_subgraph,
    join_complexes,
    link,
    subdivide_star,
    swap_sides,
)
from .errors import (
    BalrigError,
    InputError,
    SizeCapError,
    TrialDisagreementError,
)
from .exactla import (
    DEFAULT_PRIME,
    GenericMatrix,
    PrimeField,
    TrialPolicy,
    greedy_independent_rows,
    sample_theta,
)
from .rigidity import (
    LamanReport,
    RigidityReport,
    analyze,
    build_M,
    build_rigidity_matrix,
    heawood_check,
    laman_check,
    rows_independent_M,
    stress_space,
)
from .shifting import (
    check_shifted,
    contains_complete_bipartite,
    contains_join,
    shift_complex,
    shift_graph,
)

__all__ = [
    "BalancedComplex",
    "BipartiteGraph",
    "BalrigError",
    "DEFAULT_PRIME",
    "GenericMatrix",
    "InputError",
    "LamanReport",
    "PrimeField",
    "RigidityReport",
    "SizeCapError",
    "TrialDisagreementError",
    "TrialPolicy",
    "VertexOrder",
    "analyze",
    "antistar",
    "build_M",
    "build_rigidity_matrix",
    "check_shifted",
    "cone_left",
    "cone_right",
    "contains_complete_bipartite",
    "contains_join",
    "contract",
    "delete_vertex",
    "f_vector",
    "facet_ridge_graph",
    "glue",
    "greedy_independent_rows",
    "heawood_check",
    "induced_subgraph",
    "join_complexes",
    "laman_check",
    "link",
    "rows_independent_M",
    "sample_theta",
    "shift_complex",
    "shift_graph",
    "stress_space",
    "subdivide_star",
    "swap_sides",
]
