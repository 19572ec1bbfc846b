"""Exact cycle parameters of digraphs and fixed-point bounds for Boolean networks."""

from .boolean_network import (
    BooleanNetwork,
    and_or_labels,
    evaluate,
    fixed_points,
    interaction_graph,
    is_and_or_network,
    is_component_monotone,
    is_monotone,
    signed_interaction_graph,
)
from .constructions import (
    Construction,
    lower_bound_report,
    short_cycle_network,
    special_packing_network,
    threshold_network,
    transitive_tournament_network,
)
from .cycle_params import (
    circumference,
    cycle_parameters,
    exists_principal_path,
    has_independent_cycle_pair,
    is_special_packing,
    max_cycle_packing,
    max_special_packing,
    min_feedback_vertex_set,
)
from .digraph import (
    Cycle,
    Digraph,
    Packing,
    enumerate_chordless_cycles,
    enumerate_cycles,
    strongly_connected_components,
)
from .domination import dominating_selection, min_dominating_set
from .exceptions import (
    AcyclicError,
    BudgetExceeded,
    CapExceeded,
    ConstructionError,
    InessentialInputError,
    NotSpecialError,
    ProjectionError,
)
from .families import build_family, build_k_star
from .oracle import enumerate_monotone_functions, phi_exact, phi_m_exact, verify_theorems
from .pointset import PointSet
from .poset_analysis import (
    Pattern,
    is_lattice,
    longest_chain,
    max_antichain,
    max_pattern,
    monotone_upper_bound,
    project_onto,
    sum_largest_binomials,
)
from .signed import (
    SignedDigraph,
    cycle_sign,
    frustration_index,
    is_balanced,
    nu_plus,
    signed_upper_bound,
    switch,
    switch_network,
    tau_m,
    tau_m_star,
    tau_plus,
)

__version__ = "0.1.0"
