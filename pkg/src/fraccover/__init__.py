"""Exact fractional cover numbers of graphs over hereditary subgraph families."""

from .bounds import BoundReport, ab_colorable_bound, kneser_beta_lower_bound, n_colorable_bound, verify_hom_bound
from .cover import (
    CoverSolution,
    Monotonicity,
    SequenceReport,
    Strategy,
    cc_cover_sequence,
    cover_number,
    dual_clique_value,
    fractional_chromatic_number,
    kk_cover_sequence,
    vt_cover_number,
)
from .families import FamilyKind, WeightedVertexSet, beta_k, enumerate_maximal, is_member, max_weight_member
from .graph import (
    Graph,
    build_graph,
    chromatic_number,
    clique_number,
    complement,
    complete,
    conormal_product,
    cycle,
    find_homomorphism,
    has_clique_of_size,
    is_ab_colorable,
    is_k_colorable,
    is_vertex_transitive,
    kneser,
    petersen,
)
from .graphspec import parse_graph_spec, read_edge_list, write_edge_list
from .lp import CoveringLp, LpSolution, LpStatus, format_rational, parse_rational, rational_op, solve_covering_lp

__version__ = "0.1.0"
