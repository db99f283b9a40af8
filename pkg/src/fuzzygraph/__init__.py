"""Fuzzy graph analysis: strength of connectedness, alpha/beta/delta edges,
geodesic Wiener and connectivity indices, fuzzy trees and saturated cycles."""

from .closed_form import (
    CycleSpec,
    antipodal_ds,
    corrected_wiener,
    generate_saturated_cycle,
    incorrect_wiener_theorem_star,
    pairs_by_geodesic_length,
)
from .connectivity import (
    EdgeLabel,
    StrengthMatrix,
    classify_edges,
    conn_without_edge,
    is_strong_path,
    strength_matrix,
)
from .graph import (
    FuzzyGraph,
    GraphError,
    ParseError,
    PathRecord,
    build_graph,
    edge_key,
    format_graph,
    parse_graph_file,
    read_graph,
)
from .indices import (
    GeodesicSet,
    IndexReport,
    NoStrongPathError,
    connectivity_index,
    ds,
    geodesics,
    index_report,
    wiener_index,
)
from .structures import (
    SpanningTree,
    is_fuzzy_cycle,
    is_fuzzy_tree,
    is_saturated_cycle,
    maximum_spanning_tree,
    saturated_parameters,
)

__version__ = "0.1.0"
