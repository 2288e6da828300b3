"""Exact chromatic symmetric functions in the elementary basis.

Closed-form expansions for paths, cycles, tadpoles, and chorded
cycles, an independent edge-subset oracle for arbitrary graphs, and
e-positivity certification, all in exact integer arithmetic.
"""

from .compositions import (
    Composition,
    Partition,
    SegmentDissection,
    SplitParams,
    chord_weight,
    chord_weight_by_segments,
    composition_weight,
    compositions,
    deficiency,
    dominance_leq,
    e2_sym,
    partition_of,
    partitions,
    reverse,
    reverse_tail,
    segment_dissection,
    split_params,
    surplus,
)
from .engine import (
    DEFAULT_MAX_EDGES,
    ThetaScanRow,
    VerificationReport,
    check_triple_deletion,
    closed_formula,
    csf_cycle,
    csf_cycle_chord,
    csf_cycle_chord_signed,
    csf_oracle,
    csf_path,
    csf_tadpole,
    scan_theta,
    signed_chord_weight,
    theta_scan_cells,
    verify,
)
from .graphs import (
    Family,
    Graph,
    GraphSpec,
    ResourceLimitError,
    build_graph,
    chromatic_polynomial,
    component_partition,
    count_proper_colorings,
    cycle_chord_graph,
    cycle_graph,
    is_nice,
    multipath_graph,
    path_graph,
    render_graph_spec,
    stable_partition_types,
    tadpole_graph,
    theta_graph,
    triple_split_graphs,
)
from .symfunc import (
    Basis,
    EPositivityReport,
    SymFunc,
    from_json_dict,
    is_e_positive,
    monomial,
    p_to_e,
    principal_specialization,
    render_latex,
    render_text,
    to_json_dict,
)

__version__ = "0.1.0"
