# BSD 3-Clause License
# Copyright (c) 2023, DaisyHamming contributors. All rights reserved.
# See README.md for the full license text.

"""Daisy graphs of rooted Hamming graphs.

Construction and recognition of daisy graphs, isometry checking through
pseudo-medians, Djokovic and Delta edge classes, daisy peripheral expansion
and contraction, and an exhaustive verification harness.
"""

from .common import Verdict
from .config import Settings, get_settings
from .daisy import (
    DaisyGraph,
    Relabeling,
    build_daisy,
    canonical_minimal_host,
    daisy_cube_of_singleton,
    daisy_pair_geodesic,
    enumerate_daisy_graphs,
    enumerate_daisy_sets_by_filtering,
    enumerate_downsets,
    from_vertices,
    is_daisy,
    is_isometric_daisy,
    is_minimal_host,
    minimal_generators,
)
from .document import GraphDocument, parse, serialize, to_dot, to_gml
from .errors import (
    BudgetExceededError,
    CoverError,
    DocumentError,
    GraphError,
    ShapeError,
    TheoremViolation,
)
from .expansion import (
    ContractionResult,
    CoverFamily,
    DecompositionStep,
    ExpansionRecord,
    contract,
    contract_generic,
    daisy_peripheral_expand,
    decompose_to_k1,
    expand,
    replay,
    validate_cover,
)
from .hamming import (
    Shape,
    Vertex,
    enumerate_vertices,
    hamming_distance,
    hamming_interval,
    is_adjacent,
    unit_vertex,
)
from .medians import (
    MedianTriple,
    PseudoMedians,
    has_small_pseudo_median,
    median_set,
    pseudo_medians,
    quasi_median_hamming,
    rooted_triangle_condition,
    triangle_condition,
)
from .metric import (
    GraphHost,
    HammingHost,
    LabeledGraph,
    bfs_distances,
    cycle_graph,
    edges_share_clique,
    graph_interval,
    is_isometric,
)
from .relations import (
    CoordinateSlice,
    EdgeClass,
    anchored_edge,
    coordinate_slice,
    delta_class_edges_between_contacts,
    delta_classes,
    delta_related,
    is_peripheral_class,
    tilde_related,
    verify_w_equals_wuv,
    w_set,
)
from .verify import (
    COVERAGE,
    COVERAGE_EXCLUSIONS,
    CheckReport,
    RootedInstance,
    check_characterization,
    check_cycle_counterexample,
    check_expansion_theorems,
    check_hamming_triangle_condition,
    check_interval_oracle,
    check_pair_theorem,
    check_quasi_median_agreement,
    check_round_trip,
    check_structure_lemmas,
    check_sufficient_size0,
    check_sufficient_size1,
    run_suite,
)

__version__ = "0.1.0"
