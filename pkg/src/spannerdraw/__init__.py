"""Straight-line graph drawings with spanning ratio arbitrarily close to 1,
with exact verification of the geometric and metric guarantees."""

from .bounds import (
    ANNULUS_PACKING_CONSTANT,
    AnnulusCensus,
    AnnulusCheckResult,
    annulus_bound_check,
    annulus_census,
    is_sr1_drawing,
    planar_sr1_witness,
    recognize_planar_sr1,
    recognize_sr1,
    sr1_witness,
    star_elr_lower_bound,
)
from .drawing import Drawing
from .embedding import (
    CanonicalOrder,
    RotationSystem,
    augment_to_maximal_with_canonical_order,
    canonical_order_validate,
    planarity_test_embed,
)
from .errors import (
    DegreeTargetMissed,
    InstanceTooLarge,
    NotATreeError,
    NotConnectedError,
    NotPlanarError,
    SpannerDrawError,
    TooSmallError,
)
from .exact import Interval, sqrt_interval
from .graph import (
    Graph,
    RootedTree,
    VertexOrder,
    degree_bounded_spanning_tree,
    edge_separator,
    hamiltonian_path,
    hamiltonian_path_exists,
    is_connected,
    toughness_bruteforce,
)
from .layout import (
    Epsilon,
    ToughDrawResult,
    draw_graph_via_tough_tree,
    draw_planar_spanner,
    draw_proper_spanner,
    draw_tree_planar,
    draw_tree_planar_with_stats,
    draw_tree_proper,
    place_next_vertex,
)
from .metrics import (
    DEFAULT_REL_TOL,
    MetricReport,
    compute_metrics,
    edge_length_ratio,
    is_planar_drawing,
    is_proper_drawing,
    min_pairwise_distance_sq,
    no_three_collinear,
    spanning_ratio,
    spanning_ratio_bruteforce,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "1.0.0"
