"""widthlab: support-function computations for constant-width convex bodies.

Bodies are exact support oracles (point hulls, balls, ball intersections,
Minkowski combinations, similarity images, reflections); on top of them sit
width functions and constant-width classification, Chebyshev balls, canonical
constant-width constructions, pair-level maps, and rank experiments.
"""

from .bodies import (
    Ball,
    BallIntersection,
    Body,
    MinkComb,
    PointHull,
    Reflected,
    SimImage,
    SupportSample,
    apply_similarity,
    minkowski,
    reflect,
    sample_support,
    support,
    support_point,
    support_points,
    support_values,
)
from .chebyshev import ChebyshevData, chebyshev, min_enclosing_ball_points, minimax_center
from .config import DEFAULT_TOLERANCES, Tolerances, thread_cap
from .constructions import (
    Interval1D,
    PairParams1D,
    interval_pair_to_params,
    interval_to_width_mid,
    params_to_interval_pair,
    random_cw_body_2d,
    reuleaux_polygon,
    reuleaux_triangle,
    reuleaux_vertices,
    rotated_family,
    tetra_ball_body,
    width_mid_to_interval,
)
from .errors import (
    BodySchemaError,
    CheckFailedError,
    DimensionMismatchError,
    EmptyIntersectionError,
    FiberMismatchError,
    InvalidBoundError,
    MaxIterationsError,
    NotConstantWidthError,
    UnsupportedDimensionError,
    WidthLabError,
)
from .experiments import (
    GramReport,
    PatternCheck,
    ball_intersection_width_sweep,
    gram_rank,
    rotated_support_pattern_check,
    support_matrix,
    width_sweep_csv,
)
from .grids import DirectionGrid, direction_grid, grid_from_json
from .pairs import (
    BodyPair,
    FiberPoint,
    NormBoundReport,
    SumWidthReport,
    ball_homotopy,
    certify_pair,
    combine_pairs,
    combine_pairs_in_fiber,
    diagonal_pair,
    pair_half_sum,
    pair_norm_bound_check,
    pair_sum_width_check,
    relative_width_values,
    width_and_center,
)
from .serialization import body_from_json, body_to_json, body_to_json_str, load_body, save_body
from .transforms import Similarity, identity_similarity, rotation_2d, translation
from .widths import (
    WidthRange,
    WidthReport,
    WidthVerdict,
    classify_constant_width,
    diameter,
    hausdorff_distance,
    relative_width,
    width,
    width_profile_csv,
    width_report,
)

__version__ = "0.1.0"
