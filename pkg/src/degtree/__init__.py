"""Low-weight bounded-degree spanning trees of Euclidean point sets."""

from .degree_bounded import (
    CoveringPath,
    DegreeBoundedTree,
    build_tree3,
    build_tree3_highdim,
    build_tree4,
    grouped_anchored_path,
    per_vertex_guarantee_check,
    shortest_anchored_path,
    shortest_covering_path,
    try_all_roots,
)
from .errors import DegenerateAngleError, InfeasibleError, InvalidInputError, ResourceLimitError
from .geometry import (
    PointSet,
    angle_at,
    distance,
    polygon_perimeter,
    tetrahedron_sum_slack,
    triangle_bound_slack,
)
from .instances import (
    InstanceSpec,
    gen_grid,
    gen_pentagon_centroid,
    gen_random_uniform,
    gen_sphere_shell,
    gen_square_center,
    gen_staircase_bad,
    generate,
)
from .mst import RootedTree, SpanningTree, compute_mst, max_degree, root_at_leaf, validate_mst_angles
from .oracle import OracleResult, enumerate_spanning_trees, optimal_degree_k_tree
from .report import RatioReport, evaluate_instance

__version__ = "0.1.0"
