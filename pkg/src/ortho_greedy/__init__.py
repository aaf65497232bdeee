"""Greedy rectilinear drawings of plane graphs.

Decide whether a rectilinear representation admits a greedy drawing, build
minimum-area greedy drawings, generate universal greedy representations and
check drawings with independent geometric oracles.
"""

from .convexity import ConvexityReport, check_convex
from .coords import (
    InequalitySystem,
    assemble_drawing,
    build_system,
    draw_tree,
    draw_with_orderings,
    solve_min,
    solve_unit,
)
from .fixtures import exponential_instance as build_exponential_fixture
from .ordering import (
    StOrdering,
    check_good,
    construct_good_sp,
    find_good_ordering,
    recognize_series_parallel,
)
from .pipeline import cmd_corpus, cmd_pipeline, test_greedy
from .repgraph import (
    Drawing,
    Edge,
    RectilinearRepresentation,
    classify_flat_vertices,
    count_leaves,
    is_biconnected,
    parse,
    serialize,
)
from .shapedags import Conflict, ShapeDag, build_shape_dag, comparable, enumerate_conflicts
from .universal import (
    UniversalityVerdict,
    add_flat_vertex,
    add_k_reflex,
    draw_universal_min_area,
    generate_universal,
    staircase_oracle,
    test_universal,
)
from .verify import cell_geometry, conflicts_satisfied, dilation, is_greedy

__version__ = "0.1.0"
