"""Exact topological invariants of graph picture spaces."""

from .errors import (
    GraphError,
    GraphParseError,
    GuardExceeded,
    InexactDivision,
    NotAnOrchard,
    PermutationError,
    PicspaceError,
)
from .homology import (
    ParallelVerdict,
    cellule_dimension,
    max_cellules,
    parallel_independent,
    picture_space_dimension_oracle,
    poincare,
    poincare_closed_form,
    poincare_manifold,
)
from .memo import SharedCache
from .multigraph import Multigraph, Partition, parse_graph, partitions, read_graph, unconstrained_count
from .orchard import CohomologyClass, OrchardRing, build_ring, is_orchard
from .polyring import Poly, exact_div, h_poly, q_analogue
from .schubert import (
    Permutation,
    divided_difference,
    intersection_number,
    is_relevant,
    load_conditions,
    pullback_class,
    schubert_polynomial,
)
from .tutte import tutte, tutte_by_subsets

__version__ = "0.1.0"
