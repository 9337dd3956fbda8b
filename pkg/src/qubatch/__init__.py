"""Quasi-uniform batch codes from the subgroup lattice of (Z_p)^k."""

from .batch import (BatchCode, RecoveryPlan, build_batch_code, build_from_positions,
                    build_full_lattice_batch_code, length_bound, repair_symbol, serve_request)
from .errors import (AmbiguousDecodeError, CapacityExceededError, CapExceededError,
                     DimensionMismatchError, DomainError, InvalidPlanError, IrreparableError,
                     NontrivialIntersectionError, NotACodewordError, QubatchError)
from .fplinalg import (FpVector, Subspace, contains, gaussian_binomial, intersect,
                       meets_trivially, rref, sum_subspaces)
from .lattice import (LatticeSlice, complements_of, enumerate_lattice, enumerate_subspaces,
                      superspaces_containing)
from .quasicode import QuasiUniformCode, SubgroupSystem, build_code
from .recovery import (IntersectionGraph, Matching, build_bipartite_graph, build_halfdim_graph,
                       connected_components, degree_profile, edge_connectivity, find_triangle,
                       max_bipartite_matching, max_general_matching)

__version__ = "0.1.0"
