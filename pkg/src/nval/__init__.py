"""Exact computations for n-valued self-maps of tori.

Maps are unions of affine-linear pieces f^k(t) = (A t + k c)/m + u. The
package checks validity, finds the irreducible partition from the sigma
monodromy, computes Nielsen numbers and fixed points exactly, builds the
finite-valued cover representation F/q, and recovers sigma numerically from
sampled maps.
"""

from .crabb import FiniteValuedRep, fiber_check, nielsen_crabb, to_finite_valued
from .document import dump_map, load_map, read_map
from .exactlin import affine_lattice_hit, det, snf, solve_lattice, solve_torus_congruence
from .monodromy import (
    Permutation,
    irreducible_partition,
    is_split,
    orbits,
    sigma_generators,
)
from .nielsen import fixed_points, nielsen_composite, nielsen_linear
from .nvmaps import (
    CompositeMap,
    LinearPiece,
    evaluate,
    pairwise_disjoint,
    single,
    validate_composite,
    validate_piece,
)

__version__ = "0.1.0"
