"""Best Diophantine approximation over the Gaussian integers.

Continued-fraction machinery built on minimal vectors of rank-two Z[i]
lattices: the two-branch step map on cylinder ratios, the diagonal-flow
cross-section with its invariant density, the critical coefficient-pair
searches, and the sharp complex Dirichlet constant.
"""

from .cfrac import (
    BestApprox,
    TGState,
    best_approximations,
    hurwitz_step,
    lattice_of_theta,
    orbit_statistics,
    tg_step,
)
from .core import (
    GaussInt,
    JElem,
    D8Element,
    D8_ELEMENTS,
    d8_apply,
    gauss_candidates_within_1,
    nearest_gauss,
)
from .critical import CoeffPair, enumerate_pairs, filter_G1, filter_G2, primitive_reduce
from .dirichlet import (
    DirichletReport,
    dirichlet_constant,
    extremal_lattice,
    region_supremum,
    theoretical_constant,
)
from .lattice import (
    Basis2,
    MinPair,
    enumerate_points,
    lex_less,
    norm_uv,
    oracle_consecutive,
    oracle_is_minimal,
)
from .reduction import ReducedBasis, WeightedNorm, first_minimal, gauss_reduce, next_minimal
from .regions import (
    constraint_case,
    d8_normalize_pair,
    dist_C,
    dist_D,
    dist_T,
    in_W1,
    in_W2,
)
from .transversal import (
    TransversalPoint,
    density,
    first_return,
    orbit_sample,
    psi,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
