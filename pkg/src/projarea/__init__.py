"""Exact tools for projection mixed-area vectors of polytopes in R^4."""
from .exact import Inertia, Rational, SymMatrix, cmp_sqrt_sum, det, inertia, is_lorentzian, is_rational_square
from .homology import (
    CIFactorization,
    CohoClass,
    PmClass,
    ci_certificate,
    coho_mul,
    eta_of_wedge,
    grass_realizable,
    grass_witness_check,
    q_realizable_p14,
    q_realizable_pm,
)
from .membership import (
    MembershipVerdict,
    Status,
    ZeroOrbitClass,
    classify_zero_orbit,
    lorentz_matrix,
    sample_t2,
    t1_membership,
    t2_membership,
    z_obstruction,
)
from .polygon import ConvexPolygon, hull, minkowski_sum, mixed_area, normalized_area
from .realize import (
    PairCertificate,
    SelfCertificate,
    realize_boundary_positive,
    realize_interior,
    realize_pair,
    realize_self_boundary,
    realize_self_interior,
    realize_zero_entry,
)
from .wedge import (
    PermutedScaling,
    Polytope4,
    WedgeVector,
    act,
    act_on_pair,
    equivalent_over_q,
    equivalent_over_r,
    project,
    symmetric_products,
    wedge,
)

__version__ = "0.1.0"
