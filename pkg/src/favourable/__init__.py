"""Essential monomials, FFLV polytopes and favourability checks for
sl_{n+1}, sp_{2n} and G_2, all in exact arithmetic."""

__version__ = "0.1.0"

from .rootsys import (  # noqa: E402
    Family,
    GoodOrdering,
    LieType,
    PositiveRoot,
    default_good_ordering,
    enumerate_multiexponents,
    monomial_compare,
    positive_roots,
    validate_good_ordering,
    weyl_dim,
)
from .exactla import EchelonBasis, insert_vector, solve_square  # noqa: E402
from .polytope import (  # noqa: E402
    DyckPath,
    Inequality,
    LatticeSet,
    PolytopeSpec,
    build_polytope,
    check_minkowski_decomposition,
    check_normality,
    dilate,
    dyck_paths,
    gob_generators,
    lattice_points,
    minkowski_sum,
    vertices,
)
from .repmod import (  # noqa: E402
    RepModule,
    apply_monomial,
    cartan_tensor,
    exp_orbit_product,
    exp_orbit_sum,
    rep_sp,
    wedge_rep_sl,
)
from .essential import (  # noqa: E402
    EssentialResult,
    annihilator_generators,
    compare_es_vs_S,
    essential_semigroup_layer,
    essential_set,
    fundamental_essential_A,
    pbw_hilbert,
    structure_constant,
)
from .toric import (  # noqa: E402
    demazure_count_formula,
    demazure_roots,
    fan_rays_A_regular,
    hilbert_function,
    lowest_term_valuation,
    newton_okounkov_check,
    valuation_semigroup_layer,
    verify_fan_rays,
)
