"""Exact invariants of dimension-2 regular graded algebras under cyclic actions."""

from .cyclotomic import Cyclotomic, cyc, cyclotomic_polynomial, primitive_root, zeta
from .algebra import (
    AlgebraElement,
    AlgebraSpec,
    Monomial,
    SpecError,
    graded_basis,
    hilbert_dims,
    jordan_spec,
    quantum_spec,
    reduce_product,
    validate_spec,
    veronese_dim,
)
from .automorphisms import (
    CyclicGroupAction,
    GradedAutomorphism,
    apply_automorphism,
    hdet,
    hdet_koszul,
    hdet_normal_recursion,
    hdet_table,
    is_hsl,
    make_cyclic_group,
    make_diagonal_action,
)
from .skew import (
    SkewElement,
    ampleness_report,
    corner_dimension_checks,
    fixed_ring_basis,
    idempotent_e,
    molien_check,
    phi_injectivity_check,
    quotient_by_ideal_e_dims,
    rho_idempotents,
    skew_mul,
)
from .quivers import (
    Quiver,
    bgp_reflect,
    canonical_type,
    components,
    covering_quiver,
    make_canonical_quiver,
    quiver_isomorphic,
    quiver_qs,
    quiver_qsg,
    reflection_search,
)
from .beilinson import gabriel_quiver_oracle, nabla_dim

__version__ = "0.1.0"
