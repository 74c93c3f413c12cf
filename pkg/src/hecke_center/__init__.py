"""Exact computations in the center of the Hecke algebra of the
symmetric group: central bases, symmetric-function transition matrices,
and q-character tables, all over Q(q)."""

from .coeff import (
    BIG_Q,
    GEN_Q,
    LaurentPoly,
    QPoly,
    RatFun,
    evaluate,
    parse_scalar,
    qint,
    qint_product,
    rewrite_in_Q,
    scalar_str,
    scalar_str_pretty,
)
from .combi import (
    compositions,
    partitions,
    partition_stats,
    recoils,
    cycle_type,
    coset_representatives,
    project,
    ribbon_compatible,
    standard_tableaux,
    zeta_permutation,
)
from .symfunc import (
    QMatrix,
    SymmetricFunction,
    count_matrices_oracle,
    hook_generating_product,
    multiply as sym_multiply,
    ram_modified,
    transition_matrix,
)
from .hecke import (
    HeckeElement,
    ZHeckeElement,
    descent_l,
    e_generating_product,
    frobenius_phi,
    gen_t,
    is_central,
    jm_element,
    jm_elementary,
    multiply,
    normalize,
    ribbon_r,
    scalar_product,
    signed_sum,
    subgroup_conjugation_sum,
    upsilon,
    xi_monomial,
    yang_baxter,
    yang_baxter_dual_check,
    zeta,
)
from .center import (
    CentralFamily,
    central_family,
    decompose_central,
    diagram_checks,
    family_transition,
    geck_rouquier_basis,
    solomon_identity_check,
    verify_francis,
)
from .characters import (
    CharTable,
    char_table,
    character,
    character_matrix_checks,
    diagonal_matrix,
    family_char_matrix,
    seminormal_rep,
)

__version__ = "0.1.0"
