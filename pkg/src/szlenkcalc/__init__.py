"""szlenkcalc: exact symbolic calculator for the ordinal and tree
combinatorics behind Szlenk-index closed forms.

Everything is computed exactly: ordinals in Cantor normal form below
epsilon_0, arbitrary-precision rationals, explicit finite trees, and the
recursive hierarchy carrying the branch-probability weights.
"""

from .errors import (
    CalcError,
    DomainError,
    InvariantViolationError,
    MixedEpsilonError,
    NotALimitError,
    NotMaximalError,
    NotMemberError,
    ParseError,
    PreconditionError,
    SizeBoundError,
)
from .hierarchy import (
    Decomposition,
    GammaNode,
    Membership,
    branch_distribution,
    classify,
    decompose,
    enumerate_truncated,
    level_of,
    parse_gamma_node,
    probability,
    random_maximal_node,
    render_gamma_node,
    same_unit,
    stage_of,
    truncation_tree,
)
from .ordinals import (
    INFINITY,
    OMEGA,
    ONE,
    ZERO,
    ExtOrdinal,
    InfinityType,
    Ordinal,
    cofinality,
    fundamental_sequence,
    gamma_of,
    is_gamma_number,
    left_subtract,
    omega_pow,
    parse_ext_ordinal,
    parse_ordinal,
    render_ext_ordinal,
    render_ordinal,
    set_max_nesting_depth,
)
from .rationals import Rational, parse_rational, render_rational
from .szlenk import (
    EXACT,
    UPPER,
    DerivationBound,
    NormingParams,
    attainable,
    family_derivation_bound,
    sz_c_interval,
    sz_ck,
    sz_convex_hull,
    sz_geometric_family,
    sz_max_rule,
    sz_staircase_family,
    sz_union_bound,
)
from .trees import (
    BnFamily,
    BnNode,
    FiniteTree,
    IntervalDerivStage,
    bn_derived_member,
    cb_interval_derivative,
    cb_interval_index,
    chain_tree,
    derive_tree,
    embed_exists_bruteforce,
    monotone_embed,
    parse_bn_node,
    parse_tree,
    quotient_tree,
    quotient_tree_order_oracle,
    quotient_tree_stages,
    render_bn_node,
    render_tree,
    scale_block_index,
    tree_order,
)

__version__ = "0.1.0"
