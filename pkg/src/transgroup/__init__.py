"""transgroup: exact certification and topological classification of
finitely generated subgroups of the complex numbers built from
transcendental generators.

Quick start::

    from transgroup import parse_group, certify, classify
    v = certify(parse_group("T, T + 1"))        # refuted: contains 1
    c = classify(parse_group("log(2), log(3)"))  # QLike, with a witness
"""

from .algebraic import (
    AlgebraicNumber,
    arith as alg_arith,
    compare_lex,
    conj,
    equals as alg_equals,
    from_fraction,
    from_gaussian,
    from_int,
    im_is_zero,
    is_zero as alg_is_zero,
    make as alg_make,
    sqrt_fraction,
    unit_i,
)
from .elements import (
    Element,
    algebraic_element,
    exp_element,
    log_element,
    make_element,
    pi_element,
    t_element,
    zero_element,
)
from .errors import (
    BudgetExceeded,
    DegreeOverflow,
    DomainError,
    DuplicateExponent,
    InvalidSymbol,
    NonPositiveLogArgument,
    NotDiscrete,
    NotIsolating,
    ParseError,
    PrecisionExhausted,
    SearchExhausted,
    SemanticError,
    TransgroupError,
    UnboundSymbol,
    ZeroExponent,
    ZeroInput,
    ZeroPolynomial,
)
from .groups import (
    CyclicityResult,
    FGGroup,
    GroupVerdict,
    MembershipResult,
    RankResult,
    certify,
    combine,
    exp_group,
    group_make,
    is_cyclic_pair,
    log_group,
    member,
    pair_group,
    rank_q,
)
from .intervals import Box, RealInterval, box_arith, exp_box, log_box, pi_box
from .oracle import BruteMember, EnumerationSpec, brute_member, brute_min_norm, brute_small
from .parser import format_element, format_group, parse_element, parse_group
from .rationals import GaussianRational
from .smallelem import RelationSearchReport, relation_search, small_element
from .symbols import (
    AbstractSymbol,
    ExpSymbol,
    LogAlgSymbol,
    LogPrimeSymbol,
    PiSymbol,
    Symbol,
    bind_abstract,
    exp_symbol,
    log_alg_symbol,
    log_prime_symbol,
    pi_symbol,
    reset_abstract_symbols,
    t_symbol,
)
from .topology import TopologyClass, classify, min_norm, span_dim
from .verdicts import TranscendenceVerdict, TriBool, UnknownReason

__version__ = "0.1.0"
