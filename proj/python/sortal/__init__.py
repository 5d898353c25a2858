"""Well-sorted syntax with binders and certified substitution, generated from
multi-sorted binding signatures."""

from sortal._core import (  # noqa: F401
    Argument,
    InvalidSignatureError,
    OpDecl,
    Signature,
    SortalDomainError,
    SortalParseError,
    Term,
    adjunction_suite,
    bind,
    check_against_terms,
    check_dist_laws,
    check_interchange,
    check_monad_laws,
    check_strength_laws,
    coc_example,
    enumerate_terms,
    join,
    level_count,
    mk_op,
    parse_signature,
    parse_term,
    pcf_example,
    serialize_signature,
    stlc_example,
    stlc_finitized,
    subst,
    sum_signatures,
    validate,
    var,
)

__version__ = "0.1.0"
