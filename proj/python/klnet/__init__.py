"""Exact Hecke-algebra computations on star networks.

Permutations are one-line-notation strings ("45312", or comma-separated past
degree 9), polynomials in q are ascending coefficient lists, intervals are
(a, b) pairs.
"""

from ._klnet import (  # noqa: F401
    StarNetwork,
    avoids_pattern,
    below_reversal,
    bruhat_leq,
    build_network,
    classify,
    compose,
    families,
    gap3412,
    identity,
    internal_coefficients_check,
    inverse,
    kl_basis_element,
    kl_polynomial,
    length,
    matches_pattern,
    overlap_poly,
    parse_network,
    phi,
    pi_vd,
    poly_str,
    product_of_reversal_kls,
    q_factorial,
    q_int,
    reduce_by_one,
    reduced_word,
    represented_element,
    reversal,
    run_cli,
    search,
    singdeg,
    symmetry,
    transfer,
    verify,
    zero_defect_family,
)
