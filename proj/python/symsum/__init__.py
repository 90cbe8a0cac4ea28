"""Symmetric sums of monomials over pairwise-distinct unit-subgroup elements."""

from symsum._core import (
    Evaluation,
    ExponentMultiset,
    InclusionExclusionCheck,
    Method,
    ModRing,
    Monomial,
    MonomialPolynomial,
    NicenessReport,
    ParseError,
    PolynomialEvaluation,
    Reduction,
    RingElement,
    TermEvaluation,
    UnitSubgroup,
    VanishingWitness,
    brute_force_p,
    brute_force_p_sharp,
    canonical_partition,
    check_inclusion_exclusion,
    chi,
    closed_form_p,
    closed_form_weight,
    closed_form_weight_enumerated,
    element_order,
    eval_sum,
    evaluate,
    example1_condition,
    example2_condition,
    full_unit_group,
    generated_subgroup,
    group_exponent,
    is_a_nice,
    make_ring,
    method_name,
    minimax_fast,
    minimax_scan,
    nth_residue_subgroup,
    parse_polynomial,
    polynomial_to_string,
    reduce,
    valid_partitions,
    valid_partitions_naive,
    vanishing_witness,
)

__all__ = [
    "Evaluation",
    "ExponentMultiset",
    "InclusionExclusionCheck",
    "Method",
    "ModRing",
    "Monomial",
    "MonomialPolynomial",
    "NicenessReport",
    "ParseError",
    "PolynomialEvaluation",
    "Reduction",
    "RingElement",
    "TermEvaluation",
    "UnitSubgroup",
    "VanishingWitness",
    "brute_force_p",
    "brute_force_p_sharp",
    "canonical_partition",
    "check_inclusion_exclusion",
    "chi",
    "closed_form_p",
    "closed_form_weight",
    "closed_form_weight_enumerated",
    "element_order",
    "eval_sum",
    "evaluate",
    "example1_condition",
    "example2_condition",
    "full_unit_group",
    "generated_subgroup",
    "group_exponent",
    "is_a_nice",
    "make_ring",
    "method_name",
    "minimax_fast",
    "minimax_scan",
    "nth_residue_subgroup",
    "parse_polynomial",
    "polynomial_to_string",
    "reduce",
    "valid_partitions",
    "valid_partitions_naive",
    "vanishing_witness",
]
