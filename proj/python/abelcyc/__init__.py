"""Cyclic, circular and linear avoidance of abelian and ordinary powers."""

from ._abelcyc import (
    AbelcycError,
    a_infinity_witness,
    apply_morphism,
    build_binary_avoider,
    build_marked_avoider,
    builtin_morphism_names,
    check,
    complement_reverse,
    conjugate,
    count_cyclic_avoiders,
    delta,
    find_witness,
    fixed_point_prefix,
    gcd_criterion,
    justin_factor_witness,
    language_factors,
    min_avoided_abelian_exponent,
    morphism_images,
    parikh,
    thue_morse_factor_witness,
    verify_delta_lemmas,
)

__all__ = [
    "AbelcycError",
    "a_infinity_witness",
    "apply_morphism",
    "build_binary_avoider",
    "build_marked_avoider",
    "builtin_morphism_names",
    "check",
    "complement_reverse",
    "conjugate",
    "count_cyclic_avoiders",
    "delta",
    "find_witness",
    "fixed_point_prefix",
    "gcd_criterion",
    "justin_factor_witness",
    "language_factors",
    "min_avoided_abelian_exponent",
    "morphism_images",
    "parikh",
    "thue_morse_factor_witness",
    "verify_delta_lemmas",
]
