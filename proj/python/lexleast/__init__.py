"""Lexicographically least square-free words over the non-negative integers.

Words cross the boundary as plain lists of ints; parse_word/format_word
convert to and from the digit-string and comma-separated text forms.
"""

from lexleast._core import (
    b_word,
    c_word,
    check_ids,
    compute_l_prefix,
    constant,
    decompose_psq,
    format_word,
    generates,
    has_square,
    has_square_suffix,
    induce_prefix,
    is_irreducible,
    letter_pair_test,
    morphism_apply,
    morphism_image,
    p_word,
    parse_word,
    restrictions,
    ruler_inverse,
    ruler_prefix,
    run_check,
    run_checks,
    slice_word,
    square_endpoints,
    successor,
    sufficient_check,
    t_word,
    y_word,
)

__all__ = [
    "b_word",
    "c_word",
    "check_ids",
    "compute_l_prefix",
    "constant",
    "decompose_psq",
    "format_word",
    "generates",
    "has_square",
    "has_square_suffix",
    "induce_prefix",
    "is_irreducible",
    "letter_pair_test",
    "morphism_apply",
    "morphism_image",
    "p_word",
    "parse_word",
    "restrictions",
    "ruler_inverse",
    "ruler_prefix",
    "run_check",
    "run_checks",
    "slice_word",
    "square_endpoints",
    "successor",
    "sufficient_check",
    "t_word",
    "y_word",
]
