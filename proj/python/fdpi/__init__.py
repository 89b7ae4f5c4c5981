"""First-degree prime ideals in composite number fields.

Polynomials are lists of integer coefficients in ascending order.
"""

from ._fdpi import (
    Error,
    bench_census,
    build_compositum,
    chi_generator,
    combination_divides,
    composite_resultant,
    discriminant,
    factor_base,
    ideal_norm,
    roots_mod_p,
    verify_paper_examples,
)

__all__ = [
    "Error",
    "bench_census",
    "build_compositum",
    "chi_generator",
    "combination_divides",
    "composite_resultant",
    "discriminant",
    "factor_base",
    "ideal_norm",
    "roots_mod_p",
    "verify_paper_examples",
]
