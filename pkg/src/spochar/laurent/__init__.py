from .core import (
    FactoredRational,
    LatticeMismatch,
    LaurentPoly,
    NotDivisible,
    add,
    canonicalize_factor,
    evaluate_at_one,
    exact_div,
    grlex_key,
    kernel_backend,
    mul,
    rational_sum,
    rational_weyl_sum,
)

__all__ = [
    "FactoredRational",
    "LatticeMismatch",
    "LaurentPoly",
    "NotDivisible",
    "add",
    "canonicalize_factor",
    "evaluate_at_one",
    "exact_div",
    "grlex_key",
    "kernel_backend",
    "mul",
    "rational_sum",
    "rational_weyl_sum",
]
