"""Exact and sampled expectation bounds for ordered Wishart eigenvalues.

Thin wrapper over the compiled core. Exact quantities come back as canonical
rational strings ("1/16") so nothing is lost to floating point; parse them
with fractions.Fraction when you need arithmetic.
"""

from ._core import (
    bound,
    db_to_gamma,
    diversity_exponent,
    estimate_pep,
    exact_marginal,
    exact_pep,
    normalization_constant,
    ordered_exp_integral,
    psi,
)

__all__ = [
    "bound",
    "db_to_gamma",
    "diversity_exponent",
    "estimate_pep",
    "exact_marginal",
    "exact_pep",
    "normalization_constant",
    "ordered_exp_integral",
    "psi",
]
