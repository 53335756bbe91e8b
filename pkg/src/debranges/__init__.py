"""Exact-arithmetic toolkit for the Koebe Loewner chain, the de Branges and
Weinstein function systems, orthogonal-polynomial positivity, and Gosper
telescoping certificates.

Everything is computed over arbitrary-precision rationals, so each of the
classical identities connecting these objects can be checked to literal
equality; the ``debranges`` command line exposes tables, evaluations and the
verification sweeps.
"""

from .exact import Poly, Rational, RationalFunction, binomial, format_rational, pochhammer
from .series import ZSeries, chain_pde_residual, koebe, koebe_chain, log_over_z, time_derivative
from .lowner import CoeffTable, chain_poly, coeff_closed, coeff_table, ode_residual, system_residual
from .dbw import (
    PositivityViolation,
    debranges_generating_series,
    debranges_poly,
    debranges_slope_at_zero,
    debranges_system_residual,
    explicit_generating_check,
    jacobi_decomposition_check,
    milin_functional,
    positivity_scan,
    weinstein_coeff,
    weinstein_poly,
    weinstein_series,
)
from .orthopoly import (
    askey_gasper_sum,
    chain_gegenbauer_check,
    gegenbauer_expansion_check,
    gegenbauer_minus_half,
    gegenbauer_partial_sum,
    gegenbauer_partial_sum_scan,
    jacobi_poly,
    jacobi_value,
    to_x,
    to_y,
)
from .hypsum import (
    GosperCertificate,
    HypTerm,
    TermSemanticError,
    TermSyntaxError,
    gosper,
    parse_term,
    pfq_terminating,
    telescoped_sum,
    term_ratio,
    term_value,
    verify_certificate,
    weighted_binomial_sum,
)

__version__ = "0.1.0"

__all__ = [
    "Poly",
    "Rational",
    "RationalFunction",
    "ZSeries",
    "CoeffTable",
    "GosperCertificate",
    "HypTerm",
    "PositivityViolation",
    "TermSemanticError",
    "TermSyntaxError",
    "askey_gasper_sum",
    "binomial",
    "chain_gegenbauer_check",
    "chain_pde_residual",
    "chain_poly",
    "coeff_closed",
    "coeff_table",
    "debranges_generating_series",
    "debranges_poly",
    "debranges_slope_at_zero",
    "debranges_system_residual",
    "explicit_generating_check",
    "format_rational",
    "gegenbauer_expansion_check",
    "gegenbauer_minus_half",
    "gegenbauer_partial_sum",
    "gegenbauer_partial_sum_scan",
    "gosper",
    "jacobi_decomposition_check",
    "jacobi_poly",
    "jacobi_value",
    "koebe",
    "koebe_chain",
    "log_over_z",
    "milin_functional",
    "ode_residual",
    "parse_term",
    "pfq_terminating",
    "pochhammer",
    "positivity_scan",
    "system_residual",
    "telescoped_sum",
    "term_ratio",
    "term_value",
    "time_derivative",
    "to_x",
    "to_y",
    "verify_certificate",
    "weighted_binomial_sum",
    "weinstein_coeff",
    "weinstein_poly",
    "weinstein_series",
]
