"""Binomial-weighted power series, their integral twins, and verification tools."""

from ramaseries.series_engine import (
    ConvergenceReport,
    EvalResult,
    SeriesParams,
    convergence_report,
    eval_phi,
    eval_phi_da_direct,
    eval_phi_tilde,
    eval_psi_general,
)
from ramaseries.special_fn import (
    CATALAN,
    EULER_GAMMA,
    DivergenceError,
    DomainError,
    beta_f,
    digamma,
    gamma,
    hurwitz_zeta,
    lerch_phi,
    s_prime,
)

__version__ = "0.1.0"

__all__ = [
    "CATALAN",
    "EULER_GAMMA",
    "ConvergenceReport",
    "DivergenceError",
    "DomainError",
    "EvalResult",
    "SeriesParams",
    "beta_f",
    "convergence_report",
    "digamma",
    "eval_phi",
    "eval_phi_da_direct",
    "eval_phi_tilde",
    "eval_psi_general",
    "gamma",
    "hurwitz_zeta",
    "lerch_phi",
    "s_prime",
    "__version__",
]
