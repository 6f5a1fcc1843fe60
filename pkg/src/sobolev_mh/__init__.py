"""Varying discrete Jacobi-Sobolev orthogonal polynomials.

Construction of the degree-n orthogonal polynomials of an inner product
with a degree-dependent point mass on a derivative at x = 1, their
endpoint (Bessel-type) limit functions in the three mass-size regimes,
and the scaled-zero tables connecting the two.
"""

from .asymptotics import (
    LimitFunction,
    Regime,
    RegimeKind,
    classify_regime,
    critical_mass_threshold,
    limit_coeffs,
    limit_eval,
    order_zero_identity_residual,
)
from .errors import ConfigError, NumericError
from .jacobi import (
    JacobiParams,
    JacobiSeries,
    clenshaw_eval,
    deriv_at_one,
    derivative_series,
    jacobi_eval,
    norm2,
    scaled_eval,
    value_at_one,
)
from .sobolev import (
    KernelValue,
    MassKind,
    MassSequence,
    SobolevSetup,
    connection_coeffs,
    connection_reconstruct,
    deriv_ratio,
    kernel_at_one,
    mass,
    q_deriv_at_one,
    sobolev_norm2,
    sobolev_polynomial,
)
from .special_functions import bessel_j, bessel_j_zero, gamma_ratio, log_gamma
from .zeros import (
    ConvergenceTable,
    ScaledZeros,
    ZeroLocation,
    ZeroSet,
    convergence_table,
    largest_zero_location,
    limit_zeros,
    scaled_zeros,
    sobolev_zeros,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigError", "ConvergenceTable", "JacobiParams", "JacobiSeries",
    "KernelValue", "LimitFunction", "MassKind", "MassSequence", "NumericError",
    "Regime", "RegimeKind", "ScaledZeros", "SobolevSetup", "ZeroLocation",
    "ZeroSet", "bessel_j", "bessel_j_zero", "classify_regime", "clenshaw_eval",
    "connection_coeffs", "connection_reconstruct", "convergence_table",
    "critical_mass_threshold", "deriv_at_one", "deriv_ratio",
    "derivative_series", "gamma_ratio", "jacobi_eval", "kernel_at_one",
    "largest_zero_location", "limit_coeffs", "limit_eval", "limit_zeros",
    "log_gamma", "mass", "norm2", "order_zero_identity_residual",
    "q_deriv_at_one", "scaled_eval", "scaled_zeros", "sobolev_norm2",
    "sobolev_polynomial", "sobolev_zeros", "value_at_one", "__version__",
]
