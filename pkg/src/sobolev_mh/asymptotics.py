"""Regime classification and endpoint limit functions.

The scaled polynomials n^(-alpha) Q_n(1 - x^2/(2n^2)) converge to a short
combination of Bessel functions whose coefficients depend on how the mass
exponent gamma compares with 2(alpha + 2j + 1).  The coefficient recursion
is one triangular solve, parameterized by its leading fraction; the
critical and subcritical cases differ only there.

The critical-case leading fraction is the derivative-ratio limit
  (M (i - j) + G (alpha + j + i + 1)) / ((alpha + j + i + 1) (M + G)),
  G = Gamma(alpha+j+1)^2 2^(alpha+beta+2j+1) (alpha+2j+1).
Its sign structure is pinned by exact finite-degree computation (the
coefficients are limits of connection_coeffs, see the test suite), which
settles the sign of the G term in the numerator.
"""

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .special_functions import bessel_j, log_gamma


class RegimeKind(enum.Enum):
    SUPERCRITICAL = "supercritical"
    CRITICAL = "critical"
    SUBCRITICAL = "subcritical"


@dataclass(frozen=True)
class Regime:
    kind: RegimeKind
    threshold: float | Fraction


def classify_regime(gamma, alpha, j):
    """Trichotomy of gamma against 2(alpha + 2j + 1).

    Pass gamma and alpha as Fractions (or ints) for an exact knife-edge
    comparison; floats compare as floats.
    """
    if float(alpha) <= -1.0:
        raise ValueError("alpha must exceed -1")
    j = int(j)
    threshold = 2 * (alpha + 2 * j + 1)
    if gamma > threshold:
        kind = RegimeKind.SUPERCRITICAL
    elif gamma == threshold:
        kind = RegimeKind.CRITICAL
    else:
        kind = RegimeKind.SUBCRITICAL
    return Regime(kind=kind, threshold=threshold)


def critical_mass_threshold(alpha, beta, j):
    """Mass level above which the largest zero leaves [-1, 1] in the
    knife-edge regime: 2^(a+b+2j+1) (a+j+1) (a+2j+1) Gamma(a+j+1)^2 / j."""
    j = int(j)
    if j < 1:
        raise ValueError("threshold needs a positive derivative order")
    a = float(alpha)
    b = float(beta)
    return math.exp((a + b + 2.0 * j + 1.0) * math.log(2.0)
                    + 2.0 * log_gamma(a + j + 1.0)) * (a + j + 1.0) * (a + 2.0 * j + 1.0) / j


@dataclass(frozen=True)
class LimitFunction:
    alpha: float
    b: np.ndarray = field(repr=False)
    regime: Regime

    def __post_init__(self):
        object.__setattr__(self, "b", np.asarray(self.b, dtype=np.float64))


def _order_shift_limit(k, i, a):
    # limit of the derivative-ratio matrix entries: 2^k Gamma(a+i+1)/Gamma(a+i+k+1)
    return math.exp(k * math.log(2.0) + log_gamma(a + i + 1.0) - log_gamma(a + i + k + 1.0))


def _solve_limit_system(lead, j, a):
    b = np.empty(j + 2)
    for i in range(j + 2):
        acc = lead(i)
        sign = 1.0
        fact = 1.0
        for k in range(i):
            acc -= b[k] * math.comb(i, k) * sign * fact * _order_shift_limit(k, i, a)
            sign = -sign
            fact *= k + 1.0
        b[i] = acc / (sign * fact * _order_shift_limit(i, i, a))
    return b


def limit_coeffs(setup):
    """Bessel-combination coefficients of the endpoint limit function."""
    p = setup.params
    j = int(setup.j)
    regime = classify_regime(setup.mass.gamma, p.alpha, j)
    a = p.a
    if regime.kind is RegimeKind.SUPERCRITICAL or float(setup.mass.M) == 0.0:
        # zero mass limit means the perturbation decays faster than n^-gamma,
        # so the classical limit applies whatever the nominal regime
        b = np.zeros(j + 2)
        b[0] = 1.0
        return LimitFunction(alpha=a, b=b, regime=regime)
    if regime.kind is RegimeKind.SUBCRITICAL:
        def lead(i):
            return (i - j) / (a + j + i + 1.0)
    else:
        M = float(setup.mass.M)
        if M < 0.0:
            raise ValueError("critical regime requires a nonnegative mass limit")
        G = math.exp(2.0 * log_gamma(a + j + 1.0)
                     + (a + p.b + 2.0 * j + 1.0) * math.log(2.0)) * (a + 2.0 * j + 1.0)

        def lead(i):
            return (M * (i - j) + G * (a + j + i + 1.0)) / ((a + j + i + 1.0) * (M + G))

    return LimitFunction(alpha=a, b=_solve_limit_system(lead, j, a), regime=regime)


def limit_eval(lf, x):
    """Evaluate sum_i b_i 2^i (x/2)^(-alpha) J_{alpha+2i}(x) for x >= 0."""
    a = lf.alpha
    b = lf.b

    def _one(xv):
        if xv < 0.0:
            raise ValueError("argument must be nonnegative")
        if xv < 1e-4:
            # removable singularity at 0: three ascending terms suffice here
            t = 0.25 * xv * xv
            total = 0.0
            for p in range(3):
                inner = 0.0
                for i in range(min(p, len(b) - 1) + 1):
                    m = p - i
                    inner += b[i] * (-1.0) ** m / (
                        math.factorial(m) * math.exp(log_gamma(m + a + 2.0 * i + 1.0)))
                total += inner * t ** p
            return total
        scale = math.exp(-a * math.log(0.5 * xv))
        return scale * sum(b[i] * 2.0 ** i * bessel_j(a + 2.0 * i, xv)
                           for i in range(len(b)) if b[i] != 0.0)

    if np.isscalar(x) or np.ndim(x) == 0:
        return _one(float(x))
    return np.array([_one(float(v)) for v in np.asarray(x, dtype=np.float64)])


def order_zero_identity_residual(alpha, beta, M, x):
    """Residual of the closed two-Bessel form of the critical limit function
    at derivative order zero.

    With z_v(x) = x^(-v) J_v(x) and
    a(M) = -2 M (alpha+1) / (M + 2^(alpha+beta+1) Gamma(alpha+2) Gamma(alpha+1)),
    the order-zero critical limit function equals
    2^alpha (z_alpha(x) + a(M) z_{alpha+1}(x)); this returns the absolute
    difference of the two evaluations.
    """
    a = float(alpha)
    b = float(beta)
    M = float(M)
    x = float(x)
    if x <= 0.0:
        raise ValueError("identity residual is defined for x > 0")
    from .sobolev import MassKind, MassSequence, SobolevSetup  # local to avoid cycle
    from .jacobi import JacobiParams

    gamma_crit = Fraction(2) * (Fraction(a).limit_denominator(10**12) + 1)
    setup = SobolevSetup(
        params=JacobiParams(Fraction(a).limit_denominator(10**12),
                            Fraction(b).limit_denominator(10**12)),
        j=0,
        mass=MassSequence(kind=MassKind.PLAIN, M=M, gamma=gamma_crit),
    )
    lf = limit_coeffs(setup)
    lhs = limit_eval(lf, x)
    denom = M + math.exp((a + b + 1.0) * math.log(2.0)
                         + log_gamma(a + 2.0) + log_gamma(a + 1.0))
    acoef = -2.0 * M * (a + 1.0) / denom
    z1 = x ** (-a) * bessel_j(a, x)
    z2 = x ** (-(a + 1.0)) * bessel_j(a + 1.0, x)
    rhs = (2.0 ** a) * (z1 + acoef * z2)
    return abs(lhs - rhs)
