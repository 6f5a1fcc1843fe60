"""Gamma and Bessel primitives used by every layer above.

Self-contained: log-gamma via a 9-term Lanczos approximation, Bessel J of
real order nu > -1 via power series (extended-precision accumulation) with
a large-argument asymptotic branch, and Bessel zeros by McMahon-type
guesses refined with safeguarded Newton.
"""

import math
import threading as _threading

import numpy as np

# Lanczos g = 7, 9 terms; relative error of exp(log_gamma) is a few ulp for
# real positive arguments.
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


def log_gamma(x):
    """Natural log of the Gamma function for x > 0."""
    x = float(x)
    if not x > 0.0:
        raise ValueError(f"log_gamma requires a positive argument, got {x!r}")
    if x < 0.5:
        # reflection keeps the Lanczos sum in its accurate range
        return math.log(math.pi / math.sin(math.pi * x)) - log_gamma(1.0 - x)
    series = _LANCZOS[0]
    for i in range(1, 9):
        series += _LANCZOS[i] / (x + i - 1.0)
    t = x + _LANCZOS_G - 0.5
    return _HALF_LOG_2PI + (x - 0.5) * math.log(t) - t + math.log(series)


def gamma_ratio(n, a, b):
    """Gamma(n + a) / Gamma(n + b), evaluated in log space.

    Never overflows as long as the ratio itself is representable; the two
    arguments must avoid the poles, i.e. n + a > 0 and n + b > 0.
    """
    n = float(n)
    xa = n + float(a)
    xb = n + float(b)
    if xa <= 0.0 or xb <= 0.0:
        raise ValueError(f"gamma_ratio arguments hit a pole: n+a={xa}, n+b={xb}")
    return math.exp(log_gamma(xa) - log_gamma(xb))


# ---------------------------------------------------------------------------
# Bessel J of the first kind, real order nu > -1, x >= 0
# ---------------------------------------------------------------------------

_LD = np.longdouble


def _series_j(nu, x):
    # ascending series, accumulated in extended precision to push the
    # alternating-term cancellation floor below 1e-12 up to the crossover
    q = _LD(x) * _LD(0.5)
    q2 = q * q
    log_t0 = nu * math.log(0.5 * x) - log_gamma(nu + 1.0)
    term = _LD(math.exp(log_t0))
    total = term
    for k in range(1, 400):
        term = -term * q2 / (_LD(k) * _LD(k + nu))
        total += term
        if abs(float(term)) <= 1e-22 * (abs(float(total)) + 1e-30):
            break
    return float(total)


def _hankel_pq(nu, x):
    # P/Q sums of the large-argument expansion; terms decrease fast for
    # |nu| <= 0.5 and x >= 14
    mu = 4.0 * nu * nu
    p = 1.0
    q = 0.0
    t = 1.0
    prev = math.inf
    for k in range(1, 40):
        t *= (mu - (2.0 * k - 1.0) ** 2) / (8.0 * k * x)
        if abs(t) >= prev:
            break
        prev = abs(t)
        if k % 2 == 1:
            q += t if k % 4 == 1 else -t
        else:
            p += t if k % 4 == 0 else -t
        if abs(t) < 1e-18:
            break
    return p, q


def _asymptotic_j(nu, x):
    p, q = _hankel_pq(nu, x)
    omega = x - (0.5 * nu + 0.25) * math.pi
    return math.sqrt(2.0 / (math.pi * x)) * (p * math.cos(omega) - q * math.sin(omega))


def bessel_j(nu, x):
    """Bessel function of the first kind J_nu(x) for nu > -1, x >= 0."""
    nu = float(nu)
    x = float(x)
    if nu <= -1.0:
        raise ValueError(f"order must exceed -1, got {nu}")
    if x < 0.0:
        raise ValueError(f"argument must be nonnegative, got {x}")
    if x == 0.0:
        if nu == 0.0:
            return 1.0
        return 0.0 if nu > 0.0 else math.inf
    crossover = max(14.0, 1.4 * abs(nu))
    if x < crossover:
        return _series_j(nu, x)
    # reduce to a base order in [-0.5, 0.5) where the asymptotic expansion
    # converges fastest, then recur upward (stable for x above the crossover)
    m = math.floor(nu + 0.5)
    nu0 = nu - m
    j0 = _asymptotic_j(nu0, x)
    if m == 0:
        return j0
    j1 = _asymptotic_j(nu0 + 1.0, x)
    if m == -1:
        return (2.0 * (nu0) / x) * j0 - j1
    s = nu0 + 1.0
    for _ in range(m - 1):
        j0, j1 = j1, (2.0 * s / x) * j1 - j0
        s += 1.0
    return j1


def _bessel_j_prime(nu, x):
    # J'_nu via the order-raising relation; avoids orders below -1
    return (nu / x) * bessel_j(nu, x) - bessel_j(nu + 1.0, x)


def _mcmahon_guess(nu, i):
    beta = (i + 0.5 * nu - 0.25) * math.pi
    mu = 4.0 * nu * nu
    return (beta
            - (mu - 1.0) / (8.0 * beta)
            - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * (8.0 * beta) ** 3))


def _refine_zero(nu, lo, hi, flo):
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        f = bessel_j(nu, mid)
        if (f > 0.0) == (flo > 0.0):
            lo, flo = mid, f
        else:
            hi = mid
        if hi - lo <= 1e-14 * max(1.0, hi):
            break
        fp = _bessel_j_prime(nu, mid)
        if fp != 0.0:
            step = mid - f / fp
            if lo < step < hi:
                fs = bessel_j(nu, step)
                if (fs > 0.0) == (flo > 0.0):
                    lo, flo = step, fs
                else:
                    hi = step
    return 0.5 * (lo + hi)


def _bracket_next(nu, prev):
    # first sign change past the previous zero (or past 0 for the first)
    start = prev + 0.35 if prev > 0.0 else 1e-7
    step = 0.18
    x0 = start
    f0 = bessel_j(nu, x0)
    for _ in range(4000):
        x1 = x0 + step
        f1 = bessel_j(nu, x1)
        if f0 == 0.0:
            return x0 - 1e-9, x0 + 1e-9, bessel_j(nu, x0 - 1e-9)
        if (f0 > 0.0) != (f1 > 0.0):
            return x0, x1, f0
        x0, f0 = x1, f1
    raise RuntimeError(f"failed to bracket a zero of J_{nu} past {prev}")


_zero_cache = {}
_zero_cache_lock = _threading.Lock()


def bessel_j_zero(nu, i):
    """i-th positive zero of J_nu (i >= 1), to about 1e-12."""
    nu = float(nu)
    if nu <= -1.0:
        raise ValueError(f"order must exceed -1, got {nu}")
    i = int(i)
    if i < 1:
        raise ValueError(f"zero index must be >= 1, got {i}")
    zeros = _zero_cache.setdefault(nu, [])
    if len(zeros) >= i:
        return zeros[i - 1]
    with _zero_cache_lock:
        return _extend_zero_cache(nu, zeros, i)


def _extend_zero_cache(nu, zeros, i):
    while len(zeros) < i:
        k = len(zeros) + 1
        prev = zeros[-1] if zeros else 0.0
        lo = hi = flo = None
        if k >= 8:
            # McMahon guess is well inside the correct interoscillation gap
            g = _mcmahon_guess(nu, k)
            for w in (0.6, 1.2, 2.0):
                a = max(g - w, prev + 0.3)
                b = g + w
                fa = bessel_j(nu, a)
                fb = bessel_j(nu, b)
                if (fa > 0.0) != (fb > 0.0):
                    lo, hi, flo = a, b, fa
                    break
        if lo is None:
            lo, hi, flo = _bracket_next(nu, prev)
        z = _refine_zero(nu, lo, hi, flo)
        if zeros and z <= zeros[-1]:
            raise RuntimeError(f"zero ordering broke for J_{nu} at index {k}")
        zeros.append(z)
    return zeros[i - 1]
