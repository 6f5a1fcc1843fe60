"""Hot numeric kernels: batched Jacobi recurrences and bracket refinement.

Every kernel exists in two functionally identical variants: a numba
``@njit`` loop version and a vectorized pure-numpy version.  The numba
path is used when numba imports cleanly; setting the environment variable
``SOBOLEV_MH_PURE_NUMPY=1`` before import forces the numpy path (this is
also what ``benchmarks/bench_kernels.py`` uses to time one against the
other).
"""

import os

import numpy as np

_FORCED_NUMPY = os.environ.get("SOBOLEV_MH_PURE_NUMPY", "") not in ("", "0")

try:
    if _FORCED_NUMPY:
        raise ImportError("pure-numpy backend forced via SOBOLEV_MH_PURE_NUMPY")
    from numba import njit, prange

    NUMBA_ENABLED = True
except ImportError:
    NUMBA_ENABLED = False
    prange = range

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap


def backend_name():
    return "numba" if NUMBA_ENABLED else "numpy"


def jacobi_recurrence(m, alpha, beta):
    """Arrays (A, B, C) with P_{i+1} = (A_i x + B_i) P_i - C_i P_{i-1}, i < m.

    The i = 0 entries are the two-term start (C_0 = 0); they stay valid at
    alpha + beta = -1 and alpha + beta = 0 where the generic expressions
    have removable singularities.
    """
    A = np.empty(max(m, 1))
    B = np.empty(max(m, 1))
    C = np.zeros(max(m, 1))
    A[0] = 0.5 * (alpha + beta + 2.0)
    B[0] = 0.5 * (alpha - beta)
    for i in range(1, m):
        s = 2.0 * i + alpha + beta
        den = 2.0 * (i + 1.0) * (i + alpha + beta + 1.0)
        A[i] = (s + 1.0) * (s + 2.0) / den
        B[i] = (alpha * alpha - beta * beta) * (s + 1.0) / (den * s)
        C[i] = 2.0 * (i + alpha) * (i + beta) * (s + 2.0) / (den * s)
    return A, B, C


# ---------------------------------------------------------------------------
# Clenshaw evaluation of a Jacobi-basis series at many points
# ---------------------------------------------------------------------------

def _clenshaw_numpy(c, A, B, C, x):
    m = len(c) - 1
    u1 = np.zeros_like(x)
    u2 = np.zeros_like(x)
    for k in range(m, 0, -1):
        u1, u2 = c[k] + (A[k] * x + B[k]) * u1 - C[k + 1] * u2, u1
    return c[0] + (A[0] * x + B[0]) * u1 - C[1] * u2


@njit(cache=True)
def _clenshaw_numba(c, A, B, C, x):  # pragma: no cover - numba path
    m = len(c) - 1
    out = np.empty(len(x))
    for p in prange(len(x)):
        xp = x[p]
        u1 = 0.0
        u2 = 0.0
        for k in range(m, 0, -1):
            u1, u2 = c[k] + (A[k] * xp + B[k]) * u1 - C[k + 1] * u2, u1
        out[p] = c[0] + (A[0] * xp + B[0]) * u1 - C[1] * u2
    return out


def clenshaw_batch(c, A, B, C, x):
    """Evaluate sum_i c[i] P_i at every point of ``x`` (backward recurrence)."""
    c = np.ascontiguousarray(c, dtype=np.float64)
    x = np.ascontiguousarray(x, dtype=np.float64)
    if len(c) == 1:
        return np.full_like(x, c[0])
    # recurrence arrays must extend one index past the series degree
    if len(A) < len(c) + 1:
        raise ValueError("recurrence arrays must extend past the series degree")
    if NUMBA_ENABLED:
        return _clenshaw_numba(c, A, B, C, x)
    return _clenshaw_numpy(c, A, B, C, x)


# ---------------------------------------------------------------------------
# Forward recurrence for a single polynomial at many points
# ---------------------------------------------------------------------------

def _forward_numpy(n, A, B, C, x):
    if n == 0:
        return np.ones_like(x)
    pm1 = np.ones_like(x)
    p = A[0] * x + B[0]
    for i in range(1, n):
        p, pm1 = (A[i] * x + B[i]) * p - C[i] * pm1, p
    return p


@njit(cache=True)
def _forward_numba(n, A, B, C, x):  # pragma: no cover - numba path
    out = np.empty(len(x))
    for q in prange(len(x)):
        xq = x[q]
        if n == 0:
            out[q] = 1.0
            continue
        pm1 = 1.0
        p = A[0] * xq + B[0]
        for i in range(1, n):
            p, pm1 = (A[i] * xq + B[i]) * p - C[i] * pm1, p
        out[q] = p
    return out


def jacobi_batch(n, alpha, beta, x):
    """Values of the degree-n Jacobi polynomial at every point of ``x``."""
    x = np.ascontiguousarray(x, dtype=np.float64)
    A, B, C = jacobi_recurrence(max(n, 1), float(alpha), float(beta))
    if NUMBA_ENABLED:
        return _forward_numba(n, A, B, C, x)
    return _forward_numpy(n, A, B, C, x)


# ---------------------------------------------------------------------------
# Safeguarded Newton/bisection refinement of sign-change brackets
# ---------------------------------------------------------------------------

_XTOL = 1e-13
_MAX_REFINE = 120


def _refine_numpy(cq, Aq, Bq, Cq, cd, Ad, Bd, Cd, lo, hi, flo):
    lo = lo.copy()
    hi = hi.copy()
    flo = flo.copy()
    x = 0.5 * (lo + hi)
    active = np.ones(len(lo), dtype=bool)
    for it in range(_MAX_REFINE):
        if not active.any():
            break
        xa = x[active]
        f = _clenshaw_numpy(cq, Aq, Bq, Cq, xa)
        fp = _clenshaw_numpy(cd, Ad, Bd, Cd, xa)
        la = lo[active]
        ha = hi[active]
        fla = flo[active]
        same = (f > 0) == (fla > 0)
        la = np.where(same, xa, la)
        fla = np.where(same, f, fla)
        ha = np.where(same, ha, xa)
        # an exact zero of the evaluated series is the answer itself
        hit = f == 0.0
        la = np.where(hit, xa, la)
        ha = np.where(hit, xa, ha)
        done = (ha - la <= _XTOL) | hit
        if it % 2 == 0:
            # Newton step, clamped to the open bracket
            with np.errstate(divide="ignore", invalid="ignore"):
                xn = xa - f / fp
            bad = ~np.isfinite(xn) | (xn <= la) | (xn >= ha)
            xn = np.where(bad, 0.5 * (la + ha), xn)
        else:
            # forced bisection so the bracket width provably halves
            xn = 0.5 * (la + ha)
        lo[active] = la
        hi[active] = ha
        flo[active] = fla
        x[active] = np.where(done, 0.5 * (la + ha), xn)
        idx = np.flatnonzero(active)
        active[idx[done]] = False
    return 0.5 * (lo + hi)


@njit(cache=True)
def _refine_numba(cq, Aq, Bq, Cq, cd, Ad, Bd, Cd, lo, hi, flo):  # pragma: no cover
    nroot = len(lo)
    out = np.empty(nroot)
    mq = len(cq) - 1
    md = len(cd) - 1
    for r in prange(nroot):
        a = lo[r]
        b = hi[r]
        fa = flo[r]
        x = 0.5 * (a + b)
        for it in range(_MAX_REFINE):
            # Clenshaw for value and derivative at x
            u1 = 0.0
            u2 = 0.0
            for k in range(mq, 0, -1):
                u1, u2 = cq[k] + (Aq[k] * x + Bq[k]) * u1 - Cq[k + 1] * u2, u1
            f = cq[0] + (Aq[0] * x + Bq[0]) * u1 - Cq[1] * u2
            if md >= 0:
                v1 = 0.0
                v2 = 0.0
                for k in range(md, 0, -1):
                    v1, v2 = cd[k] + (Ad[k] * x + Bd[k]) * v1 - Cd[k + 1] * v2, v1
                fp = cd[0] + (Ad[0] * x + Bd[0]) * v1 - Cd[1] * v2
            else:
                fp = 0.0
            if (f > 0.0) == (fa > 0.0):
                a = x
                fa = f
            else:
                b = x
            if f == 0.0:
                # an exact zero of the evaluated series is the answer itself
                a = x
                b = x
                break
            if b - a <= _XTOL:
                break
            if it % 2 == 0 and fp != 0.0:
                xn = x - f / fp
                if xn <= a or xn >= b or not np.isfinite(xn):
                    xn = 0.5 * (a + b)
            else:
                # forced bisection so the bracket width provably halves
                xn = 0.5 * (a + b)
            x = xn
        out[r] = 0.5 * (a + b)
    return out


def refine_brackets(cq, Aq, Bq, Cq, cd, Ad, Bd, Cd, lo, hi, flo):
    """Converge each bracket [lo, hi] (sign change, f(lo) = flo) to a root.

    Newton steps on the series value, falling back to bisection whenever a
    step leaves the current bracket; stops at bracket width <= 1e-13.
    """
    args = [np.ascontiguousarray(v, dtype=np.float64)
            for v in (cq, Aq, Bq, Cq, cd, Ad, Bd, Cd, lo, hi, flo)]
    if len(args[8]) == 0:
        return np.empty(0)
    if NUMBA_ENABLED:
        return _refine_numba(*args)
    return _refine_numpy(*args)
