"""Golden-table comparison plus the structural property battery.

Pure computation: callers (the CLI, the test suite) decide how to render
or persist the reports.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import golden
from .asymptotics import limit_coeffs, limit_eval, order_zero_identity_residual
from .errors import ConfigError
from .jacobi import clenshaw_eval, deriv_at_one, norm2
from .presets import SETUPS
from .sobolev import (
    connection_reconstruct,
    mass,
    q_deriv_at_one,
    sobolev_polynomial,
)
from .special_functions import bessel_j, log_gamma
from .zeros import convergence_table, sobolev_zeros

FAST_DEGREES = (150, 250)
FULL_DEGREES = (150, 250, 500)


@dataclass(frozen=True)
class PropertyReport:
    name: str
    worst: float
    bound: float
    status: str  # pass | fail


@dataclass(frozen=True)
class VerifyResult:
    cells: list
    properties: list

    @property
    def ok(self):
        return (all(c.status != "fail" for c in self.cells)
                and all(p.status == "pass" for p in self.properties))


def _experiment_cells(exp_name, degrees, tolerances):
    setup = SETUPS[exp_name]
    tb = convergence_table(setup, degrees, 4)
    raw_id, scaled_id = golden.EXPERIMENT_TABLES[exp_name]
    raw_rows = {row.n: row.raw for row in tb.rows}
    scaled_rows = {row.n: row.scaled for row in tb.rows}
    cells = golden.compare_table(golden.TABLES[raw_id], raw_rows, None, tolerances)
    cells += golden.compare_table(golden.TABLES[scaled_id], scaled_rows, tb.limit,
                                  tolerances)
    return cells


def run_golden(only=None, fast=True, threads=1, tolerances=None):
    """Recompute and compare the embedded tables; returns CellReports."""
    if only is not None:
        if only not in golden.TABLES:
            raise ConfigError(f"--only expects one of {sorted(golden.TABLES)}, "
                              f"got {only!r}")
        experiments = [golden.TABLES[only].experiment]
    else:
        experiments = sorted(golden.EXPERIMENT_TABLES)
    degrees = FAST_DEGREES if fast else FULL_DEGREES
    cells = []
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futs = {exp: pool.submit(_experiment_cells, exp, degrees, tolerances)
                    for exp in experiments}
            for exp in experiments:
                cells.extend(futs[exp].result())
    else:
        for exp in experiments:
            cells.extend(_experiment_cells(exp, degrees, tolerances))
    if only is not None:
        cells = [c for c in cells if c.table == only]
    return cells


# ---------------------------------------------------------------------------
# property battery
# ---------------------------------------------------------------------------

def _orthogonality_worst(setup, n_max):
    worst = 0.0
    j = int(setup.j)
    for n in range(1, n_max + 1):
        series = sobolev_polynomial(setup, n)
        qj1 = q_deriv_at_one(setup, n, j)
        Mn = mass(setup.mass, n)
        hn = norm2(n, setup.params)
        for m in range(n):
            ip = (series.coeffs[m] * norm2(m, setup.params)
                  + Mn * qj1 * deriv_at_one(m, j, setup.params))
            worst = max(worst, abs(ip) / hn)
    return worst


def _reconstruct_worst(setup, n_max):
    worst = 0.0
    grid = np.linspace(-1.0, 1.0, 21)
    for n in range(setup.j + 1, n_max + 1):
        direct = clenshaw_eval(sobolev_polynomial(setup, n), grid)
        rebuilt = connection_reconstruct(setup, n, grid)
        scale = np.max(np.abs(direct))
        worst = max(worst, float(np.max(np.abs(direct - rebuilt))) / scale)
    return worst


def _zero_shape_worst(setup, degrees, zero_cache):
    """Largest violation over: count == n, simplicity, at most one outside."""
    worst = 0.0
    for n in degrees:
        zs = zero_cache.get((id(setup), n)) or sobolev_zeros(setup, n)
        if len(zs.zeros) != n:
            return math.inf
        if zs.outside_count > 1:
            return math.inf
        if np.any(zs.zeros <= -1.0):
            return math.inf
        asc = zs.zeros[::-1]
        u = np.sqrt(np.maximum(2.0 * (1.0 - np.minimum(asc, 1.0)), 0.0)) * n
        gap_x = np.min(np.diff(asc))
        if gap_x <= 0.0:
            return math.inf
        # clustered pairs are well separated in the scaled variable
        gap_u = np.min(np.abs(np.diff(u))) if len(u) > 1 else 1.0
        if max(gap_x, gap_u) < 1e-12:
            return math.inf
    return worst


def _mh_sup_errors(setup, n_pair=(300, 600)):
    lf = limit_coeffs(setup)
    xs = np.linspace(0.0, 18.0, 200)
    ref = limit_eval(lf, xs)
    sups = []
    a = setup.params.a
    for n in n_pair:
        series = sobolev_polynomial(setup, n)
        args = 1.0 - xs * xs / (2.0 * n * n)
        vals = math.exp(-a * math.log(n)) * clenshaw_eval(series, args)
        sups.append(float(np.max(np.abs(vals - ref))))
    return sups


def run_properties(zero_cache=None):
    """Structural checks that need no table values at all."""
    zero_cache = zero_cache or {}
    out = []

    worst = max(_orthogonality_worst(s, 100) for s in SETUPS.values())
    out.append(PropertyReport("sobolev-orthogonality(n<=100)", worst, 1e-9,
                              "pass" if worst <= 1e-9 else "fail"))

    worst = max(_reconstruct_worst(s, 60) for s in SETUPS.values())
    out.append(PropertyReport("connection-reconstruct(n<=60)", worst, 1e-8,
                              "pass" if worst <= 1e-8 else "fail"))

    worst = max(_zero_shape_worst(s, (25, 50, 150, 250), zero_cache)
                for s in SETUPS.values())
    out.append(PropertyReport("zero-count-simplicity(n<=250)", worst, 1e-12,
                              "pass" if worst < math.inf else "fail"))

    worst = 0.0
    for a, b, M in ((0.0, 0.0, 1.0), (0.7, -0.3, 2.3), (-0.5, 0.25, 10.0)):
        for x in np.linspace(0.1, 30.0, 120):
            worst = max(worst, order_zero_identity_residual(a, b, M, x))
    out.append(PropertyReport("order-zero-identity", worst, 1e-9,
                              "pass" if worst <= 1e-9 else "fail"))

    worst = 0.0
    for nu in (-0.9, -0.25, 0.5, 1.0, 3.0, 6.5, 10.0):
        for x in np.linspace(0.1, 50.0, 160):
            r = abs(bessel_j(nu, x) - (2.0 * (nu + 1.0) / x) * bessel_j(nu + 1.0, x)
                    + bessel_j(nu + 2.0, x))
            worst = max(worst, r)
    out.append(PropertyReport("bessel-three-term", worst, 1e-10,
                              "pass" if worst <= 1e-10 else "fail"))

    worst = 0.0
    for x in (0.31, 1.0, 3.1, 7.7, 40.0):
        lhs = log_gamma(2.0 * x)
        rhs = (log_gamma(x) + log_gamma(x + 0.5)
               - (1.0 - 2.0 * x) * math.log(2.0) - 0.5 * math.log(math.pi))
        worst = max(worst, abs(math.expm1(lhs - rhs)))
    out.append(PropertyReport("gamma-duplication", worst, 1e-12,
                              "pass" if worst <= 1e-12 else "fail"))

    worst = -math.inf  # signed: positive means the sup error failed to decrease
    for s in SETUPS.values():
        s300, s600 = _mh_sup_errors(s)
        worst = max(worst, s600 - s300)
    out.append(PropertyReport("mh-sup-error-decreases(300->600)", worst, 0.0,
                              "pass" if worst <= 0.0 else "fail"))
    return out


def run(only=None, fast=True, threads=1, tolerances=None, with_properties=True):
    cells = run_golden(only=only, fast=fast, threads=threads, tolerances=tolerances)
    props = run_properties() if with_properties else []
    return VerifyResult(cells=cells, properties=props)
