"""Command line front end.

    sobolev-mh <job> [--preset NAME | --config FILE] [--out DIR] [--only ID]
               [--full-precision] [--threads N] [--slow]

Jobs: tables, zeros, mh-curve, limits, verify.  The environment variable
SOBOLEV_MH_OUT overrides --out.  Exit codes: 0 ok, 1 verification failure,
2 configuration error, 3 numeric failure.
"""

import argparse
import math
import os
import sys
import tempfile
from dataclasses import replace

import numpy as np

from . import verify as verify_mod
from .asymptotics import limit_coeffs, limit_eval
from .config import parse_config
from .errors import ConfigError, NumericError
from .jacobi import clenshaw_eval
from .presets import get_preset
from .sobolev import sobolev_polynomial
from .zeros import convergence_table, sobolev_zeros


def _fmt(v, full=False):
    if v is None or (isinstance(v, float) and not math.isfinite(v)):
        return ""
    return f"{v:.17g}" if full else f"{v:.6g}"


def atomic_write_text(path, text):
    d = os.path.dirname(os.path.abspath(path))
    os.makedirs(d, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _out_path(out_dir, name):
    return os.path.join(out_dir, name)


# ---------------------------------------------------------------------------
# job implementations
# ---------------------------------------------------------------------------

def _csv_tables(cfg, full_precision):
    tb = convergence_table(cfg.setup, cfg.degrees, cfg.zero_count)
    ex = tb.excluded
    header = ["experiment_id", "n", "index", "raw_zero", "scaled_zero", "limit",
              "abs_error"]
    if full_precision:
        header += ["raw_zero_full", "scaled_zero_full"]
    lines = [",".join(header)]
    for row in tb.rows:
        for i in range(cfg.zero_count):
            raw = row.raw[i]
            pos = i - ex
            scaled = row.scaled[pos] if 0 <= pos < len(row.scaled) else None
            lim = tb.limit[pos] if 0 <= pos < len(tb.limit) else None
            err = abs(scaled - lim) if scaled is not None and lim is not None else None
            rec = [cfg.id, str(row.n), str(i + 1), _fmt(raw), _fmt(scaled),
                   _fmt(lim), _fmt(err)]
            if full_precision:
                rec += [_fmt(raw, True), _fmt(scaled, True)]
            lines.append(",".join(rec))
    for pos, lim in enumerate(tb.limit):
        rec = [cfg.id, "limit", str(pos + 1), "", "", _fmt(lim), ""]
        if full_precision:
            rec += ["", ""]
        lines.append(",".join(rec))
    return "\n".join(lines) + "\n"


def _csv_zeros(cfg, full_precision):
    lines = ["experiment_id,n,index,zero" + (",zero_full" if full_precision else "")]
    for n in cfg.degrees:
        zs = sobolev_zeros(cfg.setup, n)
        for i, z in enumerate(zs.zeros, start=1):
            rec = f"{cfg.id},{n},{i},{_fmt(z)}"
            if full_precision:
                rec += f",{_fmt(z, True)}"
            lines.append(rec)
    return "\n".join(lines) + "\n"


def _csv_limits(cfg, full_precision):
    from .zeros import limit_zeros

    lf = limit_coeffs(cfg.setup)
    regime = lf.regime
    zs = limit_zeros(lf, cfg.zero_count)
    lines = ["experiment_id,kind,index,value" + (",value_full" if full_precision else "")]

    def add(kind, idx, v):
        rec = f"{cfg.id},{kind},{idx},{_fmt(v)}"
        if full_precision:
            rec += f",{_fmt(v, True)}"
        lines.append(rec)

    lines.append(f"{cfg.id},regime,0,{regime.kind.value}"
                 + ("," if full_precision else ""))
    add("threshold", 0, float(regime.threshold))
    for i, b in enumerate(lf.b):
        add("coeff", i, b)
    for i, z in enumerate(zs, start=1):
        add("zero", i, z)
    return "\n".join(lines) + "\n"


def _mh_curve(cfg, full_precision):
    from .svg import line_chart

    xs = np.linspace(0.0, cfg.x_max, cfg.points)
    lf = limit_coeffs(cfg.setup)
    ref = limit_eval(lf, xs)
    a = cfg.setup.params.a
    cols = {}
    for n in cfg.degrees:
        series = sobolev_polynomial(cfg.setup, n)
        args = 1.0 - xs * xs / (2.0 * n * n)
        cols[n] = math.exp(-a * math.log(n)) * clenshaw_eval(series, args)
    header = ["x", "limit"] + [f"q_{n}" for n in cfg.degrees]
    lines = [",".join(header)]
    for i, x in enumerate(xs):
        rec = [_fmt(x, full_precision), _fmt(ref[i], full_precision)]
        rec += [_fmt(cols[n][i], full_precision) for n in cfg.degrees]
        lines.append(",".join(rec))
    series_list = [("limit", xs, ref)] + [(f"n={n}", xs, cols[n]) for n in cfg.degrees]
    svg = line_chart(series_list, title=cfg.id)
    return "\n".join(lines) + "\n", svg


def _csv_verify(result):
    lines = ["table,n,index,kind,reference,computed,abs_error,tolerance,status"]
    for c in result.cells:
        lines.append(f"{c.table},{c.n},{c.position + 1},{c.kind},{_fmt(c.reference)},"
                     f"{_fmt(c.computed)},{c.abs_err:.3e},{c.tol:.1e},{c.status}")
    for p in result.properties:
        lines.append(f"property,,,{p.name},,{p.worst:.3e},,{p.bound:.1e},{p.status}")
    return "\n".join(lines) + "\n"


def _run_verify(args, out_dir):
    result = verify_mod.run(only=args.only, fast=not args.slow,
                            threads=max(1, args.threads))
    n_pass = sum(1 for c in result.cells if c.status == "pass")
    n_flag = sum(1 for c in result.cells if c.status == "flagged")
    fails = [c for c in result.cells if c.status == "fail"]
    for c in result.cells:
        if c.status == "fail":
            print(f"FAIL {c.table} n={c.n} col={c.position + 1} "
                  f"ref={_fmt(c.reference)} got={_fmt(c.computed)} "
                  f"|err|={c.abs_err:.2e} > {c.tol:.0e}")
    for c in result.cells:
        if c.status == "flagged":
            print(f"NOTE {c.table} n={c.n} col={c.position + 1} "
                  f"printed={_fmt(c.reference)} recomputed={_fmt(c.computed)} "
                  f"|diff|={c.abs_err:.2e} (known source discrepancy)")
    for p in result.properties:
        mark = "ok" if p.status == "pass" else "FAIL"
        print(f"{mark:4s} {p.name}: worst={p.worst:.3e} bound={p.bound:.1e}")
    print(f"cells: {n_pass} pass, {len(fails)} fail, {n_flag} flagged; "
          f"properties: {sum(p.status == 'pass' for p in result.properties)}"
          f"/{len(result.properties)} pass")
    if out_dir is not None:
        atomic_write_text(_out_path(out_dir, "verify_report.csv"),
                          _csv_verify(result))
    return 0 if result.ok else 1


def build_parser():
    p = argparse.ArgumentParser(
        prog="sobolev-mh",
        description="Varying-mass Jacobi-Sobolev polynomials: zero tables, "
                    "endpoint limit curves and verification against the "
                    "embedded reference tables.")
    p.add_argument("job", choices=["tables", "zeros", "mh-curve", "limits", "verify"])
    g = p.add_mutually_exclusive_group()
    g.add_argument("--preset", help="named experiment preset (e.g. table2)")
    g.add_argument("--config", help="experiment configuration file")
    p.add_argument("--out", default=".", help="output directory (SOBOLEV_MH_OUT "
                                              "overrides)")
    p.add_argument("--only", help="verify: restrict to one table id")
    p.add_argument("--full-precision", action="store_true",
                   help="add full-precision columns to CSV output")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--slow", action="store_true",
                   help="verify: include the degree-500 rows")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    out_dir = os.environ.get("SOBOLEV_MH_OUT") or args.out
    try:
        if args.job == "verify":
            return _run_verify(args, out_dir)
        if args.preset:
            cfg = get_preset(args.preset)
            cfg = replace(cfg, job=args.job)
        elif args.config:
            with open(args.config) as f:
                cfg = parse_config(f.read())
            if cfg.job != args.job:
                cfg = replace(cfg, job=args.job)
        else:
            raise ConfigError(f"job '{args.job}' needs --preset or --config")

        if args.job == "tables":
            text = _csv_tables(cfg, args.full_precision)
            path = cfg.csv_path or f"{cfg.id}_tables.csv"
            atomic_write_text(_out_path(out_dir, path), text)
            print(_out_path(out_dir, path))
        elif args.job == "zeros":
            text = _csv_zeros(cfg, args.full_precision)
            path = cfg.csv_path or f"{cfg.id}_zeros.csv"
            atomic_write_text(_out_path(out_dir, path), text)
            print(_out_path(out_dir, path))
        elif args.job == "limits":
            text = _csv_limits(cfg, args.full_precision)
            path = cfg.csv_path or f"{cfg.id}_limits.csv"
            atomic_write_text(_out_path(out_dir, path), text)
            print(_out_path(out_dir, path))
        elif args.job == "mh-curve":
            csv_text, svg_text = _mh_curve(cfg, args.full_precision)
            csv_path = cfg.csv_path or f"{cfg.id}_curve.csv"
            svg_path = cfg.svg_path or f"{cfg.id}_curve.svg"
            atomic_write_text(_out_path(out_dir, csv_path), csv_text)
            atomic_write_text(_out_path(out_dir, svg_path), svg_text)
            print(_out_path(out_dir, csv_path))
            print(_out_path(out_dir, svg_path))
        return 0
    except ConfigError as e:
        print(f"config error: {e}", file=sys.stderr)
        return 2
    except FileNotFoundError as e:
        print(f"config error: {e}", file=sys.stderr)
        return 2
    except NumericError as e:
        print(f"numeric failure: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
