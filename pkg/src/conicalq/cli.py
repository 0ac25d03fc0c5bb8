"""Command-line frontend: point evaluation, table sweeps, verification.

Subcommands:
  eval    evaluate one (m, tau, x) point
  table   sweep a grid of points to CSV/JSON
  verify  recompute reference or table files and report relative errors

Routing thresholds can be overridden with the environment variables
CONICALQ_THRESH_X and CONICALQ_THRESH_TAU (defaults 1.1 and 10).
"""

import argparse
import csv
import json
import math
import os
import sys
from datetime import datetime, timezone

from .dispatch import (
    ConicalArgs,
    RoutingConfig,
    compute_qtilde,
    recurrence_residual,
)
from .errors import ConicalQError
from .kummer import qtilde_kummer
from .large_x import qtilde_large_x

TABLE_HEADER = ["m", "tau", "x", "qtilde", "method", "terms", "err_est", "error"]

EXIT_OK = 0
EXIT_COMPUTE = 1
EXIT_USAGE = 2


def _fmt(value):
    """17 significant digits: guaranteed double round-trip."""
    return f"{value:.17g}"


def _routing_config(args):
    x_cut = float(os.environ.get("CONICALQ_THRESH_X", 1.1))
    tau_cut = float(os.environ.get("CONICALQ_THRESH_TAU", 10.0))
    kw = {"x_cut": x_cut, "tau_cut": tau_cut}
    terms = getattr(args, "terms", None)
    if terms is not None:
        kw.update(near_one_terms=max(terms, 2), large_x_terms=max(terms, 2),
                  kummer_terms=terms)
    return RoutingConfig(**kw)


def _record(m, tau, x, ev):
    return {
        "m": m,
        "tau": tau,
        "x": x,
        "qtilde": ev.value,
        "method": ev.method,
        "terms": ev.terms_used,
        "err_est": ev.error_estimate,
    }


def cmd_eval(args):
    config = _routing_config(args)
    try:
        ev = compute_qtilde(ConicalArgs(m=args.m, tau=args.tau, x=args.x),
                            config=config, method=args.method)
    except ConicalQError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    rec = _record(args.m, args.tau, args.x, ev)
    if args.format == "json":
        rec["qtilde"] = float(_fmt(rec["qtilde"]))
        print(json.dumps(rec))
    elif args.format == "csv":
        print(",".join(TABLE_HEADER[:-1]))
        print(f"{args.m},{_fmt(args.tau)},{_fmt(args.x)},{_fmt(ev.value)},"
              f"{ev.method},{ev.terms_used},{ev.error_estimate:.3e}")
    else:
        print(f"m        = {args.m}")
        print(f"tau      = {_fmt(args.tau)}")
        print(f"x        = {_fmt(args.x)}")
        print(f"qtilde   = {_fmt(ev.value)}")
        print(f"method   = {ev.method}")
        print(f"terms    = {ev.terms_used}")
        print(f"err_est  = {ev.error_estimate:.3e}")
    return EXIT_OK


def _parse_int_range(text):
    if ":" in text:
        lo, hi = text.split(":", 1)
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _x_grid(args, parser):
    if args.x is not None:
        return [float(v) for v in args.x.split(",") if v.strip()]
    if args.x_min is None or args.x_max is None or args.x_count is None:
        parser.error("provide either --x or all of --x-min/--x-max/--x-count")
    n = args.x_count
    if n < 1:
        parser.error("--x-count must be >= 1")
    if n == 1:
        return [args.x_min]
    if args.x_log:
        la, lb = math.log(args.x_min), math.log(args.x_max)
        return [math.exp(la + (lb - la) * i / (n - 1)) for i in range(n)]
    return [args.x_min + (args.x_max - args.x_min) * i / (n - 1) for i in range(n)]


def cmd_table(args, parser):
    config = _routing_config(args)
    try:
        ms = _parse_int_range(args.m)
    except ValueError as exc:
        parser.error(str(exc))
    xs = _x_grid(args, parser)
    if not ms or not xs:
        parser.error("empty grid")

    rows = []
    for m in ms:
        for x in xs:
            row = {"m": m, "tau": args.tau, "x": x, "qtilde": "", "method": "",
                   "terms": "", "err_est": "", "error": ""}
            try:
                ev = compute_qtilde(ConicalArgs(m=m, tau=args.tau, x=x),
                                    config=config, method=args.method)
                row.update(qtilde=_fmt(ev.value), method=ev.method,
                           terms=ev.terms_used, err_est=f"{ev.error_estimate:.3e}")
            except ConicalQError as exc:
                row["error"] = str(exc)
            rows.append(row)

    out = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        if args.format == "json":
            json.dump(rows, out, indent=1)
            out.write("\n")
        else:
            if not args.deterministic:
                stamp = datetime.now(timezone.utc).isoformat()
                out.write(f"# generated {stamp}\n")
            writer = csv.DictWriter(out, fieldnames=TABLE_HEADER)
            writer.writeheader()
            for row in rows:
                row["tau"] = _fmt(row["tau"])
                row["x"] = _fmt(row["x"])
                writer.writerow(row)
    finally:
        if args.output:
            out.close()
    return EXIT_OK


def _read_points(path):
    """Read a reference CSV (m,tau,x,qtilde_ref) or a table CSV (m,tau,x,qtilde,...).

    Returns (points, self_mode) where each point is (m, tau, x, reference).
    """
    points = []
    self_mode = None
    with open(path, newline="") as fh:
        reader = csv.reader(line for line in fh if not line.startswith("#"))
        header = next(reader, None)
        if header is None:
            raise ValueError("empty file")
        header = [h.strip() for h in header]
        if header[:4] == ["m", "tau", "x", "qtilde_ref"]:
            self_mode = False
        elif header[:4] == ["m", "tau", "x", "qtilde"]:
            self_mode = True
        else:
            raise ValueError(f"unrecognized header {header!r}")
        for row in reader:
            if not row:
                continue
            if self_mode and len(row) >= 8 and row[7]:
                continue  # row recorded a computation error, nothing to compare
            points.append((int(row[0]), float(row[1]), float(row[2]), float(row[3])))
    if not points:
        raise ValueError("no data rows")
    return points, self_mode


def _region_of(tau, x, config):
    if x < config.x_cut:
        return "a" if tau < config.tau_cut else "b"
    return "c"


def _residual_sweep(config):
    lines = []
    for x in (1.1, 100.0):
        for i in range(20):
            tau = 5.0 + (100.0 - 5.0) * i / 19.0
            if x < config.x_cut:
                evals = [qtilde_kummer(mu, tau, x, K=config.kummer_terms)
                         for mu in (0, 1, 2)]
            else:
                evals = [qtilde_large_x(mu, tau, x, max_terms=config.large_x_terms)
                         for mu in (0, 1, 2)]
            res = recurrence_residual(1, tau, x, evals)
            lines.append(f"residual m=1 x={_fmt(x)} tau={_fmt(tau)}: {res:.3e}")
    return lines


def cmd_verify(args):
    config = _routing_config(args)
    try:
        points, self_mode = _read_points(args.fixtures)
    except (OSError, ValueError) as exc:
        print(f"error: cannot read {args.fixtures}: {exc}", file=sys.stderr)
        return EXIT_USAGE

    worst = (None, -1.0)
    region_max = {}
    checked = 0
    for m, tau, x, ref in points:
        region = _region_of(tau, x, config)
        if args.region and region != args.region:
            continue
        checked += 1
        try:
            ev = compute_qtilde(ConicalArgs(m=m, tau=tau, x=x), config=config)
            err = abs(ev.value - ref) / abs(ref) if ref != 0.0 else abs(ev.value)
            print(f"m={m} tau={_fmt(tau)} x={_fmt(x)} region={region} relerr={err:.3e}")
        except ConicalQError as exc:
            err = math.inf
            print(f"m={m} tau={_fmt(tau)} x={_fmt(x)} region={region} error: {exc}")
        if err > region_max.get(region, -1.0):
            region_max[region] = err
        if err > worst[1]:
            worst = ((m, tau, x), err)

    if checked == 0:
        print("error: no points matched the region filter", file=sys.stderr)
        return EXIT_USAGE
    for region in sorted(region_max):
        print(f"max relative error region {region}: {region_max[region]:.3e}")
    if args.residual:
        for line in _residual_sweep(config):
            print(line)
    mode = "self-comparison" if self_mode else "reference"
    print(f"checked {checked} points ({mode} mode), tolerance {args.tol:g}")
    if worst[1] > args.tol:
        (m, tau, x), err = worst
        print(f"FAIL worst offender m={m} tau={_fmt(tau)} x={_fmt(x)} "
              f"relerr={err:.3e} > {args.tol:g}")
        return EXIT_COMPUTE
    print("PASS")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="conicalq",
        description="Evaluate the real-valued conical function companion "
                    "Qt^m_{-1/2+i*tau}(x) for x > 1.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one point")
    p_eval.add_argument("--m", type=int, required=True)
    p_eval.add_argument("--tau", type=float, required=True)
    p_eval.add_argument("--x", type=float, required=True)
    p_eval.add_argument("--method", default="auto",
                        choices=["auto", "near-one", "kummer", "large-x"])
    p_eval.add_argument("--terms", type=int, default=None,
                        help="term budget override for the selected engine")
    p_eval.add_argument("--format", default="plain",
                        choices=["plain", "json", "csv"])

    p_table = sub.add_parser("table", help="sweep a grid of points")
    p_table.add_argument("--m", required=True,
                         help="single order or inclusive range like 0:1000")
    p_table.add_argument("--tau", type=float, required=True)
    p_table.add_argument("--x", default=None, help="comma-separated x values")
    p_table.add_argument("--x-min", type=float, default=None)
    p_table.add_argument("--x-max", type=float, default=None)
    p_table.add_argument("--x-count", type=int, default=None)
    p_table.add_argument("--x-log", action="store_true",
                         help="log-spaced x grid instead of linear")
    p_table.add_argument("--method", default="auto",
                         choices=["auto", "near-one", "kummer", "large-x"])
    p_table.add_argument("--terms", type=int, default=None)
    p_table.add_argument("--output", default=None, help="output path (default stdout)")
    p_table.add_argument("--format", default="csv", choices=["csv", "json"])
    p_table.add_argument("--deterministic", action="store_true",
                         help="suppress the timestamp comment line")

    p_verify = sub.add_parser("verify", help="recompute a reference or table file")
    p_verify.add_argument("--fixtures", required=True,
                          help="CSV with columns m,tau,x,qtilde_ref (or a table "
                               "CSV for self-comparison)")
    p_verify.add_argument("--tol", type=float, default=1e-12)
    p_verify.add_argument("--region", default=None, choices=["a", "b", "c"])
    p_verify.add_argument("--residual", action="store_true",
                          help="also run the m=1 recurrence-residual sweep")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "eval":
        return cmd_eval(args)
    if args.command == "table":
        return cmd_table(args, parser)
    return cmd_verify(args)


if __name__ == "__main__":
    sys.exit(main())
