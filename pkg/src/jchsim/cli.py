"""Command-line frontend.

Subcommands:
  solve   one parameter point: energy, gap, variances, distributions, phase
  sweep   grid of (delta, hopping, n) points -> CSV/JSON
  gaps    zero-hopping group-gap table over a detuning grid (n = 4)
  fig9    site-variance vs excitation-number scan at both detuning signs
  check   full oracle suite (closed forms vs numerics)

Exit codes: 0 success, 1 check failure, 2 usage error, 3 numeric failure.
All energies are in units of the atom-field coupling.
"""

import argparse
import json
import sys

import numpy as np

from jchsim.analytic import fig1_gap_table
from jchsim.checks import CHECK_NAMES, CheckConfig, run_checks
from jchsim.hilbert import Basis
from jchsim.model import ModelParams, build_hamiltonian
from jchsim.observables import polariton_group_distribution
from jchsim.solver import SolverError, ground_state
from jchsim.sweep import (
    GridSpec,
    Thresholds,
    evaluate_point,
    fig9_scan,
    run_sweep,
    write_output,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3


def parse_axis(text):
    """Either `min:max:count` (linear grid) or a comma list of values."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise argparse.ArgumentTypeError(f"expected min:max:count, got {text!r}")
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
        if count < 1:
            raise argparse.ArgumentTypeError("count must be >= 1")
        return [float(x) for x in np.linspace(lo, hi, count)]
    return [float(x) for x in text.split(",")]


def parse_int_list(text):
    return [int(x) for x in text.split(",")]


def _add_model_args(p):
    p.add_argument("--delta", type=float, default=0.0, help="detuning (units of the coupling)")
    p.add_argument("--hopping", type=float, default=0.0, help="photon hopping strength")
    p.add_argument("--coupling", type=float, default=1.0, help="atom-field coupling (energy unit)")
    p.add_argument(
        "--include-omega-c",
        type=float,
        default=0.0,
        metavar="W",
        help="re-add the constant N*omega_c shift with omega_c = W",
    )


def build_parser():
    ap = argparse.ArgumentParser(prog="jchsim", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one parameter point")
    p.add_argument("--n", type=int, required=True, help="total excitation number")
    _add_model_args(p)
    p.add_argument("--dump-amplitudes", action="store_true", help="print the full state vector")
    p.add_argument("--json", metavar="PATH", help="write the report as JSON")

    p = sub.add_parser("sweep", help="sweep a parameter grid to CSV/JSON")
    p.add_argument("--n", type=parse_int_list, required=True, metavar="N1,N2,...")
    p.add_argument("--delta", type=parse_axis, required=True, metavar="MIN:MAX:COUNT|LIST")
    p.add_argument("--hopping", type=parse_axis, required=True, metavar="MIN:MAX:COUNT|LIST")
    p.add_argument("--coupling", type=float, default=1.0)
    p.add_argument("--eps-sf", type=float, default=0.05, help="insulator cutoff on d_n1/N")
    p.add_argument("--eps-a", type=float, default=0.01, help="atomic-variance cutoff")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", required=True)

    p = sub.add_parser("gaps", help="zero-hopping group-gap table (n = 4)")
    p.add_argument("--delta", type=parse_axis, required=True, metavar="MIN:MAX:COUNT|LIST")
    p.add_argument("--coupling", type=float, default=1.0)
    p.add_argument("--out", help="write CSV here instead of stdout")

    p = sub.add_parser("fig9", help="site variance vs excitation number at large detuning")
    p.add_argument("--hopping", type=float, default=25.0)
    p.add_argument("--delta-magnitude", type=float, default=1e4)
    p.add_argument("--n", type=parse_int_list, default=list(range(4, 31, 2)), metavar="N1,N2,...")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", required=True)

    p = sub.add_parser("check", help="run the oracle suite")
    p.add_argument("--only", action="append", choices=sorted(CHECK_NAMES), help="run a single named check (repeatable)")
    p.add_argument("--n-max", type=int, default=30, help="bound on brute-force excitation numbers")
    p.add_argument("--seed", type=int, default=20240901)
    return ap


def cmd_solve(args):
    if args.n < 0:
        print("error: --n must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    basis = Basis(args.n)
    params = ModelParams(
        omega_c=args.include_omega_c,
        delta=args.delta,
        coupling=args.coupling,
        hopping=args.hopping,
    )
    try:
        gs = ground_state(build_hamiltonian(params, basis))
        rec = evaluate_point(
            args.n, args.delta, args.hopping, ModelParams(omega_c=args.include_omega_c, coupling=args.coupling)
        )
    except SolverError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    report = {
        "n_total": args.n,
        "delta": args.delta,
        "hopping": args.hopping,
        "coupling": args.coupling,
        "omega_c": args.include_omega_c,
        "energy": rec.energy,
        "gap": rec.gap,
        "d_n1": rec.d_n1,
        "d_n1_rel": rec.d_n1_rel,
        "d_n1a": rec.d_n1a,
        "prod": rec.prod,
        "prod_rel": rec.prod_rel,
        "p_na": [rec.p_na0, rec.p_na1, rec.p_na2],
        "phase": rec.phase,
        "degenerate": rec.degenerate,
    }
    if args.n >= 1:
        dist = polariton_group_distribution(gs.vector, basis, params)
        report["p_group"] = [
            {"labels": list(g.labels), "energy": g.energy, "probability": g.probability}
            for g in dist.groups
        ]
    for key in (
        "energy", "gap", "d_n1", "d_n1_rel", "d_n1a", "prod", "prod_rel",
    ):
        print(f"{key:10s} {report[key]:.12g}")
    print("p_na       " + " ".join("%.12g" % x for x in report["p_na"]))
    if "p_group" in report:
        print("p_group    " + " ".join("%.6g" % g["probability"] for g in report["p_group"]))
    print(f"phase      {rec.phase}")
    print(f"degenerate {str(rec.degenerate).lower()}")
    if args.dump_amplitudes:
        report["amplitudes"] = [float(x) for x in gs.vector]
        print("amplitudes:")
        for s, a in zip(basis, gs.vector):
            print(f"  ({s.atom1},{s.atom2},{s.n1},{s.n2}) {a:+.12g}")
    if args.json:
        with open(args.json, "w") as f:
            json.dump(report, f, indent=1)
            f.write("\n")
    return EXIT_OK


def cmd_sweep(args):
    grid = GridSpec(
        delta_values=args.delta, h_values=args.hopping, n_values=args.n
    )
    thresholds = Thresholds(eps_sf=args.eps_sf, eps_a=args.eps_a)
    records = run_sweep(
        grid, ModelParams(coupling=args.coupling), thresholds, jobs=args.jobs
    )
    write_output(records, args.format, args.out)
    n_failed = sum(r.failed for r in records)
    if n_failed:
        print(f"{n_failed} grid point(s) failed to solve", file=sys.stderr)
        return EXIT_NUMERIC
    print(f"wrote {len(records)} records to {args.out}")
    return EXIT_OK


def cmd_gaps(args):
    table = fig1_gap_table(args.delta, coupling=args.coupling)
    lines = ["delta," + ",".join(f"gap{i + 1}" for i in range(table.shape[1]))]
    for d, row in zip(args.delta, table):
        lines.append("%.12g," % d + ",".join("%.12g" % x for x in row))
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_fig9(args):
    records, fits = fig9_scan(args.hopping, args.delta_magnitude, args.n)
    write_output(records, args.format, args.out)
    for key in ("+", "-"):
        slope, intercept = fits[key]
        print(f"branch {key}: slope {slope:.6f}, intercept {intercept:.6f}")
    return EXIT_OK


def cmd_check(args):
    cfg = CheckConfig(n_max=args.n_max, seed=args.seed)
    results = run_checks(only=args.only, cfg=cfg)
    if not results:
        print("no checks selected", file=sys.stderr)
        return EXIT_USAGE
    failed = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{status}  {r.name:22s} max dev {r.max_dev:.3e} (tol {r.tol:.0e})"
        if r.detail:
            line += f"  [{r.detail}]"
        print(line)
        if not r.passed:
            failed.append(r.name)
    if failed:
        print("failed checks: " + ", ".join(failed), file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors already
        return int(exc.code) if exc.code else EXIT_OK
    handlers = {
        "solve": cmd_solve,
        "sweep": cmd_sweep,
        "gaps": cmd_gaps,
        "fig9": cmd_fig9,
        "check": cmd_check,
    }
    try:
        return handlers[args.command](args)
    except SolverError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
