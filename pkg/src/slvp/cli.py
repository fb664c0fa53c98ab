"""Command line entry point.

Subcommands: run (one benchmark problem), converge-space,
converge-time (the accuracy studies) and advect1d (the conservative
1-D advection model).  Flags override values from --config files.
"""
import argparse
import sys

import numpy as np

from . import convergence, io, solver
from .backend import backend_name
from .core import RunConfig


def _add_run_flags(p):
    p.add_argument("--problem", choices=("two_stream", "weak_landau",
                                         "strong_landau",
                                         "symmetric_two_stream"))
    p.add_argument("--nx", type=int, dest="n_x")
    p.add_argument("--nv", type=int, dest="n_v")
    p.add_argument("--cfl", type=float)
    p.add_argument("--order", type=int, choices=(1, 2, 3))
    p.add_argument("--interp", type=int, choices=(2, 4, 6),
                   dest="interp_order")
    p.add_argument("--tfinal", type=float, dest="t_final")
    p.add_argument("--reduced-prediction", action="store_true", default=None,
                   dest="reduced_prediction")
    p.add_argument("--diag-interval", type=float, dest="diag_interval")
    p.add_argument("--snapshot", type=float, action="append",
                   dest="snapshot_times", metavar="T")
    p.add_argument("--out", dest="out_dir")
    p.add_argument("--config", dest="config_file")


def build_parser():
    ap = argparse.ArgumentParser(prog="slvp",
                                 description="semi-Lagrangian WENO solver "
                                             "for the 1D-1V Vlasov-Poisson "
                                             "system")
    sub = ap.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run one benchmark problem")
    _add_run_flags(p_run)

    p_cs = sub.add_parser("converge-space", help="spatial accuracy study")
    p_cs.add_argument("--fast", action="store_true")
    p_cs.add_argument("--out", dest="out_dir")

    p_ct = sub.add_parser("converge-time", help="temporal accuracy study")
    p_ct.add_argument("--out", dest="out_dir")

    p_ad = sub.add_parser("advect1d", help="conservative 1-D advection model")
    p_ad.add_argument("--n", type=int, default=64)
    p_ad.add_argument("--cfl", type=float, default=0.5)
    p_ad.add_argument("--tfinal", type=float, default=1.0)
    p_ad.add_argument("--speed", type=float, default=1.0)
    return ap


def _config_from_args(args):
    flags = {k: getattr(args, k) for k in
             ("problem", "n_x", "n_v", "cfl", "order", "interp_order",
              "t_final", "reduced_prediction", "diag_interval", "out_dir")
             if getattr(args, k, None) is not None}
    if getattr(args, "snapshot_times", None):
        flags["snapshot_times"] = tuple(args.snapshot_times)
    if getattr(args, "config_file", None):
        return io.load_config(args.config_file, **flags)
    return RunConfig(**flags)


def cmd_run(args):
    config = _config_from_args(args)
    result = solver.run(config)
    paths = io.emit_outputs(result.records, result.snapshots, config,
                            result.grid, out_dir=config.out_dir)
    last = result.records[-1]
    print(f"backend={backend_name()} problem={config.problem} "
          f"steps={result.state.step_count} t={result.state.t:.6g}")
    print(f"e_l2={last.e_l2:.6e} rel_dev_l1={last.rel_dev_l1:.3e} "
          f"rel_dev_l2={last.rel_dev_l2:.3e} "
          f"rel_dev_energy={last.rel_dev_energy:.3e}")
    for p in paths:
        print("wrote", p)
    return 0


def _print_space_table(table):
    print(f"{'grid':>8} {'L1 error':>14} {'order':>8}")
    for lab, err, order in table.rows():
        otxt = f"{order:8.2f}" if order is not None else f"{'--':>8}"
        print(f"{lab:>8} {err:14.6e} {otxt}")


def cmd_converge_space(args):
    table = convergence.converge_space(fast=args.fast,
                                       progress=lambda m: print("  " + m))
    _print_space_table(table)
    if args.out_dir:
        import os
        os.makedirs(args.out_dir, exist_ok=True)
        path = os.path.join(args.out_dir, "converge_space.csv")
        with open(path, "w") as fh:
            fh.write("n,l1_error,order\n")
            for lab, err, order in table.rows():
                fh.write(f"{lab},{err:.17g},"
                         f"{'' if order is None else format(order, '.17g')}\n")
        print("wrote", path)
    return 0


def cmd_converge_time(args):
    tables = convergence.converge_time(progress=lambda m: print("  " + m))
    for l, table in sorted(tables.items()):
        print(f"temporal order {l}:")
        print(f"{'CFL':>6} {'L1 error':>14} {'order':>8}")
        for lab, err, order in table.rows():
            otxt = f"{order:8.2f}" if order is not None else f"{'--':>8}"
            print(f"{lab:>6g} {err:14.6e} {otxt}")
    if args.out_dir:
        import os
        os.makedirs(args.out_dir, exist_ok=True)
        path = os.path.join(args.out_dir, "converge_time.csv")
        with open(path, "w") as fh:
            fh.write("temporal_order,cfl,l1_error,order\n")
            for l, table in sorted(tables.items()):
                for lab, err, order in table.rows():
                    fh.write(f"{l},{lab:g},{err:.17g},"
                             f"{'' if order is None else format(order, '.17g')}\n")
        print("wrote", path)
    return 0


def cmd_advect1d(args):
    n = args.n
    dx = 2.0 * np.pi / n
    x = (np.arange(n) + 0.5) * dx
    state = solver.AdvectState1D(u=np.sin(x), t=0.0, speed=args.speed)
    dt = args.cfl * dx / abs(args.speed)
    mass0 = state.u.sum() * dx
    mass_scale = np.abs(state.u).sum() * dx
    while state.t < args.tfinal - 1e-12:
        step_dt = min(dt, args.tfinal - state.t)
        state = solver.conservative_step_1d(state, step_dt, dx)
    exact = np.sin(x - args.speed * state.t)
    err = np.mean(np.abs(state.u - exact))
    drift = abs(state.u.sum() * dx - mass0) / mass_scale
    print(f"n={n} t={state.t:.6g} L1_error={err:.6e} mass_drift={drift:.3e}")
    return 0


def main(argv=None):
    args = build_parser().parse_args(argv)
    handlers = {"run": cmd_run, "converge-space": cmd_converge_space,
                "converge-time": cmd_converge_time, "advect1d": cmd_advect1d}
    try:
        return handlers[args.command](args)
    except (ValueError, OSError, solver.StepFailure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
