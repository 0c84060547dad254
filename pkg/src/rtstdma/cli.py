"""Command-line entry point: ``rtstdma {sweep-mmax,sweep-tframe,analytic,trace}``."""
from __future__ import annotations

import argparse
import logging
import sys

from .analytic import analytic_report
from .exceptions import RtsTdmaError
from .harness import DEFAULTS, parse_config, parse_config_text, report_to_csv, run_sweep
from .sic import format_trace, parse_instance


def _spec(args, kind):
    spec = parse_config(args.config, kind) if args.config else parse_config_text("", kind)
    changes = {}
    if args.seed is not None:
        changes["seed"] = args.seed
    if args.frames is not None:
        changes["frames_per_point"] = args.frames
    if changes:
        from dataclasses import replace
        spec = replace(spec, **changes)
    return spec


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_sweep(args):
    kind = "mmax" if args.command == "sweep-mmax" else "tframe"
    report = run_sweep(_spec(args, kind))
    _emit(report_to_csv(report), args.out)


def _fmt(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6f}".rstrip("0").rstrip(".")
    return str(value)


def cmd_analytic(args):
    spec = _spec(args, None) if args.config else None
    if spec is None:
        t_frame, m_max = DEFAULTS["t_frame_ms"], DEFAULTS["m_max"]
        tau_c, tau_t, tau_i = DEFAULTS["tau_c_ms"], DEFAULTS["tau_t_ms"], DEFAULTS["tau_i_ms"]
    else:
        t_frame, m_max = spec.t_frame, spec.m_max
        tau_c, tau_t, tau_i = spec.tau_c, spec.tau_t, spec.tau_i
    t_frame = args.t_frame if args.t_frame is not None else t_frame
    m_max = args.m_max if args.m_max is not None else m_max
    report = analytic_report(t_frame, m_max, tau_i, tau_t, tau_c)
    _emit("".join(f"{k}={_fmt(v)}\n" for k, v in report.items()), args.out)


def cmd_trace(args):
    with open(args.instance) as fh:
        cap = parse_instance(fh.read())
    _emit(format_trace(cap) + "\n", args.out)


def build_parser():
    parser = argparse.ArgumentParser(prog="rtstdma", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true", help="log per-point progress")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="key = value config file")
        p.add_argument("--out", help="write output here instead of stdout")
        p.add_argument("--seed", type=int, help="master seed (u64)")
        p.add_argument("--frames", type=int, help="frames per sweep point")

    for name, helptext in (("sweep-mmax", "throughput vs. M_max at fixed frame length"),
                           ("sweep-tframe", "throughput vs. frame length at fixed M_max")):
        p = sub.add_parser(name, help=helptext)
        common(p)
        p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("analytic", help="closed-form crossover points")
    common(p)
    p.add_argument("--t-frame", type=float, help="frame length in ms")
    p.add_argument("--m-max", type=int, help="vehicle count / CTP slots")
    p.set_defaults(func=cmd_analytic)

    p = sub.add_parser("trace", help="SIC trace of a contention-phase instance file")
    p.add_argument("instance", help="instance file: 'n_c=<n>' then '<id>: <slot,...>' lines")
    p.add_argument("--out", help="write output here instead of stdout")
    p.set_defaults(func=cmd_trace)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        args.func(args)
    except (RtsTdmaError, OSError) as exc:
        print(f"rtstdma: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
