"""Command-line harness for the seeded experiment suite.

Usage: sortkern <experiment> [flags]. Every flag has a default, so
`sortkern table1` reproduces the reference fill-distance table as is.
Exit codes: 0 success, 1 configuration error, 2 numerical failure.
"""

import argparse
import sys

from .errors import CapExceededError, ConfigError, FactorizationError, NumericalError
from .experiments import Experiment, ExperimentConfig, run
from .kernels import KernelFamily, KernelSpec


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags; config errors must exit 1 instead
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _int_list(text):
    try:
        vals = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def _eps_range(text):
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected start:stop:step, got {text!r}")
    try:
        start, stop, step = (float(v) for v in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected numeric start:stop:step, got {text!r}")
    if step <= 0 or start <= 0 or stop < start:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    out = []
    k = 0
    while True:
        # re-rounding keeps grid points like 0.15 free of accumulation noise
        v = round(start + k * step, 12)
        if v > stop + 1e-12:
            break
        out.append(v)
        k += 1
    return tuple(out)


def _build_parser():
    p = _Parser(prog="sortkern",
                description="Seeded kernel-canonicalization experiments; writes CSV.",
                formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    names = sorted(e.value for e in Experiment)
    p.add_argument("experiment",
                   help=f"one of: {', '.join(names)} (hyphens accepted)")
    p.add_argument("--d", type=_int_list, default=(3, 6, 9, 12), metavar="D1,D2,...",
                   help="dimensions")
    p.add_argument("--n", type=_int_list, default=(50, 500, 5000), metavar="N1,N2,...",
                   help="design sizes")
    p.add_argument("--trials", type=int, default=200, help="Monte Carlo trials")
    p.add_argument("--eps", type=_eps_range, default="0.05:1.5:0.05",
                   metavar="START:STOP:STEP", help="epsilon grid for tail curves")
    p.add_argument("--kernel", choices=["gaussian"], default="gaussian",
                   help="kernel family")
    p.add_argument("--amplitude", type=float, default=0.1591549,
                   help="kernel amplitude")
    p.add_argument("--bandwidth", type=float, default=1.0, help="kernel bandwidth")
    p.add_argument("--nu", type=int, default=2, help="smoothness order for bounds")
    p.add_argument("--alpha", type=float, default=1.05,
                   help="slack factor in sorted-mode bounds")
    p.add_argument("--mc-samples", type=int, default=20000,
                   help="Monte Carlo samples for L2 error estimates")
    p.add_argument("--candidates", type=int, default=200000,
                   help="candidate points per fill-distance trial")
    p.add_argument("--seed", type=int, default=20240601, help="master seed")
    p.add_argument("--out", default=None, metavar="PATH",
                   help="output CSV path (default: <experiment>.csv)")
    return p


def _config_from_args(args):
    name = args.experiment.replace("-", "_")
    try:
        experiment = Experiment(name)
    except ValueError:
        raise ConfigError(f"unknown experiment {args.experiment!r}; "
                          f"choose from {sorted(e.value for e in Experiment)}")
    kernel = KernelSpec(amplitude=args.amplitude, bandwidth=args.bandwidth,
                        family=KernelFamily(args.kernel))
    return ExperimentConfig(
        experiment=experiment, kernel=kernel, dims=args.d, ns=args.n,
        trials=args.trials, eps_grid=args.eps, nu=args.nu, alpha=args.alpha,
        mc_samples=args.mc_samples, candidate_count=args.candidates,
        seed=args.seed, out_path=args.out or f"{experiment.value}.csv")


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        cfg = _config_from_args(args)
        run(cfg)
    except (ConfigError, CapExceededError) as exc:
        print(f"sortkern: error: {exc}", file=sys.stderr)
        return 1
    except (NumericalError, FactorizationError) as exc:
        print(f"sortkern: numerical failure: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
