"""Command-line interface: ``polbounds {analyze,boundary,cloud,rmt}``.

Tables go to stdout as CSV (or JSON with ``--format json``); ``--plot PATH``
additionally renders a figure of the same data. Exit codes: 0 success,
1 input or usage error, 2 unphysical Mueller matrix (report still printed).
"""
import argparse
import json
import math
import sys

import numpy as np

from . import __version__
from .bounds import CUSPS, CurveId, region, sample_curve
from .fileio import MatrixFileError, read_matrix_file, write_table
from .mueller import (
    NEG_EIG_TOL,
    as_mueller,
    depolarization_index_from_m,
    eigenspectrum,
    h_from_mueller,
    is_physical,
    polarization_entropy,
    raw_eigenvalues,
)
from .rmt import EnsembleConfig, MediumKind, sweep
from .sampler import SamplerConfig, generate_cloud

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_UNPHYSICAL = 2

CURVE_ORDER = (CurveId.C12, CurveId.C23, CurveId.C34, CurveId.C14, CurveId.C13, CurveId.C24)


class _Parser(argparse.ArgumentParser):
    # usage errors share exit code 1 with input errors; 2 is the unphysical verdict
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def seed_type(text):
    text = text.strip().lower()
    try:
        value = int(text, 16) if text.startswith("0x") else int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}") from None
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def _positive(minimum):
    def parse(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be at least {minimum}")
        return value

    return parse


def _nonneg_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number {text!r}") from None
    if not value >= 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser():
    parser = _Parser(
        prog="polbounds",
        description="Depolarization index and polarization entropy of Mueller matrices, "
        "their universal bounds, and random-matrix scattering ensembles.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="output format (default: csv)")
    common.add_argument("--plot", metavar="PATH", default=None,
                        help="also render a figure to PATH (format from extension)")

    p = sub.add_parser("analyze", parents=[common],
                       help="characterize a Mueller matrix read from a file")
    p.add_argument("path", help="4x4 matrix: 4 CSV lines, or JSON {\"mueller\": [[...]]}")
    p.add_argument("--tol", type=_nonneg_float, default=NEG_EIG_TOL,
                   help="tolerance on negative H eigenvalues (default: %(default)g)")

    p = sub.add_parser("boundary", parents=[common],
                       help="tabulate the six analytic curves and the four cusp points")
    p.add_argument("--samples", type=_positive(2), default=200,
                   help="points per curve (default: %(default)s)")

    p = sub.add_parser("cloud", parents=[common],
                       help="Monte Carlo sample of the admissible (D, E) domain")
    p.add_argument("--points", type=_positive(1), default=100_000,
                   help="number of sampled spectra (default: %(default)s)")
    p.add_argument("--seed", type=seed_type, default=0,
                   help="RNG seed, decimal or 0x-hex (default: %(default)s)")
    p.add_argument("--workers", type=_positive(1), default=1,
                   help="worker threads; output does not depend on it (default: 1)")

    p = sub.add_parser("rmt", parents=[common],
                       help="ensemble-averaged (D, E) versus number of detected modes")
    p.add_argument("--modes-max", type=_positive(1), default=30,
                   help="largest mode count N (default: %(default)s)")
    p.add_argument("--realizations", type=_positive(1), default=2000,
                   help="realizations per N (default: %(default)s)")
    p.add_argument("--kind", choices=("generic", "conserving", "both"), default="generic",
                   help="medium type (default: %(default)s)")
    p.add_argument("--seed", type=seed_type, default=0,
                   help="RNG seed, decimal or 0x-hex (default: %(default)s)")
    p.add_argument("--workers", type=_positive(1), default=1,
                   help="worker threads; output does not depend on it (default: 1)")
    return parser


def analyze_matrix(m, tol=NEG_EIG_TOL):
    """Report dict for a (possibly unnormalized) Mueller matrix."""
    m = as_mueller(m)
    physical, min_eig = is_physical(m, tol)
    h = h_from_mueller(m)
    if physical:
        lam = eigenspectrum(h, tol=tol)
        d = depolarization_index_from_m(m)
        e = polarization_entropy(lam)
        label = region(d, e)
    else:
        lam = raw_eigenvalues(h)
        try:
            d = depolarization_index_from_m(m)
        except ValueError:
            d = math.nan
        e = math.nan
        label = "unphysical"
    return {
        "d_m": float(d),
        "e_m": float(e),
        "eigenvalues": [float(x) for x in lam],
        "physical": bool(physical),
        "min_eigenvalue": float(min_eig),
        "region": label,
    }


ANALYZE_HEADER = ["d_m", "e_m", "lambda0", "lambda1", "lambda2", "lambda3",
                  "physical", "min_eigenvalue", "region"]


def cmd_analyze(args, out):
    try:
        m = read_matrix_file(args.path)
        report = analyze_matrix(m, args.tol)
    except (MatrixFileError, ValueError) as exc:
        print(f"polbounds analyze: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.format == "json":
        doc = dict(report)
        for key in ("d_m", "e_m"):
            if math.isnan(doc[key]):
                doc[key] = None
        json.dump(doc, out, indent=1)
        out.write("\n")
    else:
        row = [report["d_m"], report["e_m"], *report["eigenvalues"],
               report["physical"], report["min_eigenvalue"], report["region"]]
        write_table(out, ANALYZE_HEADER, [row])
    if args.plot and report["physical"]:
        from .plotting import figure_point

        figure_point(report["d_m"], report["e_m"], args.plot, label=args.path)
    return EXIT_OK if report["physical"] else EXIT_UNPHYSICAL


def boundary_rows(samples):
    rows = []
    for curve in CURVE_ORDER:
        rows.extend((curve.label, d, e) for d, e in sample_curve(curve, samples))
    rows.extend((p.id, p.d, p.e) for p in CUSPS)
    return rows


def cmd_boundary(args, out):
    write_table(out, ["curve_id", "d", "e"], boundary_rows(args.samples), args.format)
    if args.plot:
        from .plotting import figure_boundary

        figure_boundary(args.plot)
    return EXIT_OK


CLOUD_HEADER = ["index", "d", "e", "lambda0", "lambda1", "lambda2", "lambda3"]


def cmd_cloud(args, out):
    cloud = generate_cloud(SamplerConfig(args.points, args.seed), workers=args.workers)
    rows = (
        (i, d, e, *lam)
        for i, (d, e, lam) in enumerate(zip(cloud.d.tolist(), cloud.e.tolist(), cloud.spectra.tolist()))
    )
    write_table(out, CLOUD_HEADER, rows, args.format)
    if args.plot:
        from .plotting import figure_cloud

        figure_cloud(cloud, args.plot)
    return EXIT_OK


RMT_HEADER = ["kind", "n", "mean_d", "mean_e", "std_d", "std_e", "realizations"]


def cmd_rmt(args, out):
    kinds = list(MediumKind) if args.kind == "both" else [MediumKind(args.kind)]
    records = []
    for kind in kinds:
        cfg = EnsembleConfig(args.modes_max, args.realizations, kind, args.seed)
        records.extend(sweep(cfg, workers=args.workers))
    rows = [
        (r.kind.value, r.n, r.mean_d, r.mean_e, r.std_d, r.std_e, r.realizations)
        for r in records
    ]
    write_table(out, RMT_HEADER, rows, args.format)
    if args.plot:
        from .plotting import figure_rmt

        figure_rmt(records, args.plot)
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "boundary": cmd_boundary,
    "cloud": cmd_cloud,
    "rmt": cmd_rmt,
}


def main(argv=None, out=None):
    args = build_parser().parse_args(argv)
    np.seterr(all="ignore")
    return COMMANDS[args.command](args, out or sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
