"""
Command Line
============

The hypermet command: validate and analyze distance matrices, build rho
matrices of sampled domains, run the sharpness sweep and check the
rearrangement inequality.

Exit codes are 0 on success, 1 when an input violates a metric or geometric
requirement, and 2 when an input file cannot be read.
"""
import argparse
import sys

from ..utils import getLogger, log_to_console, log_to_file
from ..utils.exceptions import HyperMetParseError, HyperMetValueError
from ..version import __version__
from ._commands import cmd_analyze, cmd_lemma, cmd_rho, cmd_sweep, cmd_validate, emit
from ._manifest import RunManifest

logger = getLogger(__name__)


def _common(parser):
    parser.add_argument("--threads", type=int, default=None, help="worker threads")
    parser.add_argument(
        "--tol-rel",
        dest="tol_rel",
        type=float,
        default=None,
        help="relative triangle tolerance",
    )
    parser.add_argument(
        "--log-level",
        dest="log_level",
        choices=["debug", "info", "warning", "error"],
        default="warning",
    )
    parser.add_argument("--log-file", dest="log_file", default=None)


def build_parser():
    """Argument parser for every hypermet subcommand

    Returns
    -------
    argparse.ArgumentParser
    """
    parser = argparse.ArgumentParser(
        prog="hypermet",
        description="Four point analysis of finite metric spaces and boundary inversion metrics",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a distance matrix against the metric axioms")
    p.add_argument("matrix", help="labelled CSV or JSON distance matrix")
    _common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="Ptolemaic, Gromov and strong four point scans")
    p.add_argument("matrix", help="labelled CSV or JSON distance matrix")
    p.add_argument("--epsilon", type=float, default=None, help="strong hyperbolicity rate")
    p.add_argument(
        "--find-epsilon",
        dest="find_epsilon",
        action="store_true",
        help="search for the largest feasible rate",
    )
    p.add_argument(
        "--prior-R",
        dest="prior_R",
        type=float,
        default=None,
        help="boundary separation for the prior Gromov bound",
    )
    p.add_argument("--out", default=None, help="write the report and a manifest")
    _common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("rho", help="rho matrix of interior points over a boundary sample")
    p.add_argument("--space", default="euclidean:2")
    p.add_argument("--interior", required=True)
    p.add_argument("--boundary", required=True)
    p.add_argument("--out", required=True)
    _common(p)
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("sweep", help="sharpness sweep near a boundary geodesic")
    p.add_argument("--space", default="euclidean:2")
    p.add_argument("--r", type=float, default=1.0, help="half length of the geodesic pq")
    p.add_argument("--theta-max", dest="theta_max", type=float, default=0.5)
    p.add_argument("--steps", type=int, default=20)
    p.add_argument("--R", dest="R", type=float, default=None, help="minimum d(q, w)")
    p.add_argument(
        "--extra-boundary",
        dest="extra_boundary",
        default=None,
        help="points file with the boundary points besides p and q",
    )
    p.add_argument(
        "--pq-only",
        dest="pq_only",
        action="store_true",
        help="use the boundary {p, q} only",
    )
    p.add_argument("--out", required=True)
    p.add_argument("--points-out", dest="points_out", default=None)
    p.add_argument("--progress", action="store_true")
    _common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("lemma", help="rearrangement inequality")
    p.add_argument("values", nargs="*", type=float, help="alpha beta gamma delta")
    p.add_argument("--random", type=int, default=None, help="number of random tuples")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-12)
    _common(p)
    p.set_defaults(func=cmd_lemma)
    return parser


def main(argv=None):
    """Run hypermet and return its exit code

    Parameters
    ----------
    argv : list of str, optional
        arguments without the program name, by default sys.argv[1:]

    Returns
    -------
    int
    """
    args = build_parser().parse_args(argv)
    log_to_console(args.log_level)
    if args.log_file is not None:
        log_to_file(args.log_file, level=args.log_level)
    try:
        return args.func(args)
    except (HyperMetParseError, OSError) as e:
        logger.error(f"{args.command}: {e}")
        print(f"hypermet {args.command}: {e}", file=sys.stderr)
        return 2
    except HyperMetValueError as e:
        logger.error(f"{args.command}: {e}")
        print(f"hypermet {args.command}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
