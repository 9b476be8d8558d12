"""
The hypermet subcommands. Each takes the parsed arguments and returns the
process exit code; errors are raised and mapped to exit codes by main.
"""
import json
import math
import sys

import numpy as np

from ..analysis import (
    CASES,
    LOG2,
    equality_flags,
    is_equality,
    gromov_delta,
    max_strong_epsilon,
    ptolemaic_defect,
    rearrangement_sides,
    strong_defect,
)
from ..domain import (
    boundary_separation,
    load_domain_sample,
    read_points,
    rho_matrix,
    zx_prior_bound,
)
from ..geometry import ModelSpace
from ..metric import build_matrix, read_matrix_entries, save_matrix, validate_entries
from ..sharpness import (
    SharpnessConfig,
    geometric_grid,
    sweep,
    sweep_frame,
    sweep_points_frame,
)
from ..utils import getLogger, HyperMetConfig, HyperMetJSONEncoder, format_real
from ..utils.exceptions import HyperMetValueError
from ._manifest import RunManifest

logger = getLogger(__name__)


def emit(payload, stream=None):
    """Write a JSON report with sorted keys"""
    stream = sys.stdout if stream is None else stream
    json.dump(payload, stream, cls=HyperMetJSONEncoder, sort_keys=True, indent=2)
    stream.write("\n")


def _write_report(payload, path):
    with open(path, "w") as fp:
        emit(payload, fp)


def _manifest(args):
    arguments = {k: v for k, v in vars(args).items() if k != "func"}
    return RunManifest(args.command, arguments)


def _epsilon_text(epsilon):
    if math.isinf(epsilon):
        return "unbounded"
    return epsilon


def cmd_validate(args):
    """Check a matrix file against the metric axioms, exit 0 iff it is a metric"""
    labels, entries = read_matrix_entries(args.matrix)
    tol_rel = args.tol_rel if args.tol_rel is not None else HyperMetConfig.tol_rel
    payload = {"labels": labels}
    try:
        report = validate_entries(entries, tol_rel)
    except HyperMetValueError as e:
        payload.update({"valid": False, "error": str(e)})
        emit(payload)
        return 1
    payload["report"] = report
    try:
        build_matrix(labels, entries, tol_rel)
        payload["valid"] = True
    except HyperMetValueError as e:
        payload.update({"valid": False, "error": str(e)})
    if report.worst_triple is not None:
        i, j, k, _ = report.worst_triple
        payload["worst_triple_labels"] = [labels[i], labels[j], labels[k]]
    emit(payload)
    return 0 if payload["valid"] else 1


def cmd_analyze(args):
    """Ptolemaic defect, least Gromov parameter and optional strong rate of a matrix"""
    manifest = _manifest(args)
    labels, entries = read_matrix_entries(args.matrix)
    manifest.add_input(args.matrix)
    m = build_matrix(labels, entries, args.tol_rel)
    ptolemaic = ptolemaic_defect(m, args.threads)
    gromov = gromov_delta(m, args.threads)
    witnesses = {"ptolemaic": ptolemaic.witness, "gromov": gromov.witness}
    payload = {
        "size": m.size,
        "ptolemaic_defect": ptolemaic.defect,
        "delta_min": gromov.delta_min,
        "log2": LOG2,
        "witnesses": witnesses,
    }
    if args.epsilon is not None:
        strong = strong_defect(m, args.epsilon, args.threads)
        payload["strong"] = {
            "epsilon": strong.epsilon,
            "feasible": strong.feasible,
            "max_defect": strong.max_defect,
        }
        witnesses["strong"] = strong.witness
    if args.find_epsilon:
        payload["epsilon_max"] = _epsilon_text(max_strong_epsilon(m, threads=args.threads))
    if args.prior_R is not None:
        payload["zx_prior_bound"] = zx_prior_bound(args.prior_R)
    for witness_name, witness in witnesses.items():
        if witness is not None:
            payload.setdefault("witness_labels", {})[witness_name] = list(
                witness.labelled(m.labels)
            )
    emit(payload)
    if args.out is not None:
        _write_report(payload, args.out)
        manifest.add_output(args.out)
        manifest.write(args.out)
    return 0


def cmd_rho(args):
    """rho matrix of a sampled domain, written with its manifest"""
    manifest = _manifest(args)
    space = ModelSpace.from_string(args.space)
    sample = load_domain_sample(space, args.interior, args.boundary)
    manifest.add_input(args.interior)
    manifest.add_input(args.boundary)
    m = rho_matrix(sample, tol_rel=args.tol_rel)
    separation = boundary_separation(sample)
    payload = {
        "space": str(space),
        "interior": sample.n_interior,
        "boundary": sample.n_boundary,
        "out": str(args.out),
        "log2": LOG2,
        "boundary_separation": separation,
        "zx_prior_bound": zx_prior_bound(separation),
    }
    # write only once the report is complete
    save_matrix(m, args.out)
    manifest.add_output(args.out)
    manifest.write(args.out)
    emit(payload)
    return 0


def cmd_sweep(args):
    """Sharpness sweep table, optional point coordinates, and a summary line"""
    manifest = _manifest(args)
    space = ModelSpace.from_string(args.space)
    if args.extra_boundary is not None:
        _, extra = read_points(args.extra_boundary, space)
        manifest.add_input(args.extra_boundary)
        grid = geometric_grid(args.theta_max, args.steps)
        config = SharpnessConfig(space, args.r, grid, extra, args.R)
    else:
        config = SharpnessConfig.default(
            space, args.r, args.theta_max, args.steps, args.R, extra=not args.pq_only
        )
    rows = sweep(config, progressbar=args.progress, threads=args.threads)
    frame = sweep_frame(rows)
    frame.to_csv(args.out, index=False, float_format=HyperMetConfig.float_format)
    manifest.add_output(args.out)
    if args.points_out is not None:
        points = sweep_points_frame(rows)
        points.to_csv(args.points_out, index=False, float_format=HyperMetConfig.float_format)
        manifest.add_output(args.points_out)
    manifest.write(args.out)
    last = rows[-1]
    print(
        f"rows {len(rows)} theta {format_real(last.theta)} "
        f"defect_delta {format_real(last.defect_delta)} "
        f"epsilon_max {format_real(last.epsilon_max)} log2 {format_real(LOG2)}"
    )
    return 0


def cmd_lemma(args):
    """Rearrangement inequality on one tuple or a seeded random batch"""
    if args.random is not None:
        if args.random < 1:
            raise HyperMetValueError(
                f"--random needs a positive sample count, got {args.random}"
            )
        rng = np.random.default_rng(args.seed)
        values = rng.exponential(1.0, size=(args.random, 4))
        # a share of exact zeros and ties
        values[rng.random(values.shape) < 0.1] = 0.0
        ties = rng.random(args.random) < 0.1
        values[ties, 3] = values[ties, 0]
        a, b, c, d = values.T
        lhs, rhs = rearrangement_sides(a, b, c, d)
        flags = equality_flags(a, b, c, d, args.tol)
        equal = is_equality(a, b, c, d, args.tol)
        violations = int(np.count_nonzero(lhs > rhs + 1e-12 * (1.0 + rhs)))
        payload = {
            "samples": args.random,
            "seed": args.seed,
            "violations": violations,
            "max_excess": float(np.max(lhs - rhs)),
            "equality": int(np.count_nonzero(equal)),
            "flagged": int(np.count_nonzero(flags.any(axis=1))),
            "disagreements": int(np.count_nonzero(flags.any(axis=1) != equal)),
        }
        emit(payload)
        return 0 if violations == 0 else 1
    if args.values is None or len(args.values) != 4:
        raise HyperMetValueError("lemma takes four values or --random N")
    alpha, beta, gamma, delta = args.values
    lhs, rhs = rearrangement_sides(alpha, beta, gamma, delta)
    flags = equality_flags(alpha, beta, gamma, delta, args.tol)
    payload = {
        "values": list(args.values),
        "lhs": lhs,
        "rhs": rhs,
        "holds": lhs <= rhs + 1e-12 * (1.0 + rhs),
        "cases": [name for name, flag in zip(CASES, flags) if flag],
    }
    emit(payload)
    return 0
