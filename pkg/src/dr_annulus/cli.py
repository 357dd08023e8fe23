"""Command-line interface.

Subcommands: curves, classify, nu, omega, sample, hilbert, compare.  All
outputs are deterministic for a fixed configuration.  Exit codes: 0 on
success, 1 for usage or I/O problems, 2 for internal-consistency failures
(disagreeing classification paths, unbracketed roots).
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction

from . import __version__
from .annulus import AnnulusModel, nu, omega, superlevel_inner_radius
from .degree_rips import (
    default_workers,
    distance_index,
    hilbert_grid,
    region_agreement,
)
from .errors import DomainError, InternalInconsistencyError
from .fileio import (
    atomic_write_text,
    curves_csv,
    float_axis,
    fraction_axis,
    fmt,
    hilbert_csv,
    json_text,
    metadata_comment,
)
from .regions import ELL_MAX, INF, classify, classify_via_radius, phi
from .sampling import (
    cloud_metadata,
    points_csv_lines,
    read_points_csv,
    sample,
    sidecar_path,
)

USAGE_EXIT = 1
INCONSISTENCY_EXIT = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_EXIT)


def _add_model_flags(p):
    p.add_argument("--R", type=float, default=0.4, help="inner radius (> 0)")
    p.add_argument("--Q", type=float, default=0.5, help="outer radius (> R)")
    p.add_argument("--w", type=float, default=0.05, help="inner-disc mass in [0, 1)")


def _model(args) -> AnnulusModel:
    try:
        return AnnulusModel(R=args.R, Q=args.Q, w=args.w)
    except ValueError as exc:
        raise DomainError(str(exc)) from None


def _meta(args, command: str, **extra) -> dict:
    meta = {
        "tool": "dr-annulus",
        "version": __version__,
        "command": command,
        "model": {"R": args.R, "Q": args.Q, "w": args.w},
    }
    meta.update(extra)
    return meta


def _emit(text: str, out) -> None:
    if out:
        atomic_write_text(out, text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dr-annulus")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("curves", parents=[], help="phi_ell over an s grid (CSV)")
    _add_model_flags(p)
    p.add_argument("--s-min", default="0.01")
    p.add_argument("--s-max", default="0.6")
    p.add_argument("--s-steps", type=int, default=200)
    p.add_argument("--ell-max", type=int, default=2,
                   help="largest finite ell to tabulate (inf is always included)")
    p.add_argument("--out", default=None)

    p = sub.add_parser("classify", help="region label at one (s, k), both paths")
    _add_model_flags(p)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--ell-max", type=int, default=ELL_MAX)
    p.add_argument("--out", default=None)

    p = sub.add_parser("nu", help="ball measure nu_s(c) (debug evaluator)")
    _add_model_flags(p)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--out", default=None)

    p = sub.add_parser("omega", help="peak locus of nu_s (debug evaluator)")
    _add_model_flags(p)
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--out", default=None)

    p = sub.add_parser("sample", help="seeded point cloud (CSV + metadata sidecar)")
    _add_model_flags(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("hilbert", help="H0/H1 Hilbert function over an (s, k) grid")
    p.add_argument("--points", required=True, help="points CSV (x,y header)")
    p.add_argument("--s-min", default="0.01")
    p.add_argument("--s-max", default="0.2")
    p.add_argument("--s-steps", type=int, default=40)
    p.add_argument("--k-min", default="0")
    p.add_argument("--k-max", default="0.05")
    p.add_argument("--k-steps", type=int, default=40)
    p.add_argument("--out", default=None)

    p = sub.add_parser("compare", help="empirical H1 vs the analytic region diagram")
    _add_model_flags(p)
    p.add_argument("--points", default=None, help="points CSV; omit to sample")
    p.add_argument("--n", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--s-min", default="0.01")
    p.add_argument("--s-max", default="0.2")
    p.add_argument("--s-steps", type=int, default=40)
    p.add_argument("--k-min", default="0")
    p.add_argument("--k-max", default="0.05")
    p.add_argument("--k-steps", type=int, default=40)
    p.add_argument("--margin", type=float, default=0.2)
    p.add_argument("--ell-max", type=int, default=ELL_MAX)
    p.add_argument("--out", default=None)
    return parser


def _grid_args(args):
    s_axis = float_axis(args.s_min, args.s_max, args.s_steps)
    k_axis = fraction_axis(args.k_min, args.k_max, args.k_steps)
    return s_axis, k_axis


def cmd_curves(args) -> int:
    model = _model(args)
    if args.ell_max < 0:
        raise DomainError(f"--ell-max must be non-negative, got {args.ell_max}")
    s_axis = float_axis(args.s_min, args.s_max, args.s_steps)
    ells = list(range(args.ell_max + 1)) + [INF]
    rows = [(ell, s, phi(model, ell, s)) for ell in ells for s in s_axis]
    meta = _meta(
        args, "curves",
        s_grid={"min": args.s_min, "max": args.s_max, "steps": args.s_steps},
        ell_max=args.ell_max,
    )
    _emit(curves_csv(meta, rows), args.out)
    return 0


def cmd_classify(args) -> int:
    model = _model(args)
    if not 0 <= args.k <= 1:
        raise DomainError(f"--k must lie in [0, 1], got {args.k}")
    label = classify(model, args.s, args.k, tol=args.tol, ell_max=args.ell_max)
    label_r = classify_via_radius(model, args.s, args.k, ell_max=args.ell_max)
    p = superlevel_inner_radius(model, args.s, args.k)
    upper, lower = _phi_bracket(model, args.s, args.k, args.ell_max)
    payload = {
        "label": label.kind,
        "label_via_radius": label_r.kind,
        "phi_bracket": {"upper": upper, "lower": lower},
        "P": p,
        "s": args.s,
        "k": args.k,
    }
    if label.ell is not None:
        payload["ell"] = label.ell
    if label_r.ell is not None:
        payload["ell_via_radius"] = label_r.ell
    disagree = (
        label.kind != "boundary"
        and label_r.kind != "boundary"
        and (label.kind, label.ell) != (label_r.kind, label_r.ell)
    )
    _emit(json_text(payload), args.out)
    if disagree:
        print(
            f"dr-annulus: classification paths disagree at s={args.s}, k={args.k}: "
            f"{label} vs {label_r}",
            file=sys.stderr,
        )
        return INCONSISTENCY_EXIT
    return 0


def _phi_bracket(model, s, k, ell_max):
    """Curve values immediately above and below k (None past the ends)."""
    values = [phi(model, ell, s) for ell in range(ell_max + 1)] + [
        phi(model, INF, s)
    ]
    above = [v for v in values if v >= k]
    below = [v for v in values if v <= k]
    return (min(above) if above else None, max(below) if below else None)


def cmd_nu(args) -> int:
    model = _model(args)
    value = nu(model, args.s, args.c)
    _emit(json_text({"s": args.s, "c": args.c, "nu": value}), args.out)
    return 0


def cmd_omega(args) -> int:
    model = _model(args)
    peak = omega(model, args.s)
    payload = {
        "s": peak.s,
        "omega": peak.omega,
        "M": peak.M,
        "regime": peak.regime.value,
    }
    _emit(json_text(payload), args.out)
    return 0


def cmd_sample(args) -> int:
    model = _model(args)
    if args.n < 1:
        raise DomainError(f"--n must be at least 1, got {args.n}")
    cloud = sample(model, args.n, args.seed)
    meta = _meta(args, "sample", n=args.n, seed=args.seed, prng=cloud_metadata(cloud)["prng"])
    text = "\n".join(points_csv_lines(cloud, metadata_comment(meta)[2:])) + "\n"
    atomic_write_text(args.out, text)
    atomic_write_text(sidecar_path(args.out), json_text(cloud_metadata(cloud)))
    return 0


def cmd_hilbert(args) -> int:
    points = read_points_csv(args.points)
    index = distance_index(points)
    s_axis, k_axis = _grid_args(args)
    grid = hilbert_grid(index, s_axis, k_axis, n_jobs=default_workers())
    meta = {
        "tool": "dr-annulus",
        "version": __version__,
        "command": "hilbert",
        "points": str(args.points),
        "n": index.n,
        "s_grid": {"min": args.s_min, "max": args.s_max, "steps": args.s_steps},
        "k_grid": {"min": args.k_min, "max": args.k_max, "steps": args.k_steps},
    }
    _emit(hilbert_csv(meta, grid), args.out)
    return 0


def cmd_compare(args) -> int:
    model = _model(args)
    if args.points:
        points = read_points_csv(args.points)
        source = {"points": str(args.points)}
    else:
        points = sample(model, args.n, args.seed).points
        source = {"n": args.n, "seed": args.seed}
    index = distance_index(points)
    s_axis, k_axis = _grid_args(args)
    grid = hilbert_grid(index, s_axis, k_axis, n_jobs=default_workers())
    report = region_agreement(grid, model, args.margin, ell_max=args.ell_max)
    report["model"] = {"R": args.R, "Q": args.Q, "w": args.w}
    report["source"] = source
    _emit(json_text(report), args.out)
    return 0


_COMMANDS = {
    "curves": cmd_curves,
    "classify": cmd_classify,
    "nu": cmd_nu,
    "omega": cmd_omega,
    "sample": cmd_sample,
    "hilbert": cmd_hilbert,
    "compare": cmd_compare,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except InternalInconsistencyError as exc:
        print(f"dr-annulus: internal inconsistency: {exc}", file=sys.stderr)
        return INCONSISTENCY_EXIT
    except (DomainError, ValueError, OSError) as exc:
        print(f"dr-annulus: error: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
