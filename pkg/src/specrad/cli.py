"""Command-line front end.

Subcommands: classify | radius | partition | simulate | oracle.
Exit codes: 0 success, 2 parse error, 3 non-convergence, 4 oracle guard
exceeded.  --format machine emits a JSON report with stable keys (see
README for the key sets).
"""

import argparse
import json
import sys

import numpy as np

from . import analysis, oracle
from .errors import (
    NonConvergenceError,
    OracleGuardError,
    PrimitivityUndecidedError,
    SpecradError,
    SpectralNonConvergenceError,
    TensorFormatError,
)
from .hopm import HopmConfig
from .partition import strong_partition, weak_partition
from .spectral import spectral_radius
from .tensorfile import load_tensor

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NONCONVERGENCE = 3
EXIT_ORACLE_GUARD = 4


def build_parser():
    parser = argparse.ArgumentParser(
        prog="specrad",
        description="Spectral radius and structure analysis of nonnegative tensors",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=["table", "machine"], default="table")

    p = sub.add_parser("classify", help="seven-class structure profile plus M, G, R")
    p.add_argument("file")
    add_format(p)

    p = sub.add_parser("radius", help="spectral radius via partition + power method")
    p.add_argument("file")
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--max-iter", type=int, default=10000)
    p.add_argument("--no-shift", action="store_true")
    p.add_argument("--start", choices=["uniform", "random"], default="uniform")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--trace", action="store_true")
    add_format(p)

    p = sub.add_parser("partition", help="weakly irreducible or irreducible blocks")
    p.add_argument("file")
    p.add_argument("--mode", choices=["weak", "strong"], default="weak")
    add_format(p)

    p = sub.add_parser("simulate", help="random-tensor benchmark row")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", type=int, default=3)
    p.add_argument("--density", type=float, required=True)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-6)
    add_format(p)

    p = sub.add_parser("oracle", help="brute-force verifiers on a tensor file")
    p.add_argument("file")
    p.add_argument("--grid", type=int, default=None, metavar="RESOLUTION")
    add_format(p)

    return parser


def _matrix_rows(M):
    return [[float(v) for v in row] for row in M]


def _emit(report, fmt, table_fn):
    if fmt == "machine":
        print(json.dumps(report, sort_keys=True))
    else:
        table_fn(report)


def cmd_classify(args):
    T = load_tensor(args.file)
    try:
        profile = analysis.classify(T).as_dict()
    except PrimitivityUndecidedError as err:
        profile = {
            "strictly_nonnegative": bool(np.all(analysis.row_sums(T) > 0)),
            "weakly_irreducible": analysis.matrix_irreducible(analysis.representation(T)),
            "weakly_primitive": analysis.matrix_primitive(analysis.representation(T)),
            "irreducible": analysis.is_irreducible(T),
            "primitive": f"undecided: {err}",
            "weakly_positive": bool(
                np.all(analysis.majorization(T)[~np.eye(T.dim, dtype=bool)] > 0)
            ),
            "essentially_positive": bool(np.all(analysis.majorization(T) > 0)),
        }
    report = {
        "order": T.order,
        "dim": T.dim,
        "profile": profile,
        "majorization": _matrix_rows(analysis.majorization(T)),
        "representation": _matrix_rows(analysis.representation(T)),
        "row_sums": [float(v) for v in analysis.row_sums(T)],
    }

    def table(rep):
        print(f"tensor: order {rep['order']}, dimension {rep['dim']}")
        for name, verdict in rep["profile"].items():
            print(f"  {name:<22} {verdict}")
        print("majorization M(T):")
        for row in rep["majorization"]:
            print("  " + "  ".join(f"{v:g}" for v in row))
        print("representation G(T):")
        for row in rep["representation"]:
            print("  " + "  ".join(f"{v:g}" for v in row))
        print("row sums R(T): " + "  ".join(f"{v:g}" for v in rep["row_sums"]))

    _emit(report, args.format, table)
    return EXIT_OK


def _trace_rows(block_number, trace):
    return [
        {
            "block": block_number,
            "iteration": row.iteration,
            "alpha": row.alpha,
            "beta": row.beta,
            "width": row.width,
            "residual": row.residual,
        }
        for row in trace
    ]


def cmd_radius(args):
    T = load_tensor(args.file)
    cfg = HopmConfig(
        tolerance=args.tol,
        max_iterations=args.max_iter,
        shift=not args.no_shift,
        start=args.start,
        seed=args.seed,
    )
    report = spectral_radius(T, cfg)
    out = {
        "rho": report.rho,
        "blocks": [list(r.indices) for r in report.block_results],
        "block_results": [
            {
                "indices": list(r.indices),
                "value": r.value,
                "vector": [float(v) for v in r.vector],
                "iterations": r.iterations,
                "residual": r.residual,
            }
            for r in report.block_results
        ],
        "argmax_block": report.argmax_block,
        "total_iterations": report.total_iterations,
        "assembled_vector": None
        if report.assembled_vector is None
        else [float(v) for v in report.assembled_vector],
        "assembled_residual": report.assembled_residual,
    }
    if args.trace:
        out["trace"] = [
            row
            for b, r in enumerate(report.block_results, start=1)
            for row in _trace_rows(b, r.trace)
        ]

    def table(rep):
        print(f"rho = {rep['rho']:.6f}")
        for b, r in enumerate(rep["block_results"], start=1):
            vec = ", ".join(f"{v:.4f}" for v in r["vector"])
            print(
                f"block {b} {r['indices']}: value {r['value']:.6f}, "
                f"{r['iterations']} iterations, residual {r['residual']:.3e}, "
                f"vector ({vec})"
            )
        if rep["assembled_vector"] is not None:
            vec = ", ".join(f"{v:.4f}" for v in rep["assembled_vector"])
            print(f"assembled eigenvector ({vec}), residual {rep['assembled_residual']:.3e}")
        else:
            print("assembled eigenvector: none certified")
        if "trace" in rep:
            print("Blk  Ite      alpha       beta        gap    residual")
            for row in rep["trace"]:
                print(
                    f"{row['block']:>3} {row['iteration']:>4} "
                    f"{row['alpha']:>10.3f} {row['beta']:>10.3f} "
                    f"{row['width']:>10.3e} {row['residual']:>10.3e}"
                )

    _emit(out, args.format, table)
    return EXIT_OK


def cmd_partition(args):
    T = load_tensor(args.file)
    part = weak_partition(T) if args.mode == "weak" else strong_partition(T)
    out = {
        "mode": args.mode,
        "blocks": [list(b) for b in part.blocks],
        "block_profiles": [],
    }
    for sub in part.induced:
        try:
            out["block_profiles"].append(analysis.classify(sub).as_dict())
        except PrimitivityUndecidedError as err:
            out["block_profiles"].append({"primitive": f"undecided: {err}"})

    def table(rep):
        print(f"{rep['mode']} partition: {len(rep['blocks'])} block(s)")
        for b, (indices, profile) in enumerate(
            zip(rep["blocks"], rep["block_profiles"]), start=1
        ):
            verdicts = ", ".join(f"{k}={v}" for k, v in profile.items())
            print(f"  block {b}: {indices}  [{verdicts}]")

    _emit(out, args.format, table)
    return EXIT_OK


def cmd_simulate(args):
    from .simulate import run_simulation

    row = run_simulation(
        args.n, args.order, args.density, args.trials, seed=args.seed, tolerance=args.tol
    )
    out = row.as_dict()

    def table(rep):
        print(
            "n={n} order={order} density={density} trials={trials}: "
            "mean_rho={mean_rho:.4f} per_weakly_irreducible={percent_weakly_irreducible:.1f}% "
            "mean_ite={mean_iterations:.2f} mean_blocks={mean_blocks:.2f} "
            "mean_res={mean_residual:.3e} wall={wall_time:.2f}s".format(**rep)
        )

    _emit(out, args.format, table)
    return EXIT_OK


def cmd_oracle(args):
    T = load_tensor(args.file)
    red = oracle.reducible_bruteforce(T)
    weak = oracle.weakly_reducible_bruteforce(T)
    out = {
        "reducible": red.verdict,
        "reducible_witness": sorted(red.witness) if red.witness else None,
        "weakly_reducible": weak.verdict,
        "weakly_reducible_witness": sorted(weak.witness) if weak.witness else None,
        "subsets_enumerated": red.work + weak.work,
    }
    if args.grid is not None:
        grid = oracle.cw_grid(T, args.grid)
        out["grid_resolution"] = args.grid
        out["grid_lower_bound"] = grid.verdict
        out["grid_points"] = grid.work

    def table(rep):
        print(f"reducible: {rep['reducible']} (witness {rep['reducible_witness']})")
        print(
            f"weakly reducible: {rep['weakly_reducible']} "
            f"(witness {rep['weakly_reducible_witness']})"
        )
        if "grid_lower_bound" in rep:
            print(
                f"grid lower bound at resolution {rep['grid_resolution']}: "
                f"{rep['grid_lower_bound']:.6f} over {rep['grid_points']} points"
            )

    _emit(out, args.format, table)
    return EXIT_OK


def main(argv=None):
    args = build_parser().parse_args(argv)
    handlers = {
        "classify": cmd_classify,
        "radius": cmd_radius,
        "partition": cmd_partition,
        "simulate": cmd_simulate,
        "oracle": cmd_oracle,
    }
    try:
        return handlers[args.command](args)
    except (TensorFormatError, FileNotFoundError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except SpectralNonConvergenceError as err:
        print(f"error: {err}", file=sys.stderr)
        for res in err.partial_results:
            print(
                f"  finished block {list(res.indices)}: value {res.value:.6f}",
                file=sys.stderr,
            )
        print(
            f"  failing block {list(err.failing_block)}: bracket "
            f"[{err.lower}, {err.upper}]",
            file=sys.stderr,
        )
        return EXIT_NONCONVERGENCE
    except NonConvergenceError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except OracleGuardError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_ORACLE_GUARD
    except SpecradError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
