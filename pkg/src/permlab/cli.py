"""Experiment command line: metric PCA, fitness-distance correlation, EA runs.

Every command is replayable: the same flags and seed produce byte-identical
CSV bodies at any --threads setting. Exit codes: 0 success, 2 usage error,
3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import batch as _batch
from . import ea as _ea
from . import landscapes as _landscapes
from . import perms
from . import reports
from . import stats
from .distances import CapExceededError, MEASURES
from .mutation import make_operator

USAGE_ERROR = 2
CAP_ERROR = 3


def _default_threads() -> int:
    return os.cpu_count() or 1


def _parse_measures(text: str) -> list[str]:
    names = [t.strip() for t in text.split(",") if t.strip()]
    if not names:
        raise ValueError("empty measure list")
    for name in names:
        if name not in MEASURES:
            raise ValueError(f"unknown distance measure {name!r}")
    return names


def cmd_pca(args) -> int:
    measures = _parse_measures(args.measures)
    out_dir = Path(args.out)
    report = reports.ExperimentReport("pca", {
        "n": args.n, "mode": args.mode, "samples": args.samples,
        "seed": args.seed, "measures": measures, "reference": args.reference,
    })
    reference = None
    if args.reference == "random":
        reference = perms.random_permutation(
            args.n, perms.RandomSource(perms.derive_seed(args.seed, "reference")))
    R = stats.streamed_correlation(
        args.n, measures, mode=args.mode, samples=args.samples,
        seed=args.seed, reference=reference, threads=args.threads)
    pca = stats.jacobi_eigen(R)
    files = {
        "correlations": out_dir / "correlations.csv",
        "eigenvalues": out_dir / "eigenvalues.csv",
        "eigenvectors": out_dir / "eigenvectors.csv",
        "loadings": out_dir / "loadings.csv",
    }
    reports.write_matrix_csv(files["correlations"], measures, R)
    reports.write_eigenvalue_csv(files["eigenvalues"], pca.eigenvalues,
                                 pca.proportions)
    reports.write_component_csv(files["eigenvectors"], measures, pca.eigenvectors)
    reports.write_component_csv(files["loadings"], measures, pca.loadings)
    for name, path in files.items():
        report.add_table(name, path)
    report.write_metadata(out_dir)
    print(f"pca: wrote {len(files)} tables to {out_dir}")
    return 0


def cmd_fdc(args) -> int:
    out_dir = Path(args.out)
    report = reports.ExperimentReport("fdc", {
        "landscape": args.landscape, "samples": args.samples, "seed": args.seed,
    })
    land = _landscapes.fdc_landscape(args.landscape, seed=args.seed)
    rng = perms.RandomSource(perms.derive_seed(args.seed, "fdc", args.landscape))
    values = stats.fdc_table(land, _batch.PCA_MEASURES, args.samples, rng,
                             threads=args.threads)
    path = out_dir / "fdc.csv"
    reports.write_fdc_csv(path, _batch.PCA_MEASURES, values)
    report.add_table("fdc", path)
    report.write_metadata(out_dir)
    print(f"fdc: wrote {path} ({land.describe()})")
    return 0


def cmd_ea(args) -> int:
    op_specs = [t.strip() for t in args.operators.split(",") if t.strip()]
    if not op_specs:
        raise ValueError("empty operator list")
    for spec in op_specs:
        make_operator(spec)
    problem = _landscapes.problem_spec(args.problem, n=args.n)
    out_dir = Path(args.out)
    report = reports.ExperimentReport("ea", {
        "problem": args.problem, "n": args.n, "operators": op_specs,
        "runs": args.runs, "instances": args.instances,
        "generations": args.generations, "population": args.population,
        "seed": args.seed,
    })
    result = _ea.compare(op_specs, problem, runs=args.runs,
                         instances=args.instances, generations=args.generations,
                         population_size=args.population, seed=args.seed,
                         threads=args.threads)
    path = out_dir / "convergence.csv"
    reports.write_convergence_csv(path, result.checkpoints, result.mean_best)
    report.add_table("convergence", path)
    report.write_metadata(out_dir)
    print(f"ea: wrote {path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permlab",
        description="Permutation landscape experiments: metric PCA, FDC, EA comparisons.")
    sub = parser.add_subparsers(dest="command", required=True)

    pca = sub.add_parser("pca", help="correlate distance measures and extract components")
    pca.add_argument("--n", type=int, required=True, help="permutation length")
    pca.add_argument("--mode", choices=("exhaustive", "sampled"), default="exhaustive")
    pca.add_argument("--samples", type=int, default=None,
                     help="sample count (sampled mode)")
    pca.add_argument("--seed", type=int, default=1)
    pca.add_argument("--measures", default=",".join(_batch.PCA_MEASURES))
    pca.add_argument("--reference", choices=("identity", "random"), default="identity")
    pca.add_argument("--threads", type=int, default=_default_threads())
    pca.add_argument("--out", default="results/pca")
    pca.set_defaults(fn=cmd_pca)

    fdc = sub.add_parser("fdc", help="fitness-distance correlation for a named landscape")
    fdc.add_argument("--landscape", required=True,
                     choices=_landscapes.FDC_LANDSCAPES)
    fdc.add_argument("--samples", type=int, default=100000)
    fdc.add_argument("--seed", type=int, default=1)
    fdc.add_argument("--threads", type=int, default=_default_threads())
    fdc.add_argument("--out", default="results/fdc")
    fdc.set_defaults(fn=cmd_fdc)

    ea = sub.add_parser("ea", help="compare mutation operators on a problem")
    ea.add_argument("--problem", required=True,
                    help="tsp, atsp, or haystack-<measure>")
    ea.add_argument("--operators", required=True,
                    help="comma-separated operator names, e.g. swap,reversal,cycle:7")
    ea.add_argument("--runs", type=int, default=10)
    ea.add_argument("--instances", type=int, default=10)
    ea.add_argument("--generations", type=int, default=1000)
    ea.add_argument("--population", type=int, default=100)
    ea.add_argument("--n", type=int, default=100)
    ea.add_argument("--seed", type=int, default=1)
    ea.add_argument("--threads", type=int, default=_default_threads())
    ea.add_argument("--out", default="results/ea")
    ea.set_defaults(fn=cmd_ea)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "pca" and args.mode == "sampled" and args.samples is None:
        parser.error("--samples is required with --mode sampled")
    try:
        return args.fn(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CAP_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
