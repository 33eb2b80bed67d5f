"""Command-line interface: `multiwise sample|coverage|experiment|convert|inspect`."""

from __future__ import annotations

__all__ = ["main", "build_parser"]

import argparse
import logging
import sys
import time
from pathlib import Path
from typing import Sequence

import yaml

from multiwise import __version__
from multiwise.core.errors import (
    CapExceededError,
    ExperimentRunError,
    ModelParseError,
    SampleFormatError,
    UnknownFeatureError,
    UnsatisfiableConfigurationError,
    VoidModelError,
)
from multiwise.experiments.config import ExperimentConfig
from multiwise.experiments.runner import ExperimentRunner
from multiwise.experiments.setups import EXPERIMENT_SETUPS
from multiwise.interactions.coverage import coverage_report, write_coverage_csv
from multiwise.io._common import MODEL_SUFFIXES, load_feature_model
from multiwise.io.dimacs import DimacsOutputConverter
from multiwise.io.sample_file import load_sample, save_sample, write_sample
from multiwise.io.uvl import load_feature_tree, save_feature_tree
from multiwise.sampling.group_spec import GroupSpec
from multiwise.sampling.multiwise import MultiWiseSampler
from multiwise.sampling.options import SamplingOptions
from multiwise.sat.analysis import core_dead_features, enumerate_all_configurations
from multiwise.sat.engine import create_engine

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_UNSAT = 3
EXIT_INCONSISTENT = 4


class CliError(Exception):
    """Error reported to the user with a given exit code."""

    def __init__(self, message: str, exit_code: int = EXIT_USAGE):
        super().__init__(message)
        self.exit_code = exit_code


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load_groups(path: str) -> GroupSpec:
    try:
        return GroupSpec.load(path)
    except (ValueError, yaml.YAMLError) as err:
        msg = f"Invalid group file '{path}': {err}"
        raise CliError(msg, EXIT_PARSE) from err


def _sampling_options(args: argparse.Namespace) -> SamplingOptions:
    return SamplingOptions(
        order=args.order,
        defer_completion=args.defer_completion,
        seed=args.seed,
        shuffle_tuples=args.shuffle_tuples,
        completion_policy=args.policy,
        engine=args.engine,
    )


def cmd_sample(args: argparse.Namespace) -> int:
    model = load_feature_model(args.model, conversion=args.conversion)
    spec = _load_groups(args.groups) if args.groups is not None else GroupSpec.uniform(args.t)
    sampler = MultiWiseSampler(model, _sampling_options(args))

    start = time.perf_counter()
    sample = sampler.run(spec)
    time_ms = (time.perf_counter() - start) * 1000

    summary = f"size={len(sample)} time_ms={time_ms:.3f}"
    if args.out is not None:
        save_sample(sample, args.out, seed=args.seed)
        print(summary)
    else:
        sys.stdout.write(write_sample(sample, seed=args.seed))
        print(summary, file=sys.stderr)
    if args.stats is not None:
        with Path(args.stats).open("w", encoding="utf-8") as fp:
            yaml.safe_dump(sample.stats.to_dict(), fp, sort_keys=False)
    return EXIT_OK


def cmd_coverage(args: argparse.Namespace) -> int:
    model = load_feature_model(args.model, conversion=args.conversion)
    sample = load_sample(args.sample, model)

    if args.scope == "all":
        if args.t is None:
            msg = "--t is required when measuring coverage over all features"
            raise CliError(msg)
        scopes = [("all", model.features, args.t)]
    else:
        scopes = _load_groups(args.scope).scopes(model)
        if args.group is not None:
            scopes = [scope for scope in scopes if scope[0] == args.group]
            if not scopes:
                msg = f"Unknown group '{args.group}'"
                raise CliError(msg)
        if args.t is not None:
            scopes = [(label, features, args.t) for label, features, _ in scopes]

    reports = coverage_report(model, sample, scopes)
    for report in reports:
        prefix = f"group={report.scope} " if len(reports) > 1 else ""
        print(
            f"{prefix}valid={report.valid_tuples} covered={report.covered_tuples} ratio={float(report.ratio):.6f}"
        )
    if args.csv is not None:
        write_coverage_csv(reports, args.csv)
    return EXIT_OK


def cmd_experiment(args: argparse.Namespace) -> int:
    model = load_feature_model(args.model, conversion=args.conversion)
    config = ExperimentConfig(
        output_dir=args.out_dir,
        setups=args.setups,
        repetitions=args.reps,
        root_seed=args.seed,
        nb_workers=args.workers,
        engine=args.engine,
        record_time=not args.no_timing,
    )
    records = ExperimentRunner(config).run(model)
    print(f"runs={len(records)} results={Path(args.out_dir) / 'results.csv'}")
    return EXIT_OK


def cmd_convert(args: argparse.Namespace) -> int:
    source, target = Path(args.input), Path(args.output)
    source_kind = MODEL_SUFFIXES.get(source.suffix.lower())
    target_kind = MODEL_SUFFIXES.get(target.suffix.lower())
    if source_kind is None or target_kind is None:
        msg = f"Conversion needs .uvl or .dimacs files, got '{source.name}' and '{target.name}'"
        raise CliError(msg)

    if target_kind == "uvl":
        if source_kind != "uvl":
            msg = "Converting DIMACS to UVL is not supported, a CNF does not determine a feature tree"
            raise CliError(msg)
        save_feature_tree(load_feature_tree(source), target)
    else:
        model = load_feature_model(source, conversion=args.conversion, check_void=False)
        DimacsOutputConverter().save(model, target)
    return EXIT_OK


def cmd_inspect(args: argparse.Namespace) -> int:
    model = load_feature_model(args.model, conversion=args.conversion)
    engine = create_engine(model, args.engine)
    core, dead = core_dead_features(model, engine)
    print(f"model={model.name}")
    print(f"features={model.nb_features}")
    print(f"clauses={len(model.clauses)}")
    print(f"aux_vars={model.aux_var_count}")
    print(f"core={','.join(core)}")
    print(f"dead={','.join(dead)}")
    try:
        nb_configurations = len(enumerate_all_configurations(model, args.cap, engine))
    except CapExceededError:
        print(f"configurations>{args.cap}")
    else:
        print(f"configurations={nb_configurations}")
    return EXIT_OK


def _add_model_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("model", help="Feature model file (.uvl, .dimacs or .cnf)")
    parser.add_argument(
        "--conversion",
        choices=["distributive", "tseitin"],
        default="distributive",
        help="CNF conversion of UVL cross-tree constraints (default: %(default)s)",
    )


def _add_engine_argument(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--engine",
        choices=["dpll", "pysat"],
        default="dpll",
        help="Satisfiability engine (default: %(default)s)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="multiwise", description="Multi-strength t-wise sampling of feature models")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="Show info (-v) or debug (-vv) messages on stderr"
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    sample = subparsers.add_parser("sample", help="Compute a sample covering feature groups")
    _add_model_arguments(sample)
    strength = sample.add_mutually_exclusive_group(required=True)
    strength.add_argument("--groups", help="Group specification file (JSON or YAML)")
    strength.add_argument("--t", type=int, help="Cover all features at this strength")
    sample.add_argument("--seed", type=int, default=0, help="Root seed (default: %(default)s)")
    sample.add_argument(
        "--order",
        choices=["spec", "ascending-t", "descending-t"],
        default="spec",
        help="Group processing order (default: %(default)s)",
    )
    sample.add_argument(
        "--defer-completion", action="store_true", help="Complete configurations once, after the last group"
    )
    sample.add_argument("--shuffle-tuples", action="store_true", help="Process tuples in a seeded random order")
    sample.add_argument(
        "--policy",
        choices=["prefer-deselect", "prefer-select", "random"],
        default="prefer-deselect",
        help="Value preferred for undecided features (default: %(default)s)",
    )
    _add_engine_argument(sample)
    sample.add_argument("--out", help="Sample file to write, the sample goes to stdout otherwise")
    sample.add_argument("--stats", help="Write per-group sampling statistics to this YAML file")
    sample.set_defaults(func=cmd_sample)

    coverage = subparsers.add_parser("coverage", help="Measure the t-wise coverage of a sample")
    _add_model_arguments(coverage)
    coverage.add_argument("sample", help="Sample file")
    coverage.add_argument("--t", type=int, help="Interaction strength, defaults to each group's own")
    coverage.add_argument(
        "--scope", default="all", help="'all' features (default) or a group specification file"
    )
    coverage.add_argument("--group", help="Only measure this group of the --scope file")
    coverage.add_argument("--csv", help="Also write the coverage report to this CSV file")
    coverage.set_defaults(func=cmd_coverage)

    experiment = subparsers.add_parser("experiment", help="Run experiment setups repeatedly")
    _add_model_arguments(experiment)
    experiment.add_argument(
        "--setups",
        nargs="+",
        choices=list(EXPERIMENT_SETUPS),
        default=list(EXPERIMENT_SETUPS),
        help="Setups to run (default: all)",
    )
    experiment.add_argument("--reps", type=int, default=10, help="Repetitions per setup (default: %(default)s)")
    experiment.add_argument("--seed", type=int, default=0, help="Root seed (default: %(default)s)")
    experiment.add_argument("--out-dir", default="results", help="Output directory (default: %(default)s)")
    experiment.add_argument("--workers", type=int, default=1, help="Worker processes (default: %(default)s)")
    experiment.add_argument(
        "--no-timing",
        action="store_true",
        help="Write time_ms as 0.000. Wall-clock times differ between runs, so results.csv is only byte-identical"
        " across reruns with this flag",
    )
    _add_engine_argument(experiment)
    experiment.set_defaults(func=cmd_experiment)

    convert = subparsers.add_parser("convert", help="Convert between .uvl and .dimacs files")
    convert.add_argument("input", help="Source file")
    convert.add_argument("output", help="Target file, format given by its suffix")
    convert.add_argument(
        "--conversion",
        choices=["distributive", "tseitin"],
        default="distributive",
        help="CNF conversion of UVL cross-tree constraints (default: %(default)s)",
    )
    convert.set_defaults(func=cmd_convert)

    inspect = subparsers.add_parser("inspect", help="Print model statistics, core and dead features")
    _add_model_arguments(inspect)
    inspect.add_argument(
        "--cap", type=int, default=100_000, help="Count configurations up to this number (default: %(default)s)"
    )
    _add_engine_argument(inspect)
    inspect.set_defaults(func=cmd_inspect)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    try:
        return args.func(args)
    except ExperimentRunError as err:
        print(f"error: {err}", file=sys.stderr)
        code = _exit_code(err.__cause__) if err.__cause__ is not None else None
        return code if code is not None else EXIT_USAGE
    except Exception as err:
        code = _exit_code(err)
        if code is None:
            raise
        print(f"error: {err}", file=sys.stderr)
        return code


def _exit_code(err: BaseException) -> int | None:
    if isinstance(err, CliError):
        return err.exit_code
    if isinstance(err, (ModelParseError, SampleFormatError, OSError)):
        return EXIT_PARSE
    if isinstance(err, (VoidModelError, UnsatisfiableConfigurationError)):
        return EXIT_UNSAT
    if isinstance(err, UnknownFeatureError):
        return EXIT_INCONSISTENT
    if isinstance(err, ValueError):
        return EXIT_USAGE
    return None


if __name__ == "__main__":
    sys.exit(main())
