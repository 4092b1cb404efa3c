"""Command line front end: ``tgp run`` and ``tgp validate``.

Results go to stdout, diagnostics (progress, timings, errors) to stderr.
``tgp run`` accepts an optional key=value config file whose keys are named
exactly like the long flags; explicit flags win over the file.
"""

from __future__ import annotations

import argparse
import sys

from tgp.core import TgpParams
from tgp.experiment import FORMATS, emit_report, run_experiment
from tgp.proben import TABLE1_EXPECTED, parse_proben_file, validate_against_table1

CONFIG_KEYS = {
    "data": str,
    "pop": int,
    "gens": int,
    "p-insert": float,
    "runs": int,
    "seed": int,
    "format": str,
    "jobs": int,
    "task": str,
    "trace": bool,
}


def _read_config(path: str) -> dict:
    """Parse a line-oriented key=value file into argparse defaults."""
    overrides = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, eq, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if not eq or key not in CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: expected <flag>=<value> with a known flag, got {line!r}")
            kind = CONFIG_KEYS[key]
            if kind is bool:
                if value.lower() not in ("true", "false", "1", "0"):
                    raise ValueError(f"{path}:{lineno}: {key} must be true/false")
                parsed = value.lower() in ("true", "1")
            else:
                parsed = kind(value)
            overrides[key.replace("-", "_")] = parsed
    return overrides


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="tgp",
        description="Evolve output-vector populations on partitioned benchmark files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="execute a multi-run experiment")
    run_p.add_argument("--config", default=None, help="key=value file; flags override it")
    run_p.add_argument("--data", default=None, help="dataset file path")
    run_p.add_argument("--pop", type=int, default=500, help="population size")
    run_p.add_argument("--gens", type=int, default=1000, help="number of generations")
    run_p.add_argument("--p-insert", type=float, default=0.2, help="insertion probability")
    run_p.add_argument("--runs", type=int, default=30, help="independent runs")
    run_p.add_argument("--seed", type=int, default=0, help="base seed; run i uses seed+i")
    run_p.add_argument("--format", choices=FORMATS, default="table", help="output format")
    run_p.add_argument("--trace", action="store_true", default=None, help="record genealogy and print champion formulas")
    run_p.add_argument("--jobs", type=int, default=1, help="worker processes for runs")
    run_p.add_argument("--task", choices=("classify", "regress"), default="classify")

    val_p = sub.add_parser("validate", help="check a file against the reference dimensions")
    val_p.add_argument("--data", required=True, help="dataset file path")
    val_p.add_argument("--problem", required=True, choices=sorted(TABLE1_EXPECTED))
    return parser, run_p


def _cmd_run(args) -> int:
    if args.data is None:
        print("error: --data is required (flag or config file)", file=sys.stderr)
        return 2
    params = TgpParams(
        population_size=args.pop,
        generations=args.gens,
        p_insert=args.p_insert,
        seed=args.seed,
        runs=args.runs,
    )
    report = run_experiment(
        args.data,
        params,
        trace=bool(args.trace),
        jobs=args.jobs,
        task=args.task,
    )
    for seed, elapsed in zip((r.seed for r in report.records), report.wall_clock):
        print(f"run seed={seed}: {elapsed:.2f}s", file=sys.stderr)
    sys.stdout.write(emit_report(report, args.format))
    if args.trace and args.format == "table":
        for record in report.records:
            print(f"champion[seed={record.seed}] = {record.champion_expression}")
    return 0


def _cmd_validate(args) -> int:
    dataset = parse_proben_file(args.data)
    report = validate_against_table1(dataset, args.problem)
    print(report.summary())
    return 0 if report.passed else 1


def main(argv=None) -> int:
    parser, run_parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "run" and args.config:
        try:
            run_parser.set_defaults(**_read_config(args.config))
        except (OSError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        # reparse so explicit flags keep precedence over config values
        args = parser.parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        return _cmd_validate(args)
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
