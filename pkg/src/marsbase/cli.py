"""Command-line entry point: ``marsbase <verb> [options]``.

Exit codes: 0 success, 2 configuration error, 3 model-domain error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import FORMATS, default_config_path, load_config
from .errors import ConfigError, DomainError
from .report import (
    emit_report,
    evaluate_report,
    grid_report,
    reconcile_report,
    size_plant_report,
    sweep_report,
)
from .scenarios import SCENARIOS
from .sweep import run_sweep

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DOMAIN = 3
EXIT_IO = 4


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON run configuration (default: $MARSBASE_CONFIG)")
    common.add_argument("--set", dest="sets", action="append", default=[], metavar="PATH=VALUE",
                        help="override one field by dotted path; repeatable")
    common.add_argument("--format", choices=FORMATS, default=None, help="output format")
    common.add_argument("--out", help="write output to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="marsbase", description="Mars mining-base energy model")
    sub = parser.add_subparsers(dest="command", required=True)
    ev = sub.add_parser("evaluate", parents=[common], help="evaluate one scenario")
    ev.add_argument("--scenario", choices=sorted(SCENARIOS))
    ev.add_argument("--registry", action="store_true", help="use published values for operations")
    sub.add_parser("grid", parents=[common], help="2x2 construction comparison")
    sw = sub.add_parser("sweep", parents=[common], help="one-at-a-time sensitivity sweep")
    sw.add_argument("--parameter", help="dotted path of the numeric field to vary")
    sw.add_argument("--start", type=float, help="first value of an evenly spaced range")
    sw.add_argument("--stop", type=float, help="last value of the range")
    sw.add_argument("--steps", type=int, help="number of samples, at least 2")
    sw.add_argument("--values", type=float, nargs="+", help="explicit values instead of a range")
    sw.add_argument("--scenario", choices=sorted(SCENARIOS))
    sub.add_parser("reconcile", parents=[common], help="audit against published values")
    sp = sub.add_parser("size-plant", parents=[common], help="solar-thermal and PV plant areas")
    sp.add_argument("--energy", type=float, help="energy per sol in MJ (default: scenario total)")
    sp.add_argument("--scenario", choices=sorted(SCENARIOS))
    return parser


def _sweep_sets(args) -> list[str]:
    sets = []
    for name in ("parameter", "start", "stop", "steps", "scenario"):
        value = getattr(args, name, None)
        if value is not None:
            sets.append(f"sweep.{name}={value if name in ('start', 'stop', 'steps') else _quote(value)}")
    if getattr(args, "values", None):
        sets.append("sweep.values=[" + ",".join(repr(v) for v in args.values) + "]")
    return sets


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    extra = []
    if getattr(args, "scenario", None):
        extra.append(f"scenarios=[{_quote(args.scenario)}]")
    if getattr(args, "registry", False):
        extra.append("registry=true")
    if args.command == "sweep":
        extra.extend(_sweep_sets(args))
    try:
        cfg = load_config(args.config or default_config_path(), list(args.sets) + extra)
        if args.command == "evaluate":
            report = evaluate_report(cfg)
        elif args.command == "grid":
            report = grid_report(cfg)
        elif args.command == "sweep":
            report = sweep_report(run_sweep(cfg))
        elif args.command == "reconcile":
            report = reconcile_report(cfg)
        else:
            report = size_plant_report(cfg, args.energy)
        data = emit_report(report, args.format or cfg.format)
        if args.out:
            Path(args.out).write_bytes(data)
        else:
            sys.stdout.buffer.write(data)
            sys.stdout.flush()
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DomainError as exc:
        print(f"model error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def main() -> None:
    sys.exit(run())
