"""Command line entry point: ``dmsteer sweep | preset | check``."""

from __future__ import annotations

import argparse
import contextlib
import json
import logging
import sys
from pathlib import Path

from .errors import BadSubset, ConfigError, UnknownPreset
from .netstate import NodePair
from .sweep import (
    SweepConfig,
    discrepancies,
    dx_grid,
    figure_preset,
    iter_sweep,
    preset_names,
    write_discrepancies,
    write_records,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG = 2
EXIT_IO = 3

log = logging.getLogger("dmsteer")


def _parse_range(text: str, what: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError(f"{what} must look like MIN:MAX:STEPS, got {text!r}")
    try:
        lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise ConfigError(f"cannot parse {what} {text!r}") from exc
    return lo, hi, steps


def _parse_floats(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError as exc:
        raise ConfigError(f"cannot parse dx list {text!r}") from exc


def _config_from_args(args) -> SweepConfig:
    try:
        pairs = tuple(NodePair.parse(p) for p in args.pair)
    except BadSubset as exc:
        raise ConfigError(str(exc)) from exc
    if args.dx is not None and args.dx_range is not None:
        raise ConfigError("give either --dx or --dx-range, not both")
    if args.dx is not None:
        dxs = _parse_floats(args.dx)
    elif args.dx_range is not None:
        dxs = dx_grid(*_parse_range(args.dx_range, "--dx-range"))
    else:
        raise ConfigError("one of --dx or --dx-range is required")
    return SweepConfig(
        pairs=pairs,
        dx_values=dxs,
        t_range=_parse_range(args.t_range, "--t-range"),
        output_format=args.format,
        output_path=args.out,
        include_discrepancy=args.discrepancy,
    )


@contextlib.contextmanager
def _open_out(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _sidecar(path: str, suffix: str) -> Path:
    p = Path(path)
    return p.with_name(p.name + suffix)


def emit(config: SweepConfig) -> int:
    """Write records (plus optional discrepancy reports and metadata) for ``config``."""
    fmt = config.output_format
    with _open_out(config.output_path) as out:
        n = write_records(iter_sweep(config), out, fmt)
        if config.include_discrepancy and config.output_path in (None, "-"):
            out.write("\n")
            write_discrepancies(discrepancies(config), out, fmt)
    if config.output_path not in (None, "-"):
        if config.include_discrepancy:
            with open(_sidecar(config.output_path, f".discrepancy.{fmt}"), "w", encoding="utf-8", newline="") as fh:
                write_discrepancies(discrepancies(config), fh, fmt)
        with open(_sidecar(config.output_path, ".meta.json"), "w", encoding="utf-8") as fh:
            json.dump(config.metadata(), fh, indent=2)
    log.info("wrote %d records", n)
    return n


def _cmd_sweep(args) -> int:
    emit(_config_from_args(args))
    return EXIT_OK


def _cmd_preset(args) -> int:
    cfg = figure_preset(
        args.name,
        output_format=args.format,
        output_path=args.out,
        include_discrepancy=args.discrepancy,
    )
    emit(cfg)
    return EXIT_OK


def _cmd_check(args) -> int:
    from .checks import run_checks

    results = run_checks()
    for r in results:
        print(r.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dmsteer", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    sw = sub.add_parser("sweep", help="run a (dx, t) grid sweep")
    sw.add_argument("--pair", action="append", required=True, help="node pair such as 2,3 (repeatable)")
    sw.add_argument("--dx", help="comma separated coupling strengths")
    sw.add_argument("--dx-range", help="MIN:MAX:STEPS")
    sw.add_argument("--t-range", required=True, help="MIN:MAX:STEPS, endpoints included")
    sw.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    sw.add_argument("--out", help="output file (default stdout)")
    sw.add_argument("--discrepancy", action="store_true", help="also emit closed-form discrepancy reports")
    sw.set_defaults(func=_cmd_sweep)

    pr = sub.add_parser("preset", help="run a figure preset")
    pr.add_argument("name", help=" | ".join(preset_names()))
    pr.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    pr.add_argument("--out")
    pr.add_argument("--discrepancy", action="store_true")
    pr.set_defaults(func=_cmd_preset)

    ck = sub.add_parser("check", help="run the built-in invariant suite")
    ck.set_defaults(func=_cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (ConfigError, UnknownPreset) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
