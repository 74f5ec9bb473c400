"""Command-line entry point: ``k3walls <command> [--config FILE] [options]``.

Exit codes: 0 success, 2 configuration or usage error, 3 mathematical error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .errors import ConfigError, K3WallsError
from .report import COMMANDS, FORMATS, AnalysisConfig, emit, load_config, run

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_MATH = 3

# command-line flag -> configuration key
_FLAG_KEYS = {
    "d": "d",
    "label": "label",
    "vector": "vector",
    "b": "b",
    "T": "T",
    "n": "n",
    "rank_bound": "rank_bound",
    "region": "region",
    "T_range": "T_range",
    "constraints": "constraints",
    "out": "out",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="k3walls",
        description="Exact wall-and-chamber computations for Bridgeland stability on K3 surfaces of Picard rank one.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--config", help="key=value configuration file; flags override its entries")
    parser.add_argument("--d", help="H^2 = 2d")
    parser.add_argument("--label", help="free-form surface label echoed in the report")
    parser.add_argument("--vector", help="Mukai vector r,c,s")
    parser.add_argument("--b", help="b coordinate, as p/q")
    parser.add_argument("--T", help="T = t^2, as p/q")
    parser.add_argument("--n", help="number of points for Hilbert-scheme commands")
    parser.add_argument("--rank-bound", dest="rank_bound", help="largest |rank| of destabilizers searched")
    parser.add_argument("--region", help="b_min,b_max,T_min,T_max")
    parser.add_argument("--T-range", dest="T_range", help="T_min,T_max for path")
    parser.add_argument("--constraints", help="'r,c,s:a; ...' meaning (x, u) = a")
    parser.add_argument(
        "--format", dest="formats", action="append", choices=FORMATS,
        help="output format; repeat for several (default: text)",
    )
    parser.add_argument("--out", help="output path; with several formats, the format suffix is appended")
    return parser


def _gather(args: argparse.Namespace) -> dict[str, str]:
    values: dict[str, str] = {}
    if args.config:
        values.update(load_config(args.config))
    file_command = values.get("command")
    if file_command is not None and file_command != args.command:
        raise ConfigError(f"config file is for command {file_command!r}, not {args.command!r}")
    values["command"] = args.command
    for attr, key in _FLAG_KEYS.items():
        val = getattr(args, attr)
        if val is not None:
            values[key] = val
    if args.formats:
        values["formats"] = ",".join(args.formats)
    return values


def _write(cfg: AnalysisConfig, outputs: list[tuple[str, bytes]]) -> None:
    if cfg.out is None:
        for _, data in outputs:
            sys.stdout.write(data.decode("utf-8"))
        return
    target = Path(cfg.out)
    for fmt, data in outputs:
        path = target if len(outputs) == 1 else target.with_name(f"{target.name}.{fmt}")
        try:
            path.write_bytes(data)
        except OSError as exc:
            raise ConfigError(f"cannot write {path}: {exc}") from None


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_CONFIG
    try:
        cfg = AnalysisConfig.from_mapping(_gather(args))
        report = run(cfg)
        outputs = [(fmt, emit(report, fmt)) for fmt in cfg.formats]
        _write(cfg, outputs)
    except ConfigError as exc:
        print(f"k3walls: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except K3WallsError as exc:
        print(f"k3walls: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MATH
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
