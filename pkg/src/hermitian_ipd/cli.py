"""Command line entry point: ``hermitian-ipd {simulate,radius,decode,table}``."""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

import numpy as np

from .code import code_new
from .decoder import decode, decode_with_sweep
from .galois import DTYPE, ConfigurationError
from .key_equations import validate_decoder_params
from .pade_solver import radius_guaranteed, radius_practical
from .simulator import TrialConfig, default_rows, format_rows, reproduce_table, run_trials, stats_row


def _tau(value: str) -> int | None:
    if value == "auto":
        return None
    try:
        return int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'auto', got {value!r}") from None


def _code_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--ell", type=int, required=True)


def _output_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", type=Path, help="output file (default: stdout)")
    p.add_argument("--workers", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hermitian-ipd",
                                     description="Improved power decoding of one-point Hermitian codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="estimate the failure rate of one parameter set")
    _code_args(p)
    p.add_argument("--tau", type=_tau, default=None, help="number of errors, or 'auto' for the practical radius")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sweep", action="store_true", help="retry smaller radii after a failure")
    _output_args(p)

    p = sub.add_parser("radius", help="print the guaranteed and practical decoding radii")
    _code_args(p)

    p = sub.add_parser("decode", help="decode a single received word")
    _code_args(p)
    p.add_argument("--word", type=Path, required=True, help="file of n field elements as integers")
    p.add_argument("--tau", type=_tau, default=None)
    p.add_argument("--sweep", action="store_true")

    p = sub.add_parser("table", help="run the default failure-rate table")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--scale", type=float, default=1.0, help="multiply every row's trial count")
    _output_args(p)
    return parser


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def read_word(path: Path) -> np.ndarray:
    tokens = [t for t in re.split(r"[\s,]+", path.read_text()) if t]
    try:
        return np.array([int(t) for t in tokens], dtype=np.int64)
    except ValueError as exc:
        raise ConfigurationError(f"bad received word in {path}: {exc}") from None


def _simulate(args) -> None:
    cfg = TrialConfig(args.q, args.m, args.s, args.ell, args.tau, args.trials, args.seed, args.sweep)
    stats = run_trials(cfg, args.workers)
    _emit(format_rows([stats_row(cfg, stats)], args.format), args.out)


def _radius(args) -> None:
    code_new(args.q, args.m)
    validate_decoder_params(args.s, args.ell)
    tau_new = radius_guaranteed(args.q, args.m, args.s, args.ell)
    print(f"tau_new = {tau_new} (~{float(tau_new):.4f})")
    print(f"practical radius = {radius_practical(args.q, args.m, args.s, args.ell)}")


def _decode(args) -> None:
    code = code_new(args.q, args.m)
    word = read_word(args.word)
    if word.size != code.n:
        raise ConfigurationError(f"received word has {word.size} symbols, expected n={code.n}")
    if word.min(initial=0) < 0 or word.max(initial=0) >= code.field.order:
        raise ConfigurationError(f"symbols must lie in [0, {code.field.order})")
    fn = decode_with_sweep if args.sweep else decode
    out = fn(code, word.astype(DTYPE), args.s, args.ell, args.tau)
    print(json.dumps(out.to_dict()))


def _table(args) -> None:
    rows = reproduce_table(default_rows(args.seed, args.scale), args.workers)
    _emit(format_rows(rows, args.format), args.out)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = {"simulate": _simulate, "radius": _radius, "decode": _decode, "table": _table}[args.command]
    try:
        handler(args)
    except ConfigurationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
