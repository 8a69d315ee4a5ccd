"""Command-line entry point: ``ecwalk <subcommand> ...``.

Exit status is 0 on success, 1 for domain errors (one line on stderr naming
the error) and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import bench, dlp
from .curve import parse_point
from .errors import FormatError, WorkbenchError
from .keys import KeyPair, keygen
from .params import DomainParams, curve_search, validate_params

METHOD_ALIASES = {"linear": "linear_walk", "linear_walk": "linear_walk", "bsgs": "bsgs"}


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc.msg})") from exc


def _load_params_list(path: str) -> list[DomainParams]:
    data = _read_json(path)
    entries = data if isinstance(data, list) else [data]
    return [DomainParams.from_dict(entry) for entry in entries]


def _load_params(path: str) -> DomainParams:
    found = _load_params_list(path)
    if len(found) != 1:
        raise FormatError(f"{path}: expected one parameter set, found {len(found)}")
    return found[0]


def _write(path: str, text: str) -> None:
    Path(path).write_text(text if text.endswith("\n") else text + "\n")


def cmd_curve_search(args) -> int:
    found = curve_search(args.p_min, args.p_max, args.prime_order, workers=args.workers)
    _write(args.out, json.dumps([d.to_dict() for d in found], indent=2))
    print(f"{len(found)} curve(s) written to {args.out}")
    return 0


def cmd_params_validate(args) -> int:
    for params in _load_params_list(args.params):
        validate_params(params)
    print("ok")
    return 0


def cmd_keygen(args) -> int:
    pair = keygen(_load_params(args.params), args.seed)
    _write(args.out, pair.to_json())
    if args.public_out:
        _write(args.public_out, pair.to_json(public_only=True))
    return 0


def cmd_attack(args) -> int:
    params = _load_params(args.params)
    Q = parse_point(params.curve, args.public)
    result = dlp.solve(params, Q, METHOD_ALIASES[args.method], cap=args.cap)
    print(result.to_json())
    return 0


def cmd_bench(args) -> int:
    config = bench.BenchConfig.from_dict(_read_json(args.config))
    records = bench.run_suite(config)
    report = bench.fit_scaling(records)
    _write(args.out_csv, bench.emit_report(records, report, "csv"))
    _write(args.out_report, bench.emit_report(records, report, "structured"))
    print(f"{len(records)} record(s), {report.failed_trials} failed")
    return 0


def cmd_report(args) -> int:
    records = bench.parse_csv(Path(args.csv).read_text())
    report = bench.fit_scaling(records)
    text = json.dumps(report.to_dict(), indent=2)
    if args.out:
        _write(args.out, text)
    else:
        print(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ecwalk", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("curve-search", help="find curves over each prime in a range")
    p.add_argument("--p-min", type=int, required=True)
    p.add_argument("--p-max", type=int, required=True)
    p.add_argument("--prime-order", action="store_true", help="require a prime group order")
    p.add_argument("--out", required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_curve_search)

    p = sub.add_parser("params-validate", help="check a domain-parameter file")
    p.add_argument("--params", required=True)
    p.set_defaults(func=cmd_params_validate)

    p = sub.add_parser("keygen", help="derive a seeded key pair (not for real use)")
    p.add_argument("--params", required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--public-out", help="also write the public-only key file")
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("attack", help="recover d from a public point")
    p.add_argument("--params", required=True)
    p.add_argument("--public", required=True, metavar="Q", help="'x,y' or 'infinity'")
    p.add_argument("--method", choices=sorted(METHOD_ALIASES), default="linear")
    p.add_argument("--cap", type=int, default=dlp.DEFAULT_WALK_CAP)
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser("bench", help="run a benchmark suite")
    p.add_argument("--config", required=True)
    p.add_argument("--out-csv", required=True)
    p.add_argument("--out-report", required=True)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("report", help="scaling report from an existing CSV")
    p.add_argument("--csv", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except WorkbenchError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc.strerror}: {exc.filename}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
