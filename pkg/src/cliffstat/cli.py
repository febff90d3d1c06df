"""Command-line entry point: decompose | mean | nma | verify.

Exit codes: 0 ok, 1 verification failure, 2 parse error,
3 representation overflow, 4 domain/range error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from cliffstat import signal, stats
from cliffstat.ssgs import decompose, decompose_decimal, format_scaled_root
from cliffstat.verify import VerifyConfig, run_suites

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_OVERFLOW = 3
EXIT_DOMAIN = 4


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _square_terms(roots, k: int = 0) -> str:
    if not roots:
        return "0"
    return " + ".join(f"{format_scaled_root(r, k)}^2" for r in roots)


def run_decompose(args) -> int:
    text = args.value
    try:
        if args.decimal:
            d = decompose_decimal(text)
            print(f"{text.strip()} = {_square_terms(d.roots, d.scale_k)}")
        else:
            x = int(text)
            if x < 0:
                raise ValueError("value must be nonnegative")
            print(f"{x} = {_square_terms(decompose(x).roots)}")
    except ValueError as exc:
        _err(str(exc))
        return EXIT_PARSE
    return EXIT_OK


def _parse_nonnegative_ints(tokens) -> list[int]:
    out = []
    for tok in tokens:
        v = int(tok)
        if v < 0:
            raise ValueError(f"negative value {v}")
        out.append(v)
    return out


def run_mean(args) -> int:
    try:
        if args.input:
            series = signal.ingest_csv(Path(args.input).read_bytes())
            tokens = [str(v) for v in series.samples]
        else:
            tokens = args.values
        values = _parse_nonnegative_ints(tokens)
    except signal.SeriesFormatError as exc:
        _err(str(exc))
        # no line number means the file held no records at all
        return EXIT_DOMAIN if exc.line is None else EXIT_PARSE
    except (ValueError, OSError) as exc:
        _err(str(exc))
        return EXIT_PARSE
    if not values:
        _err("empty data set")
        return EXIT_DOMAIN
    try:
        s = stats.summarize(values)
    except stats.RepresentationOverflow as exc:
        _err(str(exc))
        return EXIT_OVERFLOW
    print(f"am: {float(s.am):.6f}")
    print(f"new_mean: {float(s.new_mean):.6f}")
    print(f"lambda: {float(s.lam):.6f}")
    print(f"sd: {s.sd:.6f}")
    print(f"new_sd: {s.new_sd:.6f}")
    return EXIT_OK


def run_nma(args) -> int:
    try:
        series = signal.ingest_csv(Path(args.input).read_bytes())
    except (ValueError, OSError) as exc:
        _err(str(exc))
        return EXIT_PARSE
    if signal.is_nonnegative_integer_series(series):
        values = [int(v) for v in series.samples]
    else:
        values, transform = signal.scale_to_positive_integers(series)
        print(
            f"scaled: decimal_shift={transform.decimal_shift} offset={transform.offset}"
        )
    if not 1 <= args.window <= len(values):
        _err(f"window length {args.window} outside 1..{len(values)}")
        return EXIT_DOMAIN
    try:
        reports = signal.moving_windows(values, args.window)
    except stats.RepresentationOverflow as exc:
        _err(str(exc))
        return EXIT_OVERFLOW
    with open(args.output, "wb") as sink:
        signal.emit_csv(reports, sink)
    print(f"windows: {len(reports)}")
    return EXIT_OK


def run_verify(args) -> int:
    if args.cases < 1:
        _err("--cases must be >= 1")
        return EXIT_DOMAIN
    cfg = VerifyConfig(seed=args.seed, cases=args.cases)
    print(f"seed: {cfg.seed}")
    print(f"cases: {cfg.cases}")
    results = run_suites(cfg)
    for r in results:
        print(r.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliffstat",
        description="SSGS decomposition, Cl(0,3) New Mean statistics and NMA signals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="greedy sum-of-squares decomposition")
    p.add_argument("--decimal", action="store_true", help="treat value as a finite decimal")
    p.add_argument("value")
    p.set_defaults(func=run_decompose)

    p = sub.add_parser("mean", help="AM, New Mean, lambda, SD and New SD of a set")
    p.add_argument("values", nargs="*")
    p.add_argument("--input", help="CSV file with one value per line")
    p.set_defaults(func=run_mean)

    p = sub.add_parser("nma", help="moving average vs New Moving Average")
    p.add_argument("--input", required=True)
    p.add_argument("--window", type=int, required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(func=run_nma)

    p = sub.add_parser("verify", help="run the seeded property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=1000)
    p.set_defaults(func=run_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "values", None) and getattr(args, "input", None):
        _err("give values inline or --input, not both")
        return EXIT_PARSE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
