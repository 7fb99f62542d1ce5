"""Command-line front end: ``foldgray {generate,enumerate-brute,classify,verify,bench}``.

Exit codes: 0 success, 1 verification failure, 2 bad usage or bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from typing import Iterable, Iterator, TextIO

from .bench import Algorithm, run_bench, write_csv
from .common import GenConfig, Kind
from .iterative import iter_iterative
from .oracle import (OracleBoundError, brute_force_enumerate, is_open_meander, is_semi_meander,
                     is_stamp_folding, oracle_max_n, predicate)
from .pile import Pile, PileError
from .recursive import iter_recursive
from .verify import DEFAULT_EXHAUSTIVE_MAX_N, verify_listing

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

STREAMS = {
    Algorithm.RECURSIVE: iter_recursive,
    Algorithm.ITERATIVE: iter_iterative,
}


class UsageError(Exception):
    pass


def format_pile(p: Pile, fmt: str) -> str:
    return p.compact() if fmt == "compact" else str(p)


def write_listing(piles: Iterable[Pile], out: TextIO, fmt: str, header: dict) -> int:
    count = 0
    if fmt == "json":
        out.write(json.dumps(header)[:-1] + ', "listing": [')
        for p in piles:
            out.write(("" if count == 0 else ", ") + json.dumps(list(p.seq)))
            count += 1
        out.write("]}\n")
        return count
    for p in piles:
        out.write(format_pile(p, fmt) + "\n")
        count += 1
    return count


def read_listing(text: str) -> tuple[list[Pile], dict]:
    """Parse a plain/compact listing or the JSON listing object."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
            piles = [Pile(tuple(seq)) for seq in doc["listing"]]
        except (ValueError, KeyError, TypeError) as exc:
            raise PileError(f"ill-formed JSON listing: {exc}") from exc
        return piles, {k: v for k, v in doc.items() if k != "listing"}
    piles = [Pile.parse(line) for line in text.splitlines()
             if line.strip() and not line.lstrip().startswith("#")]
    return piles, {}


@contextmanager
def _output(path: str | None) -> Iterator[TextIO]:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _kind(value: str, allow_open: bool) -> Kind:
    kind = Kind.coerce(value)
    if kind is Kind.OPEN and not allow_open:
        raise UsageError("no Gray code generator exists for open meanders; "
                         "use filter/enumerate-brute")
    return kind


def _check_format(fmt: str, n: int) -> None:
    if fmt == "compact" and n > 9:
        raise UsageError("compact format is only available for n <= 9")


def cmd_generate(args: argparse.Namespace) -> int:
    kind = _kind(args.kind, allow_open=False)
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    _check_format(args.format, args.n)
    algorithm = Algorithm(args.algo)
    cfg = GenConfig(args.n, kind)
    stream = STREAMS[algorithm](cfg)
    header = {"n": cfg.n, "kind": kind.value, "algorithm": algorithm.value}
    if args.verify:
        piles = list(stream)
        report = verify_listing(piles, kind, exhaustive_max_n=args.exhaustive_max_n)
        stream = iter(piles)
    with _output(args.output) as out:
        if args.count_only:
            out.write(f"{sum(1 for _ in stream)}\n")
        else:
            write_listing(stream, out, args.format, header)
    if args.verify:
        print(report.to_json(), file=sys.stderr)
        return EXIT_OK if report.ok else EXIT_FAIL
    return EXIT_OK


def cmd_enumerate_brute(args: argparse.Namespace) -> int:
    kind = _kind(args.kind, allow_open=True)
    _check_format(args.format, args.n)
    try:
        piles = brute_force_enumerate(args.n, kind, max_n=oracle_max_n())
    except OracleBoundError as exc:
        raise UsageError(str(exc)) from exc
    with _output(args.output) as out:
        header = {"n": args.n, "kind": kind.value, "algorithm": "brute-force", "count": len(piles)}
        write_listing(piles, out, args.format, header)
        if args.format != "json":
            out.write(f"# count: {len(piles)}\n")
    return EXIT_OK


def cmd_filter(args: argparse.Namespace) -> int:
    """Keep the piles of a listing that are of the requested kind."""
    kind = _kind(args.kind, allow_open=True)
    piles, _ = read_listing(_read_input(args.path))
    test = predicate(kind)
    kept = [p for p in piles if test(p)]
    if kept:
        _check_format(args.format, kept[0].n)
    with _output(args.output) as out:
        write_listing(kept, out, args.format,
                      {"n": kept[0].n if kept else 0, "kind": kind.value, "algorithm": "filter"})
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    try:
        pile = Pile.parse(" ".join(args.pile))
    except PileError as exc:
        raise UsageError(str(exc)) from exc
    flags = {
        "stamp": is_stamp_folding(pile),
        "semi": is_semi_meander(pile),
        "open": is_open_meander(pile),
    }
    print(" ".join(f"{name}={str(value).lower()}" for name, value in flags.items()))
    return EXIT_OK


def _read_input(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        piles, meta = read_listing(_read_input(args.path))
    except PileError as exc:
        raise UsageError(str(exc)) from exc
    if not piles:
        raise UsageError("listing is empty")
    kind_name = args.kind or meta.get("kind")
    if kind_name is None:
        raise UsageError("--kind is required for plain listings")
    kind = _kind(kind_name, allow_open=False)
    try:
        report = verify_listing(piles, kind, exhaustive_max_n=args.exhaustive_max_n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    with _output(args.output) as out:
        out.write(report.to_json() + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_bench(args: argparse.Namespace) -> int:
    kind = _kind(args.kind, allow_open=False)
    if not 1 <= args.n_min <= args.n_max:
        raise UsageError("need 1 <= --n-min <= --n-max")
    algos = list(Algorithm) if args.algo == "both" else [Algorithm(args.algo)]
    records = []
    for algo in algos:
        records += run_bench(range(args.n_min, args.n_max + 1), kind, algo, args.repetitions)
    with _output(args.output) as out:
        write_csv(records, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="foldgray",
        description="Rotation Gray codes for stamp foldings and semi-meanders.")
    sub = parser.add_subparsers(dest="command", required=True)
    kinds = [k.value for k in Kind]
    formats = ["plain", "json", "compact"]

    gen = sub.add_parser("generate", help="stream a Gray code listing")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--kind", choices=kinds, default="stamp")
    gen.add_argument("--algo", choices=[a.value for a in Algorithm], default="iterative")
    gen.add_argument("--format", choices=formats, default="plain")
    gen.add_argument("--count-only", action="store_true")
    gen.add_argument("--verify", action="store_true",
                     help="certify the listing; report goes to stderr")
    gen.add_argument("--exhaustive-max-n", type=int, default=DEFAULT_EXHAUSTIVE_MAX_N)
    gen.add_argument("--output", "-o")
    gen.set_defaults(func=cmd_generate)

    brute = sub.add_parser("enumerate-brute", help="filter all permutations with the oracle")
    brute.add_argument("--n", type=int, required=True)
    brute.add_argument("--kind", choices=kinds, default="stamp")
    brute.add_argument("--format", choices=formats, default="plain")
    brute.add_argument("--output", "-o")
    brute.set_defaults(func=cmd_enumerate_brute)

    filt = sub.add_parser("filter", help="keep listing entries of a kind")
    filt.add_argument("--kind", choices=kinds, required=True)
    filt.add_argument("--format", choices=formats, default="plain")
    filt.add_argument("--output", "-o")
    filt.add_argument("path", nargs="?", default="-")
    filt.set_defaults(func=cmd_filter)

    cls = sub.add_parser("classify", help="report stamp/semi/open membership of a pile")
    cls.add_argument("pile", nargs="+")
    cls.set_defaults(func=cmd_classify)

    ver = sub.add_parser("verify", help="certify a listing file, JSON report on stdout")
    ver.add_argument("--kind", choices=kinds)
    ver.add_argument("--exhaustive-max-n", type=int, default=DEFAULT_EXHAUSTIVE_MAX_N)
    ver.add_argument("--output", "-o")
    ver.add_argument("path", nargs="?", default="-")
    ver.set_defaults(func=cmd_verify)

    ben = sub.add_parser("bench", help="CSV of counts, timings and operation counters")
    ben.add_argument("--n-min", type=int, required=True)
    ben.add_argument("--n-max", type=int, required=True)
    ben.add_argument("--kind", choices=kinds, default="stamp")
    ben.add_argument("--algo", choices=[a.value for a in Algorithm] + ["both"], default="both")
    ben.add_argument("--repetitions", type=int, default=3)
    ben.add_argument("--output", "-o")
    ben.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"foldgray: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
