"""Command-line interface.

Usage::

    subsumlab count --n 5 --class unrestricted
    subsumlab census --n 40 --class distinct
    subsumlab forbid --n 4 --a 2 --class unrestricted
    subsumlab scan-forbid --n 10 --class kreduced:2
    subsumlab exponents --n-max 60 --class unrestricted,distinct
    subsumlab verify lemma1 --n 36 --epsilon 0.5 --class unrestricted
    subsumlab verify theorem2

Global options (accepted before or after the subcommand): ``--format csv|json``,
``--no-cache``, ``--cache-dir PATH``, ``--threads N``, ``--cap N``.

Tables go to stdout, diagnostics to stderr. Exit status: 0 ok, 2 usage error,
3 census cap refusal.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import os
import sys
from collections.abc import Callable, Sequence
from typing import Any

from . import __version__
from .census import DEFAULT_CAP, ResourceCapError, census, check_cap, forbid_count, forbid_scan
from .lemma import check_conclusion, default_j_max, exponent_table, theorem2_constants
from .partitions import PartitionClass, count
from .store import ResultCache, cache_key

__all__ = ["main", "run", "COLUMNS", "format_rows", "parse_csv"]

EXIT_OK, EXIT_USAGE, EXIT_CAP = 0, 2, 3

log = logging.getLogger("subsumlab")


def _opt_float(text: str) -> float | None:
    return float(text) if text else None


def _bool(text: str) -> bool:
    return {"true": True, "false": False}[text]


_FORBID = {"n": int, "a": int, "class": str, "count": int}

# column name -> parser for the CSV cell, in output order
COLUMNS: dict[str, dict[str, Callable[[str], Any]]] = {
    "count": {"n": int, "class": str, "count": int},
    "census": {"n": int, "class": str, "partitions": int, "distinct_sets": int},
    "forbid": _FORBID,
    "scan-forbid": _FORBID,
    "exponents": {"n": int, "class": str, "partitions": int, "distinct_sets": int,
                  "exponent": float},
    "lemma1": {"n": int, "epsilon": float, "class": str, "delta": float, "j": int,
               "a_lo": int, "a_hi": int, "max_forbid_ln": _opt_float, "bound_ln": float,
               "holds": _bool},
    "theorem2": {"name": str, "lhs": float, "rhs": float, "holds": _bool},
}


def _cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return repr(v)
    return str(v)


def format_rows(table: str, rows: list[dict[str, Any]], fmt: str) -> str:
    cols = list(COLUMNS[table])
    if fmt == "json":
        return json.dumps([{c: row[c] for c in cols} for row in rows], indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for row in rows:
        writer.writerow([_cell(row[c]) for c in cols])
    return buf.getvalue()


def parse_csv(table: str, text: str) -> list[dict[str, Any]]:
    """Inverse of :func:`format_rows` for CSV output."""
    cols = COLUMNS[table]
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != list(cols):
        raise ValueError(f"unexpected header {reader.fieldnames}")
    return [{k: cols[k](row[k]) for k in cols} for row in reader]


def _class_arg(text: str) -> PartitionClass:
    try:
        return PartitionClass.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _classes_arg(text: str) -> list[PartitionClass]:
    return [_class_arg(t) for t in text.split(",") if t.strip()]


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


class _Parser(argparse.ArgumentParser):
    """Prints the whole command grammar on a usage error."""

    root: argparse.ArgumentParser | None = None

    def error(self, message: str):
        (self.root or self).print_help(sys.stderr)
        self.exit(EXIT_USAGE, f"\n{self.prog}: error: {message}\n")


def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("csv", "json"), default=d("csv"))
    parser.add_argument("--no-cache", action="store_true", default=d(False))
    parser.add_argument("--cache-dir", default=d(None))
    parser.add_argument("--threads", type=_positive_int, default=d(os.cpu_count() or 1))
    parser.add_argument("--cap", type=int, default=d(DEFAULT_CAP))


def build_parser() -> argparse.ArgumentParser:
    root = _Parser(prog="subsumlab", description="Exact counts for sets represented by partitions.")
    _Parser.root = root
    root.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_options(root, suppress=False)
    sub = root.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def leaf(subparsers, name: str, help: str) -> argparse.ArgumentParser:
        p = subparsers.add_parser(name, help=help)
        _global_options(p, suppress=True)
        return p

    p = leaf(sub, "count", "number of partitions of n in a class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="cls", type=_class_arg, required=True)

    p = leaf(sub, "census", "partitions and distinct represented sets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="cls", type=_class_arg, required=True)

    p = leaf(sub, "forbid", "partitions of n that do not represent a")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--class", dest="cls", type=_class_arg, required=True)

    p = leaf(sub, "scan-forbid", "forbid counts for every a in 0..n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="cls", type=_class_arg, required=True)

    p = leaf(sub, "exponents", "ln(distinct sets)/ln(partitions) for n = 2..n-max")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--class", dest="classes", type=_classes_arg, required=True)

    verify = sub.add_parser("verify", help="check the forbidden-subsum bound or exponent constants")
    vsub = verify.add_subparsers(dest="what", required=True, parser_class=_Parser)
    p = leaf(vsub, "lemma1", "induction bound on R(n, a) at one (n, epsilon)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--delta", type=float)
    p.add_argument("--j-max", type=int)
    p.add_argument("--tau", type=int)
    p.add_argument("--class", dest="cls", type=_class_arg, required=True)
    leaf(vsub, "theorem2", "exponent constants against growth constants")
    return root


def _rows_count(args) -> list[dict]:
    return [{"n": args.n, "class": str(args.cls), "count": count(args.n, args.cls)}]


def _rows_census(args) -> list[dict]:
    res = census(args.n, args.cls, cap=args.cap, shards=args.threads, workers=args.threads)
    return [{"n": res.n, "class": str(res.cls), "partitions": res.partition_count,
             "distinct_sets": res.distinct_set_count}]


def _forbid_row(r) -> dict:
    return {"n": r.n, "a": r.a, "class": str(r.cls), "count": r.count}


def _rows_forbid(args) -> list[dict]:
    return [_forbid_row(forbid_count(args.n, args.a, args.cls, cap=args.cap))]


def _rows_scan(args) -> list[dict]:
    return [_forbid_row(r) for r in forbid_scan(args.n, args.cls, cap=args.cap)]


def _rows_exponents(args) -> list[dict]:
    rows = exponent_table(args.n_max, args.classes, cap=args.cap, threads=args.threads)
    return [{"n": r.n, "class": str(r.cls), "partitions": r.partition_count,
             "distinct_sets": r.distinct_set_count, "exponent": r.exponent} for r in rows]


def _rows_lemma1(args) -> list[dict]:
    j_max = args.j_max if args.j_max is not None else default_j_max(args.n, args.epsilon, args.tau)
    rep = check_conclusion(args.n, args.epsilon, args.delta, j_max, args.cls,
                           tau=args.tau, cap=args.cap)
    aux = rep.aux
    log.info(
        "b=%d window=[%d,%d] achieved_delta=%s aux(j=%d): chain=%s closing=%s case1=%s case2=%s",
        rep.b, *rep.window, rep.delta_achieved, aux.j, aux.chain, aux.closing,
        aux.case1, aux.case2,
    )
    return [{"n": rep.n, "epsilon": rep.epsilon, "class": str(rep.cls), "delta": rep.delta,
             "j": r.j, "a_lo": r.a_lo, "a_hi": r.a_hi, "max_forbid_ln": r.max_forbid_ln,
             "bound_ln": r.bound_ln, "holds": r.holds} for r in rep.per_j]


def _rows_theorem2(args) -> list[dict]:
    rep = theorem2_constants()
    return [
        {"name": "q_hat_0.955", "lhs": rep.side_b, "rhs": rep.side_a, "holds": rep.holds_q},
        {"name": "p_hat_0.768", "lhs": rep.side_d, "rhs": rep.side_c, "holds": rep.holds_p},
    ]


def _job(args) -> tuple[str, str, Callable[[Any], list[dict]]]:
    """(table name, cache key, row builder) for the parsed command."""
    c = args.command
    if c == "count":
        return "count", cache_key("count", args.n, None, args.cls), _rows_count
    if c == "census":
        return "census", cache_key("census", args.n, None, args.cls), _rows_census
    if c == "forbid":
        return "forbid", cache_key("forbid", args.n, args.a, args.cls), _rows_forbid
    if c == "scan-forbid":
        return "scan-forbid", cache_key("scan-forbid", args.n, None, args.cls), _rows_scan
    if c == "exponents":
        classes = ",".join(map(str, args.classes))
        return "exponents", cache_key("exponents", args.n_max, None, classes), _rows_exponents
    if args.what == "lemma1":
        params = {"epsilon": repr(args.epsilon), "delta": args.delta and repr(args.delta),
                  "j_max": args.j_max, "tau": args.tau}
        key = cache_key("verify-lemma1", args.n, None, args.cls, params)
        return "lemma1", key, _rows_lemma1
    return "theorem2", cache_key("verify-theorem2"), _rows_theorem2


def _capped_n(args) -> tuple[int, list[PartitionClass]] | None:
    if args.command in ("census", "forbid", "scan-forbid"):
        return args.n, [args.cls]
    if args.command == "exponents":
        return args.n_max, args.classes
    if args.command == "verify" and args.what == "lemma1":
        return args.n, [args.cls]
    return None


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    """Execute one CLI invocation and return the exit status."""
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "exponents" and not args.classes:
        parser.error("--class needs at least one class")
    try:
        capped = _capped_n(args)
        if capped is not None:
            for cls in capped[1]:
                check_cap(capped[0], cls, args.cap)
        table, key, build = _job(args)
        cache = ResultCache(args.cache_dir, enabled=not args.no_cache)
        rows = cache.get_or_compute(key, lambda: {"rows": build(args)})["rows"]
    except ResourceCapError as exc:
        print(f"subsumlab: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"subsumlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    stdout.write(format_rows(table, rows, args.format))
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> None:
    logging.basicConfig(level=logging.INFO, format="subsumlab: %(message)s", stream=sys.stderr)
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
