"""Command-line interface.

Subcommands: dist, matrix, classify, bounds, sizes, verify.  Exit codes:
0 success, 1 usage or capacity problem, 2 input error, 3 verification
failure (a classifier verdict contradicting the recorded expectations, or
a refuted claim).

Clustering input formats (auto-detected unless --input-format is given):

  labels     one "element-name cluster-label" pair per line, '#' comments
             and blank lines ignored
  blocks-json  a JSON array of arrays of element names
  literal    a partition literal such as "12|34|567" (single-digit
             elements) or "1 2|3 4|5 6 7" (space-separated)

Every file is reduced to (element names, grouping); names are sorted
bytewise and numbered 1..n, so distances depend only on the shared name
set and the groupings.  Files compared in one invocation must carry
exactly the same name set.

Output is byte-identical across repeated identical invocations.  --jobs is
accepted for interface stability; scans currently run in one process,
which trivially keeps output independent of the worker count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import bounds as bounds_mod
from . import classifiers, oracle
from .core import (CapacityError, GroundSetMismatchError, InvalidPartitionError,
                   LiteralParseError, Partition, from_labels, parse_literal)
from .measures import MeasureId, distance

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_VERIFY = 3


class _UsageError(Exception):
    pass


class _InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep usage failures on exit code 1
        raise _UsageError(message)


# -- clustering ingestion -------------------------------------------------------


@dataclass(frozen=True)
class ClusteringFile:
    path: str
    name: str
    format: str
    names: tuple[str, ...]
    partition: Partition


def _detect_format(text: str) -> str:
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if body.startswith("["):
            return "blocks-json"
        if "|" in body:
            return "literal"
        return "labels"
    raise _InputError("empty input file")


def _parse_labels(path: str, text: str) -> list[tuple[str, str]]:
    pairs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = body.split()
        if len(tokens) != 2:
            raise _InputError(
                f"{path}:{lineno}: expected 'element-name cluster-label', "
                f"got {len(tokens)} token(s)")
        pairs.append((tokens[0], tokens[1]))
    if not pairs:
        raise _InputError(f"{path}: no label lines found")
    return pairs


def load_clustering(path: str, fmt: str = "auto") -> ClusteringFile:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc}") from exc
    if fmt == "auto":
        fmt = _detect_format(text)
    if fmt == "labels":
        pairs = _parse_labels(path, text)
    elif fmt == "blocks-json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise _InputError(
                f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from exc
        if (not isinstance(data, list) or
                any(not isinstance(b, list) for b in data)):
            raise _InputError(f"{path}: blocks-json must be an array of arrays")
        pairs = [(str(name), f"b{idx}")
                 for idx, block in enumerate(data) for name in block]
    elif fmt == "literal":
        try:
            raw = parse_literal(text)
        except LiteralParseError as exc:
            raise _InputError(f"{path}: {exc}") from exc
        pairs = [(str(e), f"b{raw.block_of[e - 1]}") for e in range(1, raw.n + 1)]
    else:
        raise _UsageError(f"unknown input format {fmt!r}")
    try:
        part = from_labels(pairs)
    except InvalidPartitionError as exc:
        raise _InputError(f"{path}: {exc}") from exc
    names = tuple(sorted(name for name, _ in pairs))
    return ClusteringFile(path, os.path.basename(path), fmt, names, part)


def emit_labels(names: tuple[str, ...], partition: Partition) -> str:
    """Labels-format text for a partition over bytewise-sorted names;
    parsing the result reproduces the same canonical partition."""
    ordered = sorted(names)
    if len(ordered) != partition.n:
        raise ValueError(f"{len(ordered)} names for a partition of {partition.n}")
    lines = [f"{name} c{partition.block_of[idx]}"
             for idx, name in enumerate(ordered)]
    return "\n".join(lines) + "\n"


def _require_common_ground(files: list[ClusteringFile]) -> None:
    base = files[0]
    for other in files[1:]:
        if other.names != base.names:
            missing = sorted(set(base.names) - set(other.names))
            extra = sorted(set(other.names) - set(base.names))
            raise _InputError(
                f"ground sets differ between {base.name} and {other.name}: "
                f"missing {missing or '[]'}, unexpected {extra or '[]'}")


# -- output helpers -------------------------------------------------------------


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def _check_format(fmt: str, allowed: tuple[str, ...], command: str) -> None:
    if fmt not in allowed:
        raise _UsageError(
            f"format {fmt!r} not supported by {command} (choose from {allowed})")


# -- subcommands -----------------------------------------------------------------


def _cmd_dist(args) -> int:
    measure = MeasureId.parse(args.measure)
    _check_format(args.format, ("text", "json"), "dist")
    fp = load_clustering(args.file_p, args.input_format)
    fq = load_clustering(args.file_q, args.input_format)
    _require_common_ground([fp, fq])
    value = distance(measure, fp.partition, fq.partition)
    if args.format == "json":
        _emit(json.dumps({
            "measure": measure.value,
            "raw": value.raw,
            "normalized": str(value.normalized),
            "decimal": value.decimal(),
        }, sort_keys=True))
    elif args.normalized:
        _emit(value.render_normalized())
    else:
        _emit(str(value.raw))
    return EXIT_OK


def _cmd_matrix(args) -> int:
    measure = MeasureId.parse(args.measure)
    _check_format(args.format, ("text", "csv", "json"), "matrix")
    if len(args.files) < 2:
        raise _UsageError("matrix needs at least two clustering files")
    files = [load_clustering(p, args.input_format) for p in args.files]
    _require_common_ground(files)
    names = [f.name for f in files]
    size = len(files)
    matrix = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            v = distance(measure, files[i].partition, files[j].partition).raw
            matrix[i][j] = matrix[j][i] = v
    if args.format == "json":
        _emit(json.dumps({"measure": measure.value, "names": names,
                          "matrix": matrix}, sort_keys=True))
    elif args.format == "csv":
        lines = ["name," + ",".join(names)]
        for nm, row in zip(names, matrix):
            lines.append(nm + "," + ",".join(str(v) for v in row))
        _emit("\n".join(lines))
    else:
        rows = [["name"] + names] + [
            [nm] + [str(v) for v in row] for nm, row in zip(names, matrix)]
        widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
        _emit("\n".join(
            "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
            for row in rows))
    return EXIT_OK


def _parse_measures(spec: str | None) -> list[MeasureId] | None:
    if spec is None:
        return None
    return [MeasureId.parse(tok) for tok in spec.split(",") if tok.strip()]


def _cmd_classify(args) -> int:
    _check_format(args.format, ("text", "json"), "classify")
    measures = _parse_measures(args.measures)
    try:
        report = classifiers.classify_all(args.n, measures)
    except CapacityError as exc:
        raise _UsageError(str(exc)) from exc
    if args.format == "json":
        _emit(json.dumps(report.to_json(), sort_keys=True))
    else:
        _emit(report.to_text())
    problems = classifiers.expectation_mismatches(report)
    if problems:
        for p in problems:
            sys.stderr.write(f"expectation mismatch: {p}\n")
        return EXIT_VERIFY
    return EXIT_OK


def _cmd_bounds(args) -> int:
    _check_format(args.format, ("text", "csv", "json"), "bounds")
    try:
        rows = bounds_mod.bounds_table(args.n)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    extrema = None
    if args.with_oracle:
        try:
            extrema = oracle.ih_extrema_by_d(args.n)
        except CapacityError as exc:
            raise _UsageError(str(exc)) from exc
    if args.format == "json":
        payload = []
        for r in rows:
            entry = {"n": r.n, "k": r.k, "min_ih": r.min_ih, "max_ih": r.max_ih,
                     "case": r.min_case.value}
            if extrema is not None:
                omin, omax = extrema[r.k]
                entry.update(oracle_min=omin, oracle_max=omax,
                             agree=(omin, omax) == (r.min_ih, r.max_ih))
            payload.append(entry)
        _emit(json.dumps(payload, sort_keys=True))
    elif args.format == "csv":
        _emit(bounds_mod.render_bounds_csv(rows, extrema))
    else:
        _emit(bounds_mod.render_bounds_text(rows, extrema))
    return EXIT_OK


def _cmd_sizes(args) -> int:
    _check_format(args.format, ("text", "csv", "json"), "sizes")
    try:
        sizes = oracle.available_sizes(args.n)
    except CapacityError as exc:
        raise _UsageError(str(exc)) from exc
    if args.format == "json":
        _emit(json.dumps(list(sizes)))
    elif args.format == "csv":
        _emit(",".join(str(s) for s in sizes))
    else:
        _emit(" ".join(str(s) for s in sizes))
    return EXIT_OK


def _cmd_verify(args) -> int:
    _check_format(args.format, ("text", "json"), "verify")
    try:
        reports = oracle.verify_claims(args.n, seed=args.seed,
                                       sample_pairs=args.sample_pairs)
    except CapacityError as exc:
        raise _UsageError(str(exc)) from exc
    if args.format == "json":
        _emit(json.dumps(oracle.claims_to_json(reports), sort_keys=True))
    else:
        _emit(oracle.render_claims_text(reports))
    if any(not r.verified for r in reports):
        return EXIT_VERIFY
    return EXIT_OK


# -- entry point -------------------------------------------------------------------


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"),
                        default="text", help="output format (default: text)")
    common.add_argument("--jobs", type=int, default=1, metavar="N",
                        help="worker budget for scans (output is identical "
                             "for any value)")
    common.add_argument("--seed", type=int, default=0, metavar="S",
                        help="seed for sampling paths (default: 0)")

    files_common = _Parser(add_help=False)
    files_common.add_argument("--input-format", default="auto",
                              choices=("auto", "labels", "blocks-json", "literal"),
                              help="clustering file format (default: auto-detect)")

    parser = _Parser(prog="partlat",
                     description="partition-lattice distance measures toolkit")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p_dist = sub.add_parser("dist", parents=[common, files_common],
                            help="distance between two clusterings")
    p_dist.add_argument("measure", help="pd, sd, rb, rbp, sb or ih")
    p_dist.add_argument("file_p")
    p_dist.add_argument("file_q")
    p_dist.add_argument("--normalized", action="store_true",
                        help="print the [0,1) normalized value")
    p_dist.set_defaults(func=_cmd_dist)

    p_matrix = sub.add_parser("matrix", parents=[common, files_common],
                              help="pairwise distance matrix")
    p_matrix.add_argument("measure")
    p_matrix.add_argument("files", nargs="+")
    p_matrix.set_defaults(func=_cmd_matrix)

    p_classify = sub.add_parser("classify", parents=[common],
                                help="property verdicts for the measures")
    p_classify.add_argument("n", type=int)
    p_classify.add_argument("--measures", default=None,
                            help="comma-separated subset (default: all six)")
    p_classify.set_defaults(func=_cmd_classify)

    p_bounds = sub.add_parser("bounds", parents=[common],
                              help="indicator-Hamming bounds per distance value")
    p_bounds.add_argument("n", type=int)
    p_bounds.add_argument("--with-oracle", action="store_true",
                          help="add exhaustive oracle columns")
    p_bounds.set_defaults(func=_cmd_bounds)

    p_sizes = sub.add_parser("sizes", parents=[common],
                             help="available size values at n")
    p_sizes.add_argument("n", type=int)
    p_sizes.set_defaults(func=_cmd_sizes)

    p_verify = sub.add_parser("verify", parents=[common],
                              help="re-check the structural claims at n")
    p_verify.add_argument("n", type=int)
    p_verify.add_argument("--sample-pairs", type=int, default=20000,
                          help="pair sample size above the exhaustive range")
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "jobs", 1) < 1:
            raise _UsageError("--jobs must be at least 1")
        if not getattr(args, "command", None):
            parser.print_help()
            return EXIT_USAGE
        return args.func(args)
    except _UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except CapacityError as exc:
        sys.stderr.write(f"capacity: {exc}\n")
        return EXIT_USAGE
    except _InputError as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return EXIT_INPUT
    except (LiteralParseError, InvalidPartitionError, GroundSetMismatchError) as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return EXIT_INPUT
    except ValueError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
