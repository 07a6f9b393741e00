"""Command-line front end: ``nsum <command> ...``.

Structured output is JSON on stdout; ``count`` prints one integer per line.
Errors print ``{"error": ...}`` and exit with status 2.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .errors import NsumError, PreconditionError
from .families import KINDS, expected_ns, generate, parse_family
from .infinite_prefix import LevelSpecTree, construct_prefix, counterexample_window, named_generator
from .linear_oracle import kernel_basis, kernel_dim
from .ns_checker import construct_witness, satisfies_ns, satisfying_roots, tree_report
from .tree_core import Graph, Tree, format_edge_list, is_tree, parse_edge_list
from .tree_enum import census, default_cache_path

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _read_graph(path: str) -> Graph:
    try:
        text = Path(path).read_text() if path != "-" else sys.stdin.read()
    except OSError as exc:
        raise NsumError(f"cannot read {path}: {exc.strerror}") from None
    return parse_edge_list(text)


def _read_tree(path: str) -> Tree:
    g = _read_graph(path)
    if not is_tree(g):
        raise NsumError(f"{path} is not a tree")
    return Tree.from_graph(g)


def cmd_check(args) -> int:
    report = tree_report(_read_tree(args.file))
    _emit(report)
    return EXIT_OK if report["satisfies"] else EXIT_NO


def cmd_witness(args) -> int:
    t = _read_tree(args.file)
    if args.root is None:
        roots = satisfying_roots(t) if t.n > 1 else []
        if not roots:
            _emit({"error": "tree does not satisfy the neighbour-sum property"})
            return EXIT_NO
        root = roots[0]
    else:
        if not 0 <= args.root < t.n:
            raise NsumError(f"root {args.root} out of range for n={t.n}")
        root = args.root
    try:
        w = construct_witness(t, root)
    except PreconditionError as exc:
        _emit({"error": str(exc)})
        return EXIT_NO
    _emit({"n": t.n, "root": root, "witness": [str(x) for x in w.values]})
    return EXIT_OK


def cmd_dim(args) -> int:
    kb = kernel_basis(_read_graph(args.file))
    _emit({"dim": kb.dim, "basis": kb.as_strings()})
    return EXIT_OK


def cmd_count(args) -> int:
    if args.max < 1 or args.shards < 1:
        raise NsumError("--max and --shards must be positive")
    cache = None
    if not args.no_cache:
        cache = Path(args.cache) if args.cache else default_cache_path()
    report = census(args.max, shards=args.shards, cache=cache, fresh=args.fresh,
                    processes=args.processes)
    for s in report.sigma_sequence():
        print(s)
    return EXIT_OK


def cmd_family(args) -> int:
    spec = parse_family(args.kind, args.params)
    g = generate(spec)
    if args.action == "gen":
        sys.stdout.write(format_edge_list(g))
        return EXIT_OK
    _emit({
        "family": str(spec),
        "expected": expected_ns(spec),
        "checker": satisfies_ns(g) if spec.is_tree else None,
        "kernel_dim": kernel_dim(g),
    })
    return EXIT_OK


def cmd_prefix(args) -> int:
    if args.spec:
        t = LevelSpecTree.parse(Path(args.spec).read_text())
    else:
        t = named_generator(args.gen, args.seed)
    p = construct_prefix(t, args.levels, split=args.split)
    _emit({"levels": [[str(x) for x in p.level_values(j)] for j in range(p.depth + 1)]})
    return EXIT_OK


def cmd_window(args) -> int:
    w = counterexample_window(args.m)
    _emit({
        "m": w.m,
        "labels": [f"{k}{n}" for k, n in w.labels],
        "dim": w.kernel.dim,
        "basis": w.kernel.as_strings(),
        "interior_zero": w.interior_is_zero(),
    })
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nsum", description="Neighbour-sum property toolkit")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("check", help="decide a tree given as an edge list")
    s.add_argument("file")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("witness", help="construct a solution on a tree")
    s.add_argument("file")
    s.add_argument("--root", type=int)
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("dim", help="exact solution-space dimension of any graph")
    s.add_argument("file")
    s.set_defaults(func=cmd_dim)

    s = sub.add_parser("count", help="sigma(n) for n = 1..MAX, one per line")
    s.add_argument("--max", type=int, required=True)
    s.add_argument("--shards", type=int, default=1)
    s.add_argument("--processes", type=int, help="worker processes (default: min(shards, cpus))")
    s.add_argument("--cache", help="JSON-lines cache file (default: $NSUM_CACHE or ~/.cache/nsum)")
    s.add_argument("--no-cache", action="store_true")
    s.add_argument("--fresh", action="store_true", help="ignore cached records")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("family", help="generate or check a named family")
    s.add_argument("action", choices=["gen", "check"])
    s.add_argument("kind", choices=sorted(KINDS))
    s.add_argument("params", nargs="+")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("prefix", help="solve the first levels of an infinite tree")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--gen", choices=["binary", "path", "spine", "figure4", "random"])
    src.add_argument("--spec", help="file of 'internal leaves' counts per depth")
    s.add_argument("--levels", type=int, required=True)
    s.add_argument("--split", choices=["even", "first"], default="even")
    s.add_argument("--seed", type=int)
    s.set_defaults(func=cmd_prefix)

    s = sub.add_parser("window", help="kernel of a finite window of the spine tree")
    s.add_argument("--m", type=int, required=True)
    s.set_defaults(func=cmd_window)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        _emit({"error": str(exc)})
        return EXIT_ERROR
    if args.verbose:
        logging.basicConfig(level=logging.INFO, format="%(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (NsumError, ValueError, OSError) as exc:
        _emit({"error": str(exc)})
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
