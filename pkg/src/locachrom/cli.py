"""Command-line interface.

Subcommands: gen, corona, chil, verify, bounds, fixture. Exit codes are a
stable contract: 0 resolved/valid, 1 invalid, 2 indeterminate, 64 usage,
74 I/O. stdout carries the primary artifact, stderr the diagnostics.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import constructions, graphs, locating

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INDETERMINATE = 2
EXIT_USAGE = 64
EXIT_IO = 74


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class CommandConfig:
    format: str
    budget: int
    seed: int


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _read_text(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _IOFailure(f"cannot read {path}: {exc.strerror}") from exc


def _write_text(path: str, text: str):
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise _IOFailure(f"cannot write {path}: {exc.strerror}") from exc


class _IOFailure(Exception):
    pass


def _load_graph(path: str) -> graphs.Graph:
    return graphs.parse_graph(_read_text(path))


def _load_coloring(path: str) -> locating.Coloring:
    try:
        data = json.loads(_read_text(path))
        return locating.Coloring.from_json_dict(data)
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise graphs.InputError(f"bad coloring file {path}: {exc}") from exc


def build_parser() -> _Parser:
    parser = _Parser(prog="locachrom", description=__doc__)
    parser.add_argument(
        "--format", choices=("human", "json"), default="human",
        help="output format (default: human)",
    )
    parser.add_argument(
        "--budget", type=int, default=locating.DEFAULT_BUDGET,
        help="search budget in tree nodes",
    )
    parser.add_argument(
        "--seed", type=int, default=0,
        help="seed for randomized corpus generation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a standard graph family")
    p.add_argument("family")
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("-o", "--output", help="write the edge list here")

    p = sub.add_parser("corona", help="corona product of two graph files")
    p.add_argument("gfile")
    p.add_argument("hfile")
    p.add_argument("-o", "--output", help="write the product edge list here")
    p.add_argument("--map-out", help="write the corona map JSON here")

    p = sub.add_parser("chil", help="exact locating-chromatic number")
    p.add_argument("gfile")

    p = sub.add_parser("verify", help="check a coloring against a graph")
    p.add_argument("gfile")
    p.add_argument("coloringfile")

    p = sub.add_parser("bounds", help="corona-product bounds for G and H")
    p.add_argument("gfile")
    p.add_argument("hfile")

    p = sub.add_parser("fixture", help="emit a certified reference bundle")
    p.add_argument("name", choices=("theorem2", "star", "empty-corona"))
    p.add_argument("params", type=int, nargs="*")

    return parser


def _cmd_gen(args, config: CommandConfig) -> int:
    try:
        g = graphs.generate(args.family, *args.params)
    except (graphs.InputError, TypeError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = graphs.serialize_graph(g)
    if config.format == "json":
        print(_dump({"graph": text}))
    elif args.output:
        _write_text(args.output, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_corona(args, config: CommandConfig) -> int:
    g = _load_graph(args.gfile)
    h = _load_graph(args.hfile)
    product, cmap = graphs.corona(g, h)
    text = graphs.serialize_graph(product)
    if config.format == "json":
        print(_dump({"graph": text, "map": cmap.to_json_dict()}))
        return EXIT_OK
    if args.output:
        _write_text(args.output, text)
    else:
        sys.stdout.write(text)
    if args.map_out:
        _write_text(args.map_out, cmap.to_json() + "\n")
    else:
        print(cmap.to_json())
    return EXIT_OK


def _cmd_chil(args, config: CommandConfig) -> int:
    g = _load_graph(args.gfile)
    result = locating.chi_L(g, config.budget)
    if config.format == "json":
        print(_dump(result.to_json_dict()))
    elif result.value is not None:
        print(f"chi_L = {result.value}")
        print(f"certificate: {result.certificate.to_json()}")
    else:
        lo, hi = result.interval
        print(f"indeterminate: chi_L in [{lo}, {hi}] (budget exhausted)")
    return EXIT_OK if result.value is not None else EXIT_INDETERMINATE


def _cmd_verify(args, config: CommandConfig) -> int:
    g = _load_graph(args.gfile)
    coloring = _load_coloring(args.coloringfile)
    report = locating.verify(g, coloring)
    if config.format == "json":
        print(_dump(report.to_json_dict()))
    elif report.locating:
        print("locating coloring: yes")
    else:
        kind = "improper" if not report.proper else "code collision"
        print(f"locating coloring: no ({kind}); witness: {_dump(report.witness)}")
    return EXIT_OK if report.locating else EXIT_INVALID


def _cmd_bounds(args, config: CommandConfig) -> int:
    g = _load_graph(args.gfile)
    h = _load_graph(args.hfile)
    report = constructions.corona_bounds(g, h, config.budget)
    # Specialized tree bounds when they apply: tree G with edgeless H.
    if h.num_edges == 0 and h.n >= 1 and g.num_edges == g.n - 1:
        tree_report = constructions.tree_empty_corona_bounds(g, h.n, config.budget)
        tags = dict(report.tags)
        tags.update(tree_report.tags)
        report = constructions.BoundsReport(
            max(report.lower, tree_report.lower),
            min(report.upper, tree_report.upper),
            report.lower_tag if report.lower >= tree_report.lower
            else tree_report.lower_tag,
            report.upper_tag if report.upper <= tree_report.upper
            else tree_report.upper_tag,
            tags,
            report.indeterminate or tree_report.indeterminate,
        )
    if config.format == "json":
        print(_dump(report.to_json_dict()))
    else:
        print(f"lower = {report.lower} ({report.lower_tag})")
        print(f"upper = {report.upper} ({report.upper_tag})")
        print(f"tags: {_dump(report.tags)}")
    return EXIT_INDETERMINATE if report.indeterminate else EXIT_OK


def _fixture_bundle(name: str, params: list) -> dict:
    if name == "theorem2":
        if params:
            raise UsageError("fixture theorem2 takes no parameters")
        fx = constructions.fixture_theorem2()
        return {
            "graph": graphs.serialize_graph(fx.graph),
            "map": fx.corona_map.to_json_dict(),
            "construction": fx.result.to_json_dict(),
            "labels": list(fx.labels),
            "codes": {label: list(code) for label, code in fx.expected_codes.items()},
        }
    if name == "star":
        if len(params) != 1:
            raise UsageError("fixture star requires one parameter n")
        result = constructions.star_corona_coloring(params[0])
    elif name == "empty-corona":
        if len(params) != 2:
            raise UsageError("fixture empty-corona requires parameters n k")
        n, k = params
        g = graphs.generate("path", n)
        result = constructions.empty_corona_coloring(g, k)
    else:  # pragma: no cover - argparse restricts the choices
        raise UsageError(f"unknown fixture {name}")
    return {"construction": result.to_json_dict()}


def _cmd_fixture(args, config: CommandConfig) -> int:
    bundle = _fixture_bundle(args.name, args.params)
    if config.format == "json":
        print(_dump(bundle))
    else:
        print(_dump(bundle))
    return EXIT_OK


_COMMANDS = {
    "gen": _cmd_gen,
    "corona": _cmd_corona,
    "chil": _cmd_chil,
    "verify": _cmd_verify,
    "bounds": _cmd_bounds,
    "fixture": _cmd_fixture,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.budget <= 0:
            raise UsageError("--budget must be positive")
        config = CommandConfig(args.format, args.budget, args.seed)
        return _COMMANDS[args.command](args, config)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _IOFailure as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (graphs.ParseError, graphs.InputError,
            locating.DisconnectedGraphError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


def run():  # console-script entry point
    sys.exit(main())


if __name__ == "__main__":
    run()
