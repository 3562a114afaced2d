"""Command-line front end: exact chromatic expansions and identity suites.

Commands
--------
chromatic   exact chromatic polynomial of an induced subgraph
expand      basis coefficients of the chromatic set map, with re-summation
verify      named identity suites over a graph or a block-size vector
oracle      brute-force counts (colorings, orientations, partitions, tails)
abel        the Abel-type polynomial attached to a subset of blocks

Graphs are plain text: a header line `n m`, then m lines `u v` with
0 <= u < v < n; `#` starts a comment.  Subsets are decimal integers read
as vertex bitmasks (bit v = vertex v).  Bases are monomial, falling:a,
rising, abel:a, or logfamily with a an exact rational such as -1 or 3/4.
Every rational in the output is rendered canonically as p/q (or p when
q = 1); coefficient arrays are low-degree-first.

Exit codes: 0 success / all checks pass, 1 a verification failed,
2 usage or parse error, 3 a size cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .abel import (
    BlockPartition,
    abel_poly,
    count_tail_forests,
    verify_closed_form_partition_sum,
    verify_forest_coefficients,
)
from .expansions import (
    check_binomial_type,
    expand,
    expansion_reconstructs,
    verify_abel_one_expansion,
    verify_chromatic_expansion,
    verify_power_identity,
    verify_rising_orientation_pairs,
    verify_stable_count_expansion,
    verify_stanley_evaluation,
)
from .graphs import (
    Graph,
    chromatic_poly,
    chromatic_setmap,
    count_acyclic_orientations,
    count_acyclic_sink_source,
    count_acyclic_unique_sink,
    count_proper_colorings,
    count_stable_partitions,
    load_graph,
)
from .ring import CapExceeded, bell_number
from .umbral import family_from_string, standard_families

GRAPH_CHECKS = (
    "binomial",
    "expansion",
    "rising-pairs",
    "abel-one",
    "stable-counts",
    "derivative",
    "evaluation",
    "power",
    "stanley",
)
BLOCK_CHECKS = ("closed-form", "forest-count", "tail-forests")
ORACLES = (
    "colorings",
    "acyclic",
    "stable-partitions",
    "unique-sink",
    "sink-source",
    "tail-forests",
)


@dataclass
class RunConfig:
    command: str
    graph: Optional[str] = None
    blocks: Optional[tuple[int, ...]] = None
    subset: Optional[int] = None
    basis: Optional[str] = None
    check: Optional[str] = None
    oracle: Optional[str] = None
    x: Optional[Fraction] = None
    k: Optional[int] = None
    source: Optional[int] = None
    sink: Optional[int] = None
    format: str = "json"
    cap: Optional[int] = None


def _rat(value) -> str:
    return str(Fraction(value))


def _coeff_strings(poly) -> list[str]:
    return [_rat(c) for c in poly.coeffs] if poly.coeffs else ["0"]


def _parse_blocks(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"blocks must be comma-separated integers, got {text!r}")
    if not sizes or any(s < 1 for s in sizes):
        raise argparse.ArgumentTypeError("block sizes must be positive integers")
    return sizes


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="setmaps",
        description="Exact chromatic-polynomial expansions in binomial-type bases.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, *, graph=False, blocks=False) -> None:
        if graph:
            p.add_argument("--graph", required=True, help="path to a graph file")
        if blocks:
            p.add_argument(
                "--blocks",
                type=_parse_blocks,
                required=True,
                help="comma-separated block sizes, e.g. 2,1,1",
            )
        p.add_argument(
            "--subset",
            type=int,
            default=None,
            help="subset bitmask (decimal; default: the full set)",
        )
        p.add_argument("--format", choices=("json", "table"), default="json")
        p.add_argument(
            "--cap",
            type=int,
            default=None,
            help="override the command's governing size cap (prints a cost warning)",
        )

    p = sub.add_parser("chromatic", help="chromatic polynomial of an induced subgraph")
    common(p, graph=True)

    p = sub.add_parser("expand", help="expansion coefficients in a binomial-type basis")
    common(p, graph=True)
    p.add_argument("--basis", required=True, help="monomial | falling:a | rising | abel:a | logfamily")

    p = sub.add_parser("verify", help="run a named identity suite")
    p.add_argument("--check", required=True, help=f"one of {', '.join(GRAPH_CHECKS + BLOCK_CHECKS)}")
    p.add_argument("--graph", default=None, help="path to a graph file (graph checks)")
    p.add_argument(
        "--blocks", type=_parse_blocks, default=None, help="block sizes (block checks)"
    )
    p.add_argument("--basis", default=None, help="restrict the expansion check to one basis")
    p.add_argument("--subset", type=int, default=None)
    p.add_argument("--x", type=_parse_rational, default=None, help="expansion parameter / base point")
    p.add_argument("--k", type=int, default=None, help="component count / power exponent")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--cap", type=int, default=None)

    p = sub.add_parser("oracle", help="brute-force combinatorial counts")
    p.add_argument("oracle", choices=ORACLES)
    p.add_argument("--graph", default=None)
    p.add_argument("--blocks", type=_parse_blocks, default=None)
    p.add_argument("--subset", type=int, default=None)
    p.add_argument("--x", type=_parse_rational, default=None, help="color count (colorings)")
    p.add_argument("--k", type=int, default=None, help="component count (tail-forests)")
    p.add_argument("--source", type=int, default=None, help="source vertex (sink-source)")
    p.add_argument("--sink", type=int, default=None, help="sink vertex (unique-sink, sink-source)")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--cap", type=int, default=None)

    p = sub.add_parser("abel", help="Abel-type polynomial of a subset of blocks")
    common(p, blocks=True)

    return parser


def _warn_cap(cfg: RunConfig) -> None:
    if cfg.cap is None:
        return
    estimate = bell_number(cfg.cap) if cfg.cap <= 25 else "astronomically many"
    print(
        f"warning: cap override {cfg.cap}; enumeration may touch on the order of "
        f"Bell({cfg.cap}) = {estimate} partitions or 2^{cfg.cap} subsets",
        file=sys.stderr,
    )


def _load_graph(cfg: RunConfig) -> Graph:
    if cfg.graph is None:
        raise ValueError("this command needs --graph")
    return load_graph(cfg.graph)


def _graph_subset(graph: Graph, cfg: RunConfig) -> int:
    subset = graph.vertex_mask if cfg.subset is None else cfg.subset
    if subset < 0 or subset & ~graph.vertex_mask:
        raise ValueError(f"subset {subset} outside vertex range of {graph.n} vertices")
    return subset


def _graph_input(cfg: RunConfig, graph: Graph, subset: Optional[int] = None) -> dict:
    payload = {"graph": cfg.graph, "vertices": graph.n, "edges": graph.edge_count}
    if subset is not None:
        payload["subset"] = subset
    return payload


def cmd_chromatic(cfg: RunConfig) -> tuple[dict, int]:
    graph = _load_graph(cfg)
    subset = _graph_subset(graph, cfg)
    poly = chromatic_poly(graph.restrict(subset))
    payload = {
        "command": "chromatic",
        "input": _graph_input(cfg, graph, subset),
        "result": {
            "coefficients": _coeff_strings(poly),
            "degree": poly.degree,
            "polynomial": str(poly),
        },
        "checks": [],
    }
    return payload, 0


def cmd_expand(cfg: RunConfig) -> tuple[dict, int]:
    graph = _load_graph(cfg)
    subset = _graph_subset(graph, cfg)
    family = family_from_string(cfg.basis)
    kwargs = {} if cfg.cap is None else {"cap": cfg.cap}
    exp = expand(chromatic_setmap(graph), subset, family, **kwargs)
    rebuilt = exp.reconstruct()
    reconstructs = rebuilt == chromatic_poly(graph.restrict(subset))
    subset_coeffs = {
        str(T): _rat(exp.coeffs[T]) for T in range(1, subset + 1) if T & ~subset == 0
    }
    payload = {
        "command": "expand",
        "input": {**_graph_input(cfg, graph, subset), "basis": str(family)},
        "result": {
            "subset_coefficients": subset_coeffs,
            "length_coefficients": [_rat(c) for c in exp.by_length()],
            "reconstructs": reconstructs,
        },
        "checks": [],
    }
    return payload, 0 if reconstructs else 1


def _graph_check_list(cfg: RunConfig, graph: Graph, subset: int) -> list[tuple[str, bool]]:
    kwargs = {} if cfg.cap is None else {"cap": cfg.cap}
    checks: list[tuple[str, bool]] = []
    name = cfg.check

    def run(label: str, fn, *args, **kw) -> None:
        checks.append((label, bool(fn(*args, **kw))))

    if name in ("binomial", "all"):
        run("binomial-type", check_binomial_type, chromatic_setmap(graph), **kwargs)
    if name in ("expansion", "all"):
        families = (
            standard_families() if cfg.basis is None else (family_from_string(cfg.basis),)
        )
        p = chromatic_setmap(graph)
        for family in families:
            run(f"expansion {family}", expansion_reconstructs, p, family, subset, **kwargs)
    if name in ("rising-pairs", "all"):
        run("rising-pairs", verify_rising_orientation_pairs, graph, subset, **kwargs)
    if name in ("abel-one", "all"):
        run("abel-one", verify_abel_one_expansion, graph, subset, **kwargs)
    if name in ("stable-counts", "all"):
        run("stable-counts", verify_stable_count_expansion, graph, subset, **kwargs)
    if name in ("derivative", "all"):
        a = Fraction(0) if cfg.x is None else cfg.x
        run(
            f"derivative a={a}",
            verify_chromatic_expansion,
            graph,
            subset,
            a,
            "derivative",
            **kwargs,
        )
    if name in ("evaluation", "all"):
        a = Fraction(1) if cfg.x is None else cfg.x
        run(
            f"evaluation a={a}",
            verify_chromatic_expansion,
            graph,
            subset,
            a,
            "evaluation",
            **kwargs,
        )
    if name in ("power", "all"):
        x0 = Fraction(2) if cfg.x is None else cfg.x
        y0 = 2 if cfg.k is None else cfg.k
        run(
            f"power x0={x0} y0={y0}",
            verify_power_identity,
            chromatic_setmap(graph),
            x0,
            y0,
            **kwargs,
        )
    if name in ("stanley", "all"):
        run("stanley", verify_stanley_evaluation, graph, subset)
    return checks


def _block_check_list(cfg: RunConfig, blocks: BlockPartition) -> list[tuple[str, bool]]:
    kwargs = {} if cfg.cap is None else {"cap": cfg.cap}
    checks: list[tuple[str, bool]] = []
    name = cfg.check
    subset = blocks.full_mask if cfg.subset is None else cfg.subset
    if name == "closed-form":
        checks.append(
            ("closed-form", verify_closed_form_partition_sum(blocks, subset, **kwargs))
        )
    if name == "forest-count":
        checks.append(
            ("forest-count", verify_forest_coefficients(blocks, subset, cfg.k, **kwargs))
        )
    if name == "tail-forests":
        n = blocks.block_count
        w = blocks.weight
        ks = range(1, n + 1) if cfg.k is None else (cfg.k,)
        for k in ks:
            counted = count_tail_forests(blocks, k)
            expected = math.comb(n - 1, k - 1) * w ** (n - k)
            checks.append((f"tail-forests k={k}", counted == expected))
    return checks


def cmd_verify(cfg: RunConfig) -> tuple[dict, int]:
    if cfg.check in GRAPH_CHECKS or (cfg.check == "all" and cfg.graph is not None):
        graph = _load_graph(cfg)
        subset = _graph_subset(graph, cfg)
        checks = _graph_check_list(cfg, graph, subset)
        source: dict = _graph_input(cfg, graph, subset)
    elif cfg.check in BLOCK_CHECKS:
        if cfg.blocks is None:
            raise ValueError(f"check {cfg.check!r} needs --blocks")
        blocks = BlockPartition(cfg.blocks)
        checks = _block_check_list(cfg, blocks)
        source = {"blocks": list(blocks.sizes)}
    else:
        raise ValueError(
            f"unknown check {cfg.check!r}; expected one of "
            f"{', '.join(GRAPH_CHECKS + BLOCK_CHECKS)} (or 'all' with --graph)"
        )
    failed = sum(1 for _, ok in checks if not ok)
    payload = {
        "command": "verify",
        "input": {**source, "check": cfg.check},
        "result": {"all_pass": failed == 0, "passed": len(checks) - failed, "failed": failed},
        "checks": [{"name": label, "pass": ok} for label, ok in checks],
    }
    return payload, 0 if failed == 0 else 1


def cmd_oracle(cfg: RunConfig) -> tuple[dict, int]:
    kwargs = {} if cfg.cap is None else {"cap": cfg.cap}
    name = cfg.oracle
    if name == "tail-forests":
        if cfg.blocks is None:
            raise ValueError("oracle tail-forests needs --blocks")
        if cfg.k is None:
            raise ValueError("oracle tail-forests needs --k")
        blocks = BlockPartition(cfg.blocks)
        count = count_tail_forests(blocks, cfg.k)
        source: dict = {"blocks": list(blocks.sizes), "k": cfg.k}
    else:
        graph = _load_graph(cfg)
        subset = _graph_subset(graph, cfg)
        restricted = graph.restrict(subset)
        source = {**_graph_input(cfg, graph, subset)}
        if name == "colorings":
            if cfg.x is None:
                raise ValueError("oracle colorings needs --x")
            if cfg.x.denominator != 1 or cfg.x < 0:
                raise ValueError("color count must be a nonnegative integer")
            count = count_proper_colorings(restricted, int(cfg.x))
            source["x"] = int(cfg.x)
        elif name == "acyclic":
            count = count_acyclic_orientations(restricted, **kwargs)
        elif name == "stable-partitions":
            count = count_stable_partitions(restricted, **kwargs)
        elif name == "unique-sink":
            if cfg.sink is None:
                raise ValueError("oracle unique-sink needs --sink")
            count = count_acyclic_unique_sink(restricted, cfg.sink, **kwargs)
            source["sink"] = cfg.sink
        elif name == "sink-source":
            if cfg.source is None or cfg.sink is None:
                raise ValueError("oracle sink-source needs --source and --sink")
            count = count_acyclic_sink_source(restricted, cfg.source, cfg.sink, **kwargs)
            source["source"] = cfg.source
            source["sink"] = cfg.sink
        else:
            raise ValueError(f"unknown oracle {name!r}")
    payload = {
        "command": "oracle",
        "input": {**source, "oracle": name},
        "result": {"count": count},
        "checks": [],
    }
    return payload, 0


def cmd_abel(cfg: RunConfig) -> tuple[dict, int]:
    blocks = BlockPartition(cfg.blocks)
    subset = blocks.full_mask if cfg.subset is None else cfg.subset
    poly = abel_poly(blocks, subset)
    payload = {
        "command": "abel",
        "input": {"blocks": list(blocks.sizes), "subset": subset},
        "result": {
            "coefficients": _coeff_strings(poly),
            "degree": poly.degree,
            "polynomial": str(poly),
        },
        "checks": [],
    }
    return payload, 0


def _table_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return " ".join(_table_value(v) for v in value)
    if isinstance(value, dict):
        return " ".join(f"{k}={_table_value(v)}" for k, v in value.items())
    return str(value)


def render(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2)
    lines = [f"command: {payload['command']}"]
    for key, value in payload["input"].items():
        lines.append(f"{key}: {_table_value(value)}")
    for key, value in payload["result"].items():
        lines.append(f"{key}: {_table_value(value)}")
    for check in payload["checks"]:
        lines.append(f"{'PASS' if check['pass'] else 'FAIL'} {check['name']}")
    return "\n".join(lines)


_DISPATCH = {
    "chromatic": cmd_chromatic,
    "expand": cmd_expand,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "abel": cmd_abel,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return 0 if exc.code is None else int(exc.code)
    cfg = RunConfig(
        command=ns.command,
        graph=getattr(ns, "graph", None),
        blocks=getattr(ns, "blocks", None),
        subset=getattr(ns, "subset", None),
        basis=getattr(ns, "basis", None),
        check=getattr(ns, "check", None),
        oracle=getattr(ns, "oracle", None),
        x=getattr(ns, "x", None),
        k=getattr(ns, "k", None),
        source=getattr(ns, "source", None),
        sink=getattr(ns, "sink", None),
        format=getattr(ns, "format", "json"),
        cap=getattr(ns, "cap", None),
    )
    _warn_cap(cfg)
    try:
        payload, status = _DISPATCH[cfg.command](cfg)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(render(payload, cfg.format))
    return status


if __name__ == "__main__":
    sys.exit(main())
