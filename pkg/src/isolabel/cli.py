"""Command-line front end.

Exit codes: 0 success, 2 input error (including a disconnected graph where
a connected one is required), 3 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import DEFAULT_PS, rows_to_csv, run_bench
from .bits import LabelDecodeError
from .generators import enumerate_connected_graphs, random_graph, random_tree
from .graph import DisconnectedGraphError, GraphFormatError, format_graph, read_graph
from .labelfile import LabelFile, LabelFileError, format_labels, format_mapping, parse_mapping, read_labels
from .schemes import SCHEME_NAMES, get_scheme
from .universal import build_realized_universal, verify_isometric, verify_members

EXIT_INPUT = 2
EXIT_VERIFY = 3
UNIVERSAL_MAX_N = 6


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_graph(path: str):
    try:
        return read_graph(path)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None
    except GraphFormatError as exc:
        raise CliError(f"{path}: {exc}") from None


def _load_labels(path: str) -> LabelFile:
    try:
        return read_labels(path)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None
    except LabelFileError as exc:
        raise CliError(f"{path}: {exc}") from None


def cmd_gen(args) -> int:
    if args.family == "tree":
        g = random_tree(args.n, args.seed)
    else:
        g = random_graph(args.n, args.p, args.seed)
    _emit(format_graph(g), args.output)
    return 0


def cmd_encode(args) -> int:
    g = _load_graph(args.graph)
    try:
        ordering, labels = get_scheme(args.scheme).encode(g)
    except DisconnectedGraphError as exc:
        raise CliError(str(exc)) from None
    _emit(format_labels(LabelFile(args.scheme, ordering, labels)), args.output)
    return 0


def _decoded(lf: LabelFile, v: int):
    try:
        return get_scheme(lf.scheme).decode(lf.labels[v])
    except LabelDecodeError as exc:
        raise CliError(f"label of vertex {v} is malformed: {exc}") from None


def cmd_decode(args) -> int:
    lf = _load_labels(args.labels)
    vertices = [args.vertex] if args.vertex is not None else range(lf.order)
    for v in vertices:
        if not 0 <= v < lf.order:
            raise CliError(f"unknown vertex {v}")
        d = _decoded(lf, v)
        if lf.scheme == "dv":
            print(f"{v}: " + " ".join(map(str, d)))
        else:
            print(f"{v}: p=" + ",".join(map(str, d.p)) + " x=" + ",".join(map(str, d.x)))
    return 0


def cmd_dist(args) -> int:
    lf = _load_labels(args.labels)
    for v in (args.u, args.v):
        if not 0 <= v < lf.order:
            raise CliError(f"unknown vertex {v}")
    scheme = get_scheme(lf.scheme)
    print(scheme.distance(_decoded(lf, args.u), _decoded(lf, args.v)))
    return 0


def cmd_universal(args) -> int:
    if not 1 <= args.class_max_n <= UNIVERSAL_MAX_N:
        raise CliError(f"--class-max-n must be in 1..{UNIVERSAL_MAX_N}")
    graphs = (g for n in range(1, args.class_max_n + 1) for g in enumerate_connected_graphs(n))
    h = build_realized_universal(graphs, args.scheme)
    reports = verify_members(h)
    failed = [r for r in reports if not r.passed]
    if args.output:
        prefix = Path(args.output)
        Path(f"{prefix}.graph").write_text(format_graph(h.graph))
        Path(f"{prefix}.map").write_text(format_mapping(h.labels))
        with open(f"{prefix}.embeddings", "w") as fh:
            for i, (g, emb, rep) in enumerate(zip(h.members, h.embeddings, reports)):
                edges = " ".join(f"{u}-{v}" for u, v in g.edges())
                status = "pass" if rep.passed else f"FAIL {rep.worst_pair}"
                fh.write(f"{i} n={g.order} edges=[{edges}] images={' '.join(map(str, emb))} {status}\n")
    print(f"scheme={args.scheme} class_max_n={args.class_max_n} graphs={len(reports)} "
          f"universal_vertices={h.order} universal_edges={h.graph.size} "
          f"pairs_checked={sum(r.pairs_checked for r in reports)} failures={len(failed)}")
    for r in failed[:10]:
        print(f"FAIL graph={r.worst_pair[0]} u={r.worst_pair[1]} v={r.worst_pair[2]} "
              f"d_G={r.worst_pair[3]} d_H={r.worst_pair[4]}")
    return EXIT_VERIFY if failed else 0


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    host = _load_graph(args.universal)
    try:
        mapping = parse_mapping(Path(args.mapping).read_text())
    except (OSError, LabelFileError) as exc:
        raise CliError(f"{args.mapping}: {exc}") from None
    if len(mapping) != host.order:
        raise CliError("mapping and universal graph disagree on the vertex count")
    try:
        _, labels = get_scheme(args.scheme).encode(g)
    except DisconnectedGraphError as exc:
        raise CliError(str(exc)) from None
    where = {label: i for i, label in enumerate(mapping)}
    missing = [v for v, label in enumerate(labels) if label not in where]
    if missing:
        print(f"FAIL label of vertex {missing[0]} is not a vertex of the universal graph")
        return EXIT_VERIFY
    report = verify_isometric(g, host, [where[label] for label in labels])
    if report.passed:
        print(f"pass pairs_checked={report.pairs_checked}")
        return 0
    _, u, v, dg, dh = report.worst_pair
    print(f"FAIL u={u} v={v} d_G={dg} d_H={dh}")
    return EXIT_VERIFY


def cmd_bench(args) -> int:
    if args.scheme == "sep" and args.family != "tree":
        raise CliError("the separator label bound is stated for trees; use --family tree")
    if any(n < 1 or n > 100_000 for n in args.n):
        raise CliError("sizes must be in 1..100000")
    rows = run_bench(args.scheme, args.family, args.n, args.seeds, args.p)
    _emit(rows_to_csv(rows), args.output)
    over = [r for r in rows if not r.within_bound]
    for r in over:
        print(f"bound exceeded: n={r.n} p={r.p} max={r.max_label_bits} bound={r.bound_bits}", file=sys.stderr)
    return EXIT_VERIFY if over else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="isolabel", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a random graph or tree")
    p.add_argument("--family", choices=("random", "tree"), default="random")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("encode", help="label every vertex of a connected graph")
    p.add_argument("graph")
    p.add_argument("--scheme", choices=SCHEME_NAMES, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="print decoded labels")
    p.add_argument("labels")
    p.add_argument("--vertex", type=int)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("dist", help="distance between two vertices from their labels")
    p.add_argument("labels")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("universal", help="build and verify a realized universal graph")
    p.add_argument("--class-max-n", type=int, required=True)
    p.add_argument("--scheme", choices=SCHEME_NAMES, required=True)
    p.add_argument("-o", "--output", help="prefix for .graph, .map and .embeddings files")
    p.set_defaults(func=cmd_universal)

    p = sub.add_parser("verify", help="check that a graph embeds isometrically into a universal graph")
    p.add_argument("graph")
    p.add_argument("--universal", required=True)
    p.add_argument("--mapping", required=True)
    p.add_argument("--scheme", choices=SCHEME_NAMES, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="maximum label sizes against the explicit bounds (CSV)")
    p.add_argument("--scheme", choices=SCHEME_NAMES, required=True)
    p.add_argument("--family", choices=("random", "tree"), default="random")
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--p", type=float, nargs="+", default=list(DEFAULT_PS))
    p.add_argument("--seeds", type=int, default=5)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
