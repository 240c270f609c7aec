"""Command-line front end: graph stats, pair scoring, path inspection,
and golden-dataset benchmarking.

Exit codes: 2 for unusable input (missing files, bad flags), 3 for an
IRI absent from the graph, 1 for runtime failures such as a dataset
resolving to nothing.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .bench import (
    DatasetError,
    load_dataset,
    load_mapping,
    report_json,
    report_tsv,
    run_benchmark,
)
from .methods import ALL_METHODS, Params, is_method, relatedness
from .paths import DegeneratePairError, enumerate_paths
from .store import IngestError, IngestOptions, ingest

GRAPH_DIR_ENV = "KGREL_GRAPH_DIR"


def _add_graph_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--graph", action="append", metavar="FILE",
                    help="N-Triples file, .gz accepted; repeatable "
                         f"(default: *.nt and *.nt.gz under ${GRAPH_DIR_ENV})")
    sp.add_argument("--exclude-predicate", action="append", default=[],
                    metavar="IRI",
                    help="drop triples with this predicate; repeatable")


def _add_param_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--h", type=int, default=2,
                    help="path length bound (default 2)")
    sp.add_argument("--m", type=int, default=2,
                    help="chain length bound (default 2)")
    sp.add_argument("--k", type=int, default=5,
                    help="paths kept by exclm (default 5)")
    sp.add_argument("--alpha", type=float, default=0.25,
                    help="per-step damping for exclm (default 0.25)")
    sp.add_argument("--log-base", type=float, default=10.0, dest="log_base",
                    help="information-content logarithm base (default 10)")


def _params(args: argparse.Namespace) -> Params:
    return Params(h=args.h, m=args.m, k=args.k, alpha=args.alpha,
                  log_base=args.log_base)


def _graph_files(args, parser) -> list[str]:
    files = list(args.graph or ())
    if not files:
        root = os.environ.get(GRAPH_DIR_ENV)
        if root:
            base = Path(root)
            files = sorted(str(p) for p in base.glob("*.nt"))
            files += sorted(str(p) for p in base.glob("*.nt.gz"))
    if not files:
        parser.error(f"no graph given: pass --graph or set ${GRAPH_DIR_ENV}")
    return files


def _load_store(args, parser):
    files = _graph_files(args, parser)
    for f in files:
        if not Path(f).is_file():
            print(f"error: graph file not found: {f}", file=sys.stderr)
            raise SystemExit(2)
    opts = IngestOptions(exclude_predicates=tuple(args.exclude_predicate))
    try:
        return ingest(files, opts)
    except IngestError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(2)


def _resolve_iri(store, iri: str) -> int:
    h = store.handle(iri)
    if h is None or not store.is_resource(h):
        print(f"error: IRI not in graph: {iri}", file=sys.stderr)
        raise SystemExit(3)
    return h


def cmd_stats(args, parser) -> int:
    store = _load_store(args, parser)
    info = store.summary()
    print(f"triples: {info['triples']}")
    print(f"resources: {info['resources']}")
    preds = sorted(info["predicates"].items(), key=lambda kv: (-kv[1], kv[0]))
    print(f"predicates: {len(preds)}")
    for iri, n in preds[:10]:
        print(f"  {n:>8}  {iri}")
    return 0


def cmd_score(args, parser) -> int:
    if not is_method(args.method):
        parser.error(f"unknown method {args.method!r}; choose from: "
                     + ", ".join(ALL_METHODS))
    store = _load_store(args, parser)
    a = _resolve_iri(store, args.iri1)
    b = _resolve_iri(store, args.iri2)
    try:
        value = relatedness(store, args.method, a, b, _params(args))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"{args.method}\t{args.iri1}\t{args.iri2}\t{value:.6f}")
    return 0


def _render_path(store, path) -> str:
    parts = [store.iri(path.start)]
    for step in path.steps:
        pred = store.iri(step.triple.p)
        if step.forward:
            parts.append(f"-[{pred}]->")
            parts.append(store.iri(step.triple.o))
        else:
            parts.append(f"<-[{pred}]-")
            parts.append(store.iri(step.triple.s))
    return " ".join(parts)


def cmd_paths(args, parser) -> int:
    if args.bound < 1:
        parser.error("bound must be >= 1")
    store = _load_store(args, parser)
    a = _resolve_iri(store, args.iri1)
    b = _resolve_iri(store, args.iri2)
    try:
        found = enumerate_paths(store, a, b, args.direction, "at_most",
                                args.bound)
    except DegeneratePairError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for p in found:
        print(_render_path(store, p))
    print(f"{len(found)} paths")
    return 0


def _expand_methods(args, parser) -> list[str]:
    requested = args.methods or ["all"]
    names: list[str] = []
    for entry in requested:
        for name in entry.split(","):
            name = name.strip()
            if name == "all":
                names.extend(ALL_METHODS)
            elif is_method(name):
                names.append(name)
            else:
                parser.error(f"unknown method {name!r}; choose from: "
                             + ", ".join(ALL_METHODS))
    return list(dict.fromkeys(names))


def cmd_bench(args, parser) -> int:
    if not args.dataset:
        parser.error("--dataset is required")
    methods = _expand_methods(args, parser)
    store = _load_store(args, parser)
    mapping = None
    if args.mapping:
        if not Path(args.mapping).is_file():
            print(f"error: mapping file not found: {args.mapping}",
                  file=sys.stderr)
            return 2
        mapping = load_mapping(args.mapping)
    params = _params(args)
    all_reports = []
    fully_unresolved = []
    for ds in args.dataset:
        if not Path(ds).is_file():
            print(f"error: dataset file not found: {ds}", file=sys.stderr)
            return 2
        try:
            pairs = load_dataset(ds)
        except DatasetError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        name = Path(ds).stem
        reports = run_benchmark(store, methods, pairs, mapping, params,
                                clean_pairs=args.clean, dataset_name=name)
        if pairs and reports and reports[0].unresolved == len(pairs):
            fully_unresolved.append(name)
        all_reports.extend(reports)

    text = (report_tsv(all_reports) if args.format == "tsv"
            else report_json(all_reports))
    if args.out:
        out = Path(args.out)
        out.write_text(text, encoding="utf-8")
        from .figures import render_correlation_figure
        for name in dict.fromkeys(r.dataset for r in all_reports):
            subset = [r for r in all_reports if r.dataset == name]
            render_correlation_figure(subset, out.with_name(f"{out.stem}_{name}.png"))
    else:
        sys.stdout.write(text)
    if fully_unresolved:
        print("error: no pair resolved in: " + ", ".join(fully_unresolved),
              file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kgrel",
        description="Semantic relatedness over RDF knowledge graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", help="graph size and predicate histogram")
    _add_graph_args(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("score", help="relatedness of one resource pair")
    p.add_argument("method", help="method name, e.g. exclm")
    p.add_argument("iri1")
    p.add_argument("iri2")
    _add_graph_args(p)
    _add_param_args(p)
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("paths",
                       help="acyclic paths between two resources")
    p.add_argument("iri1")
    p.add_argument("iri2")
    p.add_argument("--direction", choices=("directed", "undirected"),
                   default="undirected")
    p.add_argument("--bound", type=int, default=2,
                   help="maximum path length (default 2)")
    _add_graph_args(p)
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("bench", help="score golden datasets and correlate")
    p.add_argument("--dataset", action="append", metavar="FILE",
                   help="term-pair TSV with a score or rank column; repeatable")
    p.add_argument("--mapping", metavar="FILE", help="term-to-IRI table")
    p.add_argument("--method", "--methods", dest="methods", action="append",
                   metavar="NAME",
                   help="method name, comma list, or 'all' (default all)")
    p.add_argument("--clean", action="store_true",
                   help="drop pairs with no undirected path of length <= 2")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument("--out", metavar="FILE",
                   help="report file; correlation figures rendered alongside")
    _add_graph_args(p)
    _add_param_args(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
