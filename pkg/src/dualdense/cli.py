"""Command-line interface.

Subcommands: ``dcs`` (full pipeline), ``align`` (alignment graph export),
``peel`` (densest subgraph of one weighted graph), ``oracle`` (exact
brute-force result), ``gen`` (planted instance files), ``stats`` (graph
metrics).  Exit codes: 0 success, 1 infeasible result, 2 input/parse error,
3 configuration error.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import formats
from .align import GapWeightRule, build_alignment_graph
from .dualnet import DualNetwork
from .errors import (ConfigError, IrreparableDisconnection, NoFeasibleSubgraph,
                     ParseError)
from .graph import connected_components, density
from .oracle import brute_force_dcs
from .peel import peel
from .pipeline import Connectivity, DcsOptions, extract_dcs, result_to_doc
from .synth import generate_planted

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_INPUT = 2
EXIT_CONFIG = 3


def _parse_delta(text: str) -> float:
    if text.strip().lower() == "inf":
        return math.inf
    try:
        return int(text)
    except ValueError:
        raise ConfigError(f"--delta must be a positive integer or 'inf', got {text!r}") from None


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_dual(args) -> DualNetwork:
    conceptual = formats.load_graph(args.conceptual, weighted=True)
    physical = formats.load_graph(args.physical, weighted=False)
    corr = formats.load_correspondence(args.correspondence)
    try:
        return DualNetwork(conceptual, physical, corr)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _options(args) -> DcsOptions:
    return DcsOptions(
        delta=_parse_delta(args.delta),
        gap_mode=GapWeightRule(args.gap_mode),
        connectivity=Connectivity(args.connectivity),
        repair=not args.no_repair,
        workers=args.workers,
    )


def cmd_dcs(args) -> int:
    dn = _load_dual(args)
    opts = _options(args)
    result = extract_dcs(dn, opts)
    if args.format == "json":
        _emit(formats.canonical_json(result_to_doc(result, dn, opts)), args.output)
    elif args.format == "dot":
        final = result.all_nodes
        c_hl = {dn.conceptual.labels[i] for i in dn.conceptual_nodes(final)}
        p_hl = {dn.physical.labels[i] for i in dn.physical_nodes(final)}
        text = (formats.graph_to_dot(dn.conceptual, name="conceptual", highlight=c_hl)
                + formats.graph_to_dot(dn.physical, name="physical", highlight=p_hl))
        _emit(text, args.output)
    else:
        raise ConfigError(f"dcs supports json or dot output, not {args.format!r}")
    return EXIT_OK


def cmd_align(args) -> int:
    dn = _load_dual(args)
    ag = build_alignment_graph(dn, _parse_delta(args.delta),
                               GapWeightRule(args.gap_mode), workers=args.workers)
    _emit(formats.export_graph(ag, args.format), args.output)
    return EXIT_OK


def cmd_peel(args) -> int:
    g = formats.load_graph(args.graph, weighted=not args.unweighted)
    if g.n == 0:
        raise ParseError(f"{args.graph}: graph is empty")
    result, trace = peel(g)
    doc = {
        "nodes": sorted(g.labels[v] for v in result.nodes),
        "node_count": len(result.nodes),
        "density": result.density,
        "exact": result.exact,
        "removal_order": [g.labels[v] for v in trace.removal_order],
        "density_curve": list(trace.density_at_prefix),
        "best_prefix_index": trace.best_prefix_index,
        "tied_prefix_indices": list(trace.tied_prefix_indices),
    }
    _emit(formats.canonical_json(doc), args.output)
    return EXIT_OK


def cmd_oracle(args) -> int:
    dn = _load_dual(args)
    result = brute_force_dcs(dn, max_nodes=args.max_oracle_nodes)
    doc = {
        "nodes": sorted([list(dn.pair_labels(k)) for k in result.nodes]),
        "node_count": len(result.nodes),
        "conceptual_density": result.density,
        "explored": result.explored,
        "physically_connected": True,
        "exact": True,
    }
    _emit(formats.canonical_json(doc), args.output)
    return EXIT_OK


def cmd_gen(args) -> int:
    import os

    inst = generate_planted(args.nodes, args.planted_size, args.seed,
                            background_weight_cap=args.background_weight_cap,
                            background_edge_prob=args.background_edge_prob)
    os.makedirs(args.out_dir, exist_ok=True)
    dn = inst.dual
    formats.write_edge_list(dn.conceptual, os.path.join(args.out_dir, "conceptual.tsv"), True)
    formats.write_edge_list(dn.physical, os.path.join(args.out_dir, "physical.tsv"), False)
    with open(os.path.join(args.out_dir, "correspondence.tsv"), "w", encoding="utf-8") as fh:
        for c, p in dn.correspondence.pairs:
            fh.write(f"{c}\t{p}\n")
    meta = {
        "seed": inst.seed,
        "nodes": args.nodes,
        "planted_size": args.planted_size,
        "planted": sorted(dn.pair_labels(k)[0] for k in inst.planted),
        "background_weight_cap": args.background_weight_cap,
        "background_edge_prob": args.background_edge_prob,
    }
    with open(os.path.join(args.out_dir, "instance.json"), "w", encoding="utf-8") as fh:
        fh.write(formats.canonical_json(meta))
    print(f"wrote planted instance to {args.out_dir}", file=sys.stderr)
    return EXIT_OK


def cmd_stats(args) -> int:
    g = formats.load_graph(args.graph, weighted=not args.unweighted)
    n, m = g.n, g.edge_count
    doc = {
        "nodes": n,
        "edges": m,
        "total_weight": g.total_weight,
        "density": (2.0 * g.total_weight / n) if n else 0.0,
        "edge_ratio_density": (m / n) if n else 0.0,
        "edge_fraction_density": (2.0 * m / (n * (n - 1))) if n > 1 else 0.0,
        "components": len(connected_components(g)),
        "duplicates_collapsed": g.duplicates_collapsed,
    }
    _emit(formats.canonical_json(doc), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dualdense",
        description="Densest connected subgraph mining on dual networks.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_dual_inputs(p):
        p.add_argument("--conceptual", required=True, help="weighted edge list")
        p.add_argument("--physical", required=True, help="unweighted edge list")
        p.add_argument("--correspondence", required=True,
                       help="one 'conceptual physical' pair per line")

    def add_common(p, formats_choices=("json",)):
        p.add_argument("--output", default=None, help="output path (default stdout)")
        if formats_choices:
            p.add_argument("--format", default="json", choices=formats_choices)

    def add_align_opts(p):
        p.add_argument("--delta", default="4",
                       help="gap threshold: positive integer or 'inf' (default 4)")
        p.add_argument("--gap-mode", default="per-hop", choices=["conceptual", "per-hop"])
        p.add_argument("--workers", type=int, default=1,
                       help="threads for alignment distance queries")

    p = sub.add_parser("dcs", help="full pipeline: alignment, peeling, connectivity")
    add_dual_inputs(p)
    add_align_opts(p)
    p.add_argument("--connectivity", default="strict", choices=["strict", "relaxed"])
    p.add_argument("--no-repair", action="store_true",
                   help="report disconnection instead of adding connector nodes")
    add_common(p, ("json", "dot"))
    p.set_defaults(func=cmd_dcs)

    p = sub.add_parser("align", help="build and export the alignment graph")
    add_dual_inputs(p)
    add_align_opts(p)
    add_common(p, ("json", "dot", "graphml"))
    p.set_defaults(func=cmd_align)

    p = sub.add_parser("peel", help="densest subgraph of a single weighted graph")
    p.add_argument("--graph", required=True, help="edge list path")
    p.add_argument("--unweighted", action="store_true")
    add_common(p)
    p.set_defaults(func=cmd_peel)

    p = sub.add_parser("oracle", help="exact brute-force result (small instances)")
    add_dual_inputs(p)
    p.add_argument("--max-oracle-nodes", type=int, default=None,
                   help="largest subset size the enumeration scores")
    add_common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="generate a planted dual-network instance")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--planted-size", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--background-weight-cap", type=float, default=0.1)
    p.add_argument("--background-edge-prob", type=float, default=0.15)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("stats", help="graph metrics, including both density diagnostics")
    p.add_argument("--graph", required=True, help="edge list path")
    p.add_argument("--unweighted", action="store_true")
    add_common(p)
    p.set_defaults(func=cmd_stats)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (NoFeasibleSubgraph, IrreparableDisconnection) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
