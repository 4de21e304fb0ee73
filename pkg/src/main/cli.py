#!/usr/bin/env python3
"""
Command-line interface for the ribbon-group action and the self-triality census.

Results go to stdout, logs to stderr. Exit codes: 0 success, 1 usage or
input error, 2 failed internal verification.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from dotenv import load_dotenv
from loguru import logger

from twuality.action import apply
from twuality.base import InvariantViolation, TwualityError
from twuality.chord import DiagramForm
from twuality.enumeration import linear_diagram_count, linear_diagrams, oebs_up_to_iso
from twuality.graph import LabeledRibbonGraph, parse_graph, serialize_graph
from twuality.group import EdgeOp, EdgePermutation, RibbonElement, SemidirectElement
from twuality.isomorphism import invariants, iso
from twuality.jewel import to_jewel
from twuality.records import CensusRecord, CensusSummary, GraphRecord, diagram_record
from twuality.search.census import CensusRun
from twuality.search.classify import classify
from twuality.search.family import automorph_twuals, family
from twuality.search.reduction import reduce_to_oeb
from twuality.search.stabilizer import stabilizers

from src.config.settings import get_search_config, validate_settings
from src.utils.checkpoint import CheckpointStore
from src.utils.logging_config import setup_logging_from_env


class CliParser(argparse.ArgumentParser):
    """ArgumentParser that exits with status 1 on usage errors."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _emit_json(payload) -> None:
    print(json.dumps(payload, ensure_ascii=False))


def _graph_texts(args: argparse.Namespace, count: int) -> List[str]:
    if args.file:
        lines = [
            line.strip()
            for line in Path(args.file).read_text(encoding="utf-8").splitlines()
            if line.strip()
        ]
        texts = [" ".join(lines)] if count == 1 else lines
    else:
        graph = args.graph or []
        texts = [graph] if isinstance(graph, str) else list(graph)
    if len(texts) != count:
        raise TwualityError(f"expected {count} graph(s), got {len(texts)}")
    return texts


def _read_graph(args: argparse.Namespace) -> LabeledRibbonGraph:
    return parse_graph(_graph_texts(args, 1)[0])


def _graph_payload(graph: LabeledRibbonGraph) -> dict:
    return {"graph": serialize_graph(graph), **GraphRecord.from_graph(graph).model_dump()}


def cmd_apply(args: argparse.Namespace) -> int:
    graph = _read_graph(args)
    if args.gamma:
        gamma = RibbonElement.parse(args.gamma)
    else:
        gamma = RibbonElement.uniform(EdgeOp.parse(args.uniform or "1"), graph.n)
    if args.pi:
        pi = EdgePermutation.from_cycles(args.pi, graph.n)
    else:
        pi = EdgePermutation.identity(graph.n)
    image = apply(SemidirectElement(gamma, pi), graph)
    if args.json:
        _emit_json(_graph_payload(image))
    else:
        print(serialize_graph(image))
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    graph = _read_graph(args)
    flags = classify(graph)
    stats = invariants(graph)
    if args.json:
        _emit_json({**_graph_payload(graph), **flags.as_dict()})
        return 0
    print(serialize_graph(graph))
    print(
        f"dual={_yes(flags.self_dual)} petrial={_yes(flags.self_petrial)} "
        f"wilsonial={_yes(flags.self_wilsonial)} trial={_yes(flags.self_trial)}"
    )
    print(
        f"canonical: dual={_yes(flags.canonical_self_dual)} "
        f"petrial={_yes(flags.canonical_self_petrial)} "
        f"wilsonial={_yes(flags.canonical_self_wilsonial)} "
        f"trial={_yes(flags.canonical_self_trial)}"
    )
    print(
        f"V={stats.V} E={stats.E} F={stats.F} euler={stats.euler} "
        f"orientable={_yes(stats.orientable)} genus={stats.genus}"
    )
    return 0


def cmd_invariants(args: argparse.Namespace) -> int:
    graph = _read_graph(args)
    stats = invariants(graph)
    dump = to_jewel(graph).dump() if args.jewel else None
    if args.json:
        payload = {**_graph_payload(graph), "components": stats.components}
        if dump is not None:
            payload["jewel"] = dump.splitlines()
        _emit_json(payload)
        return 0
    print(
        f"V={stats.V} E={stats.E} F={stats.F} euler={stats.euler} "
        f"orientable={_yes(stats.orientable)} genus={stats.genus} components={stats.components}"
    )
    if dump is not None:
        print(dump)
    return 0


def cmd_census(args: argparse.Namespace) -> int:
    search = get_search_config()
    if args.n < 1:
        raise TwualityError(f"census needs n >= 1, got {args.n}")
    if args.n > search.max_census_edges and not args.unbounded:
        raise TwualityError(
            f"n={args.n} exceeds max_census_edges={search.max_census_edges}; pass --unbounded"
        )
    jobs = args.jobs or search.census_jobs

    store = None
    start_index, seeds = 0, []
    if not args.no_checkpoint:
        store = CheckpointStore(
            args.checkpoint_dir or search.checkpoint_dir,
            args.n,
            attempts=search.checkpoint_write_attempts,
        )
        if args.resume:
            checkpoint = store.load()
            if checkpoint is not None:
                start_index, seeds = checkpoint.next_index, checkpoint.restore()
                logger.info(
                    f"Resuming census n={args.n} at OEB {start_index} with {len(seeds)} classes"
                )
            else:
                logger.info(f"No usable checkpoint for n={args.n}; starting from the first OEB")

    run = CensusRun(
        args.n,
        jobs=jobs,
        start_index=start_index,
        seed_candidates=seeds,
        on_checkpoint=store.record if store is not None else None,
        checkpoint_every=search.checkpoint_every,
    )
    result = run.run()
    records = [CensusRecord.from_entry(entry) for entry in result.entries]
    summary = CensusSummary.from_result(result)

    if args.out:
        out_path = Path(args.out)
        out_path.parent.mkdir(parents=True, exist_ok=True)
        out_path.write_text(
            json.dumps(
                {
                    "summary": summary.model_dump(),
                    "records": [record.model_dump() for record in records],
                },
                indent=2,
                ensure_ascii=False,
            ),
            encoding="utf-8",
        )
        logger.info(f"Census records written to {out_path}")

    if args.json:
        for record in records:
            _emit_json(record.model_dump())
        _emit_json({"summary": summary.model_dump()})
        return 0
    for record in records:
        alpha = ",".join(record.alpha)
        print(f"{record.graph} = ({alpha}) {record.seed_oeb}  sigma={record.sigma}")
    print(f"n={summary.n} classes: {summary.classes} (OEB classes: {summary.oebs})")
    return 0


def cmd_stabilizers(args: argparse.Namespace) -> int:
    graph = _read_graph(args)
    stabilizer = stabilizers(graph)
    elements = stabilizer.nontrivial() if args.nontrivial else list(stabilizer)
    if args.json:
        _emit_json({"graph": serialize_graph(graph), "elements": [str(x) for x in elements]})
        return 0
    for element in elements:
        print(element)
    print(f"elements: {len(elements)} of {len(stabilizer)}")
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.k < 0:
        raise TwualityError(f"chord count must be non-negative, got {args.k}")
    if args.linear:
        if args.count:
            print(linear_diagram_count(args.k, args.signed))
            return 0
        for diagram in linear_diagrams(args.k, args.signed):
            if args.json:
                _emit_json(diagram_record(diagram))
            else:
                print(diagram)
        return 0
    if args.signed:
        raise TwualityError("--signed applies to --linear enumeration only")
    classes = oebs_up_to_iso(args.k)
    if args.count:
        print(len(classes))
        return 0
    for diagram in classes:
        if args.json:
            _emit_json(
                {
                    "offsets": list(diagram.entries),
                    "labels": list(diagram.convert(DiagramForm.END_LABEL).entries),
                }
            )
        else:
            print(diagram.convert(DiagramForm.END_LABEL))
    return 0


def cmd_family(args: argparse.Namespace) -> int:
    oeb, alpha, graph = family(args.k)
    flags = classify(graph)
    if args.json:
        _emit_json(
            {
                "k": args.k,
                "oeb": serialize_graph(oeb),
                "alpha": [op.value for op in alpha],
                **_graph_payload(graph),
                **flags.as_dict(),
            }
        )
        return 0
    print(f"H: {serialize_graph(oeb)}")
    print(f"alpha: {alpha}")
    print(f"G: {serialize_graph(graph)}")
    print(
        f"trial={_yes(flags.self_trial)} dual={_yes(flags.self_dual)} "
        f"petrial={_yes(flags.self_petrial)}"
    )
    return 0


def cmd_reduce(args: argparse.Namespace) -> int:
    graph = _read_graph(args)
    diagram, alpha = reduce_to_oeb(graph)
    if args.json:
        _emit_json({"oeb": list(diagram.entries), "alpha": [op.value for op in alpha]})
        return 0
    print(f"OEB: {diagram}")
    print(f"alpha: {alpha}")
    return 0


def cmd_iso(args: argparse.Namespace) -> int:
    first, second = (parse_graph(text) for text in _graph_texts(args, 2))
    witness = iso(first, second)
    if witness is None:
        if args.json:
            _emit_json({"isomorphic": False})
        else:
            print("not isomorphic")
        return 0
    mapping = " ".join(
        f"{k}->{witness.edge_bijection(k)}" for k in range(1, witness.edge_bijection.degree + 1)
    )
    if args.json:
        _emit_json(
            {
                "isomorphic": True,
                "edges": list(witness.edge_bijection.images),
                "sigma": str(witness.sigma) if witness.sigma is not None else None,
            }
        )
        return 0
    print(f"isomorphic: {mapping}".rstrip())
    if witness.sigma is not None:
        print(f"spots: {witness.sigma}")
    return 0


def cmd_twuals(args: argparse.Namespace) -> int:
    graph = _read_graph(args)
    op = EdgeOp.parse(args.op)
    found = automorph_twuals(graph, op, limit=args.limit)
    for mu, alpha, image in found:
        if args.json:
            _emit_json({"mu": str(mu), "alpha": [o.value for o in alpha], **_graph_payload(image)})
        else:
            print(f"{serialize_graph(image)} = {alpha} H  via {mu}")
    if not args.json:
        print(f"classes: {len(found)}")
    return 0


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "apply": cmd_apply,
    "classify": cmd_classify,
    "invariants": cmd_invariants,
    "census": cmd_census,
    "stabilizers": cmd_stabilizers,
    "enumerate": cmd_enumerate,
    "family": cmd_family,
    "reduce": cmd_reduce,
    "iso": cmd_iso,
    "twuals": cmd_twuals,
}


def _add_graph_input(parser: argparse.ArgumentParser, count: int = 1) -> None:
    parser.add_argument(
        "graph",
        nargs="*" if count > 1 else "?",
        help="Graph in bracket notation, e.g. '[1,2,3,1,2,3]'",
    )
    parser.add_argument("--file", help="Read the graph text from a file instead")


def build_parser() -> CliParser:
    parser = CliParser(
        prog="twuality",
        description="Twisted duality on edge-labeled ribbon graphs.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Structured JSON output")
    subparsers = parser.add_subparsers(dest="command", required=True)

    # -- apply --
    p_apply = subparsers.add_parser("apply", parents=[common], help="Apply (gamma, pi) to a graph")
    _add_graph_input(p_apply)
    choice = p_apply.add_mutually_exclusive_group()
    choice.add_argument("--gamma", help="Edge operations, e.g. 'tdt,td,d'")
    choice.add_argument("--uniform", help="One operation applied to every edge, e.g. 'd'")
    p_apply.add_argument("--pi", help="Edge permutation in cycle notation, e.g. '(1 2)'")

    # -- classify / invariants / stabilizers / reduce --
    p_classify = subparsers.add_parser(
        "classify", parents=[common], help="Self-twuality flags and invariants"
    )
    _add_graph_input(p_classify)
    p_invariants = subparsers.add_parser(
        "invariants", parents=[common], help="V, E, F, Euler characteristic, genus"
    )
    _add_graph_input(p_invariants)
    p_invariants.add_argument(
        "--jewel", action="store_true", help="Also print the jewel matchings, one color per line"
    )
    p_stab = subparsers.add_parser(
        "stabilizers", parents=[common], help="All (gamma, pi) fixing a labeled graph"
    )
    _add_graph_input(p_stab)
    p_stab.add_argument(
        "--nontrivial", action="store_true", help="Only elements with a non-identity gamma"
    )
    p_reduce = subparsers.add_parser(
        "reduce", parents=[common], help="Carry a connected graph to an OEB"
    )
    _add_graph_input(p_reduce)

    # -- iso --
    p_iso = subparsers.add_parser(
        "iso", parents=[common], help="Isomorphism witness between two graphs"
    )
    _add_graph_input(p_iso, count=2)

    # -- census --
    p_census = subparsers.add_parser(
        "census", parents=[common], help="Self-trial graphs that are not self-dual"
    )
    p_census.add_argument("n", type=int, help="Number of edges")
    p_census.add_argument("--jobs", type=int, default=None, help="Worker processes")
    p_census.add_argument("--resume", action="store_true", help="Continue from the checkpoint")
    p_census.add_argument("--checkpoint-dir", default=None, help="Checkpoint directory")
    p_census.add_argument(
        "--no-checkpoint", action="store_true", help="Do not read or write checkpoints"
    )
    p_census.add_argument("--out", help="Write records and summary to a JSON file")
    p_census.add_argument(
        "--unbounded", action="store_true", help="Allow n above max_census_edges"
    )

    # -- enumerate --
    p_enum = subparsers.add_parser(
        "enumerate", parents=[common], help="OEB classes or linear chord diagrams"
    )
    p_enum.add_argument("k", type=int, help="Number of chords")
    p_enum.add_argument("--count", action="store_true", help="Print only the count")
    p_enum.add_argument("--linear", action="store_true", help="Linear diagrams, not classes")
    p_enum.add_argument("--signed", action="store_true", help="Include twisted chords")

    # -- family --
    p_family = subparsers.add_parser(
        "family", parents=[common], help="The k-th self-trial family member"
    )
    p_family.add_argument("k", type=int, help="Family index, 3k edges")

    # -- twuals --
    p_twuals = subparsers.add_parser(
        "twuals", parents=[common], help="Self-twual graphs from the automorphisms of a graph"
    )
    _add_graph_input(p_twuals)
    p_twuals.add_argument("--op", default="dt", help="Target uniform operation (default: dt)")
    p_twuals.add_argument("--limit", type=int, default=None, help="Stop after this many classes")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    setup_logging_from_env()

    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        validate_settings()
        return COMMANDS[args.command](args)
    except InvariantViolation as e:
        logger.critical(f"Internal verification failed: {e}")
        print(f"internal error: {e}", file=sys.stderr)
        return 2
    except (TwualityError, ValueError, OSError) as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
