"""Command-line interface for the openly disjoint cycles toolkit."""

import argparse
import json
import sys
from typing import Dict, List, Optional, Sequence

import networkx as nx
from pydantic import BaseModel, ValidationError

from src.bounds.theorems import theorem_bounds
from src.constructions.blowup import blow_up
from src.constructions.generators import (
    complete_biorientation,
    join_construction,
    random_regular_digraph,
    reverse_join,
)
from src.constructions.walls import cylindrical_wall
from src.cycles.packing import c_number, cycles_through, girth, verify_cycle_packing
from src.cycles.trace import theorem1_trace
from src.density.dense import dense_subdigraph
from src.digraph.core import Digraph
from src.digraph.edgelist import format_edge_list, read_graph
from src.dtw.linked import certify_linked
from src.dtw.theorem2 import theorem2_certificate
from src.dtw.treewidth import digon_graph, treewidth_small
from src.menger.engine import max_disjoint_paths, verify_path_family, verify_separator
from src.models.schemas import CyclePacking, LinkedCertificate, PathFamily, Separator, dump_json
from src.utils.config import config
from src.utils.errors import (
    BudgetExceededError,
    CertificateError,
    DigraphError,
    PreconditionError,
    SoundnessError,
)
from src.utils.logger import logger
from src.utils.rationals import parse_rational

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


def _load_digraph(path: str) -> Digraph:
    graph = read_graph(path)
    if not isinstance(graph, Digraph):
        raise DigraphError(f"{path}: expected a directed edge list")
    return graph


def _emit(args: argparse.Namespace, payload: Dict, lines: Sequence[str] = ()) -> None:
    """Sorted-key JSON with --json, otherwise the human-readable lines."""
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


def cmd_c(args: argparse.Namespace) -> int:
    """Print c(D) and a packing attaining it."""
    D = _load_digraph(args.file)
    if D.n == 0:
        raise PreconditionError(f"{args.file}: c(D) is undefined for the empty digraph")
    c, packing = c_number(D, args.jobs)
    _emit(args, {**packing.model_dump(mode="json"), "c": c}, [str(c), dump_json(packing)])
    return EXIT_OK


def cmd_cycles(args: argparse.Namespace) -> int:
    """Print a maximum packing of cycles through one hub."""
    D = _load_digraph(args.file)
    if not 0 <= args.hub < D.n:
        raise PreconditionError(f"hub {args.hub} outside 0..{D.n - 1}")
    packing = cycles_through(D, args.hub)
    _emit(args, packing.model_dump(mode="json"), [f"size={packing.size}", dump_json(packing)])
    return EXIT_OK


def cmd_menger(args: argparse.Namespace) -> int:
    """Print a maximum family of disjoint U-W paths and a minimum separator."""
    D = _load_digraph(args.file)
    result = max_disjoint_paths(D, args.U, args.W)
    _emit(args, result.model_dump(mode="json"),
          [f"paths={result.family.size} separator={len(result.separator.S)}",
           dump_json(result.family), dump_json(result.separator)])
    return EXIT_OK


def cmd_dense(args: argparse.Namespace) -> int:
    """Run the dense-subdigraph recursion and print its transcript."""
    D = _load_digraph(args.file)
    mode = "heuristic" if args.heuristic else "exact"
    beta, gamma = parse_rational(args.beta), parse_rational(args.gamma)
    _, witness = dense_subdigraph(D, args.r, beta, gamma, mode, args.jobs, args.seed)
    _emit(args, witness.model_dump(mode="json"),
          [f"vertices={len(witness.vertices)} steps={len(witness.steps)} "
           f"verified={str(witness.verified).lower()}",
           dump_json(witness)])
    return EXIT_OK


def cmd_linked(args: argparse.Namespace) -> int:
    """Exit 1 unless L is k-linked."""
    D = _load_digraph(args.file)
    certificate = certify_linked(D, args.L, args.k, args.jobs)
    linked = certificate.verified_upto >= certificate.k
    _emit(args, certificate.model_dump(mode="json"),
          [f"linked={str(linked).lower()} verified_upto={certificate.verified_upto}",
           dump_json(certificate)])
    return EXIT_OK if linked else EXIT_VIOLATION


def cmd_trace1(args: argparse.Namespace) -> int:
    """Replay the cycle-packing lower bound on an r-regular digraph."""
    D = _load_digraph(args.file)
    mode = "heuristic" if args.heuristic else "exact"
    report = theorem1_trace(D, mode, args.jobs, args.seed)
    _emit(args, report.model_dump(mode="json"),
          [f"hub={report.hub} rule={report.hub_rule} size={report.packing.size} "
           f"bound={report.bound} met={str(report.bound_met).lower()}",
           dump_json(report)])
    return EXIT_OK if report.bound_met else EXIT_VIOLATION


def cmd_cert2(args: argparse.Namespace) -> int:
    """Build the linked-set certificate; exit 1 when an unlinking set turns up."""
    D = _load_digraph(args.file)
    mode = "heuristic" if args.heuristic else "exact"
    report = theorem2_certificate(D, mode, args.jobs, args.seed)
    _emit(args, report.model_dump(mode="json"),
          [f"bound={report.bound} k={report.certificate.k} "
           f"verified_upto={report.certificate.verified_upto}",
           dump_json(report)])
    return EXIT_OK if report.failing_set is None else EXIT_VIOLATION


def cmd_bounds(args: argparse.Namespace) -> int:
    """Print the closed-form bounds for r."""
    report = theorem_bounds(args.r)
    low, high = report.limit_interval
    _emit(args, report.model_dump(mode="json"),
          [f"r={report.r} c_lower={report.c_lower} c_upper={report.c_upper} "
           f"c_upper_capped={report.c_upper_capped} dtw_lower={report.dtw_lower} "
           f"limit=[{low}, {high}]"])
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    """Emit a generated digraph in edge-list format."""
    if args.family == "wall":
        D, _ = cylindrical_wall(args.k)
    elif args.family == "complete":
        D = complete_biorientation(args.n)
    elif args.family == "blowup":
        D = blow_up(_load_digraph(args.file), args.b)
    elif args.family == "regular":
        D = random_regular_digraph(args.n, args.r, args.seed)
    elif args.family == "join":
        D = join_construction(_load_digraph(args.file1), _load_digraph(args.file2))
    else:
        D = reverse_join(_load_digraph(args.file))
    sys.stdout.write(format_edge_list(D))
    return EXIT_OK


def _computed_fields_match(model: BaseModel, data: Dict) -> bool:
    """Stated values of computed fields (size, bound) must equal the recomputed ones."""
    return all(data[name] == getattr(model, name)
               for name in model.model_computed_fields if name in data)


def _verify_witness(D: Digraph, data: Dict, jobs: int) -> bool:
    if not isinstance(data, dict):
        raise PreconditionError("witness must be a JSON object")
    if "family" in data and "separator" in data:
        return (_verify_witness(D, data["family"], jobs)
                and _verify_witness(D, data["separator"], jobs))
    if "packing" in data:
        return _verify_witness(D, data["packing"], jobs)
    if "certificate" in data:
        return _verify_witness(D, data["certificate"], jobs)

    if data.get("kind") == "paths":
        family = PathFamily.model_validate(data)
        return verify_path_family(D, family.U, family.W, family)
    if data.get("kind") == "separator":
        separator = Separator.model_validate(data)
        return verify_separator(D, separator.U, separator.W, separator)
    if "hub" in data:
        packing = CyclePacking.model_validate(data)
        if "c" in data and data["c"] != packing.size:
            return False
        return _computed_fields_match(packing, data) and verify_cycle_packing(D, packing)
    if "L" in data:
        # valid only when L is k-linked, which is what bound = k - 1 claims
        certificate = LinkedCertificate.model_validate(data)
        recheck = certify_linked(D, certificate.L, certificate.k, jobs)
        return (_computed_fields_match(certificate, data)
                and certificate.verified_upto == recheck.verified_upto == certificate.k)
    raise PreconditionError("unrecognised witness")


def cmd_verify(args: argparse.Namespace) -> int:
    """Check a JSON witness against a digraph.

    Accepts packings, path families, separators and linked-set certificates,
    as well as the reports printed by `menger`, `trace1` and `cert2` with --json.
    """
    D = _load_digraph(args.file)
    with open(args.witness, encoding="utf-8") as handle:
        data = json.load(handle)
    ok = _verify_witness(D, data, args.jobs)
    _emit(args, {"valid": ok}, [f"valid={str(ok).lower()}"])
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_tw(args: argparse.Namespace) -> int:
    """Exact tree-width of an undirected graph, or of the digon graph of a digraph."""
    graph = read_graph(args.file)
    F = graph if isinstance(graph, nx.Graph) else digon_graph(graph)
    tw = treewidth_small(F)
    _emit(args, {"tw": tw}, [str(tw)])
    return EXIT_OK


def cmd_girth(args: argparse.Namespace) -> int:
    """Shortest directed cycle length, `inf` when acyclic."""
    g = girth(_load_digraph(args.file))
    _emit(args, {"girth": g}, ["inf" if g is None else str(g)])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Create the argument parser; global options work before or after the subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="Random seed")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="Worker processes")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="Emit sorted-key JSON")

    parser = argparse.ArgumentParser(prog="odcycles", description="Openly disjoint cycles toolkit")
    parser.add_argument("--seed", type=int, default=config.DEFAULT_SEED, help="Random seed")
    parser.add_argument("--jobs", type=int, default=config.DEFAULT_JOBS, help="Worker processes")
    parser.add_argument("--json", action="store_true", help="Emit sorted-key JSON")
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    def add(name: str, help_text: str, handler) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help_text, parents=[common])
        sub.set_defaults(handler=handler)
        return sub

    add("c", "Compute c(D) with a witness packing", cmd_c).add_argument("file")

    cycles_parser = add("cycles", "Maximum packing at one hub", cmd_cycles)
    cycles_parser.add_argument("file")
    cycles_parser.add_argument("--hub", type=int, required=True)

    menger_parser = add("menger", "Disjoint U-W paths and a minimum separator", cmd_menger)
    menger_parser.add_argument("file")
    menger_parser.add_argument("--U", type=int, nargs="+", required=True)
    menger_parser.add_argument("--W", type=int, nargs="+", required=True)

    dense_parser = add("dense", "Cut-robust dense subdigraph", cmd_dense)
    dense_parser.add_argument("file")
    dense_parser.add_argument("--r", type=int, required=True)
    dense_parser.add_argument("--beta", required=True, help="Rational p/q")
    dense_parser.add_argument("--gamma", required=True, help="Rational p/q")
    dense_mode = dense_parser.add_mutually_exclusive_group()
    dense_mode.add_argument("--exact", action="store_true", help="Exhaustive search (default)")
    dense_mode.add_argument("--heuristic", action="store_true", help="Seeded local search")

    linked_parser = add("linked", "Check that L is k-linked", cmd_linked)
    linked_parser.add_argument("file")
    linked_parser.add_argument("--L", type=int, nargs="+", required=True)
    linked_parser.add_argument("--k", type=int, required=True)

    for name, help_text, handler in (
        ("trace1", "Replay the ceil(3r/22) cycle-packing argument", cmd_trace1),
        ("cert2", "Linked-set certificate for dtw >= floor(r/20)", cmd_cert2),
    ):
        sub = add(name, help_text, handler)
        sub.add_argument("file")
        sub.add_argument("--heuristic", action="store_true", help="Allow heuristic dense search")

    add("bounds", "Closed-form bounds for r-regular digraphs", cmd_bounds).add_argument(
        "--r", type=int, required=True
    )

    gen_parser = add("gen", "Generate a digraph in edge-list format", cmd_gen)
    families = gen_parser.add_subparsers(dest="family", required=True)
    families.add_parser("wall", parents=[common]).add_argument("k", type=int)
    families.add_parser("complete", parents=[common]).add_argument("n", type=int)
    blowup_parser = families.add_parser("blowup", parents=[common])
    blowup_parser.add_argument("file")
    blowup_parser.add_argument("b", type=int)
    regular_parser = families.add_parser("regular", parents=[common])
    regular_parser.add_argument("n", type=int)
    regular_parser.add_argument("r", type=int)
    join_parser = families.add_parser("join", parents=[common])
    join_parser.add_argument("file1")
    join_parser.add_argument("file2")
    families.add_parser("reverse-join", parents=[common]).add_argument("file")

    verify_parser = add("verify", "Verify a JSON witness against a digraph", cmd_verify)
    verify_parser.add_argument("witness")
    verify_parser.add_argument("file")

    add("tw", "Tree-width of an undirected file or of a digraph's digon graph", cmd_tw).add_argument("file")
    add("girth", "Length of a shortest directed cycle", cmd_girth).add_argument("file")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command is None:
        parser.print_help()
        return EXIT_USAGE

    try:
        config.validate()
    except ValueError as e:
        logger.error(f"Configuration error: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return args.handler(args)
    except (DigraphError, PreconditionError, BudgetExceededError) as e:
        logger.error(f"{args.command}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, json.JSONDecodeError, ValidationError) as e:
        logger.error(f"{args.command}: cannot read input: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (CertificateError, SoundnessError) as e:
        logger.error(f"{args.command}: {e}")
        print(f"failure: {e}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
