"""Command-line entry point: ``pafp <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from .core import BudgetExceeded, InstanceError, PreconditionError, check_path, read_instance, serialize_instance
from .decomposition import build_bfs_bags
from .generators import InfeasibleError, gen_backward_augmented, gen_gmo, gen_ladder, parse_dimacs_cnf
from .layering import exact_length_profile, is_dag, layer_profile, union_digraph
from .normalize import normalize
from .oracle import DEFAULT_BUDGET, count_paths, solve_exact
from .solver_bfsw2k import DEFAULT_MAX_K, Bfsw2kSolver
from .solver_elw2 import Elw2Solver

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION = 0, 2, 3


class UsageError(Exception):
    pass


def measure(instance) -> dict:
    graph = instance.graph
    dag = is_dag(graph)
    profile = layer_profile(graph, instance.source)
    union_profile = layer_profile(union_digraph(instance), instance.source)
    return {
        "is_dag": dag,
        "n": instance.n,
        "m": len(graph.arcs),
        "f": len(instance.pairs),
        "bfsw_input": profile.bfsw,
        "elw_input": exact_length_profile(graph, instance.source).elw if dag else None,
        "backward_input": len(profile.backward),
        "bfsw_union": union_profile.bfsw,
        "backward_union": len(union_profile.backward),
        "reachable_count": len(profile.reachable),
    }


def choose_algorithm(instance, max_k: int) -> str:
    if not is_dag(instance.graph):
        return "oracle"
    if exact_length_profile(instance.graph, instance.source).elw <= 2:
        return "elw2"
    profile = layer_profile(instance.graph, instance.source)
    if profile.bfsw <= 2 and len(profile.backward) <= max_k:
        return "bfsw2k"
    return "oracle"


def cmd_solve(args) -> int:
    instance = read_instance(args.file)
    algo = choose_algorithm(instance, args.max_k) if args.algo == "auto" else args.algo
    if algo == "oracle":
        path = solve_exact(instance, args.budget)
    elif algo == "elw2":
        path = Elw2Solver(instance, args.threads).solve()
    else:
        path = Bfsw2kSolver(instance, args.max_k, args.threads, short_circuit=True).solve()
    print("NO" if path is None else "YES " + " ".join(map(str, path)))
    return EXIT_OK


def cmd_verify(args) -> int:
    instance = read_instance(args.file)
    try:
        candidate = [int(x) for x in args.path.split()]
    except ValueError:
        raise UsageError(f"--path must be space-separated integers, got {args.path!r}") from None
    report = check_path(instance, candidate)
    print(json.dumps(report.to_dict()) if args.json else str(report))
    return EXIT_OK


def cmd_measure(args) -> int:
    values = measure(read_instance(args.file))
    if args.json:
        print(json.dumps(values))
    else:
        for key, value in values.items():
            if value is not None:
                print(f"{key}: {str(value).lower() if isinstance(value, bool) else value}")
    return EXIT_OK


def cmd_normalize(args) -> int:
    norm = normalize(read_instance(args.file))
    text = serialize_instance(norm.instance)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.map:
        lines = [f"source_prime {norm.source_prime}"]
        lines += [f"r{i} {v}" for i, v in enumerate(norm.r_list, start=1)]
        lines += [f"p{j} {v}" for j, v in enumerate(norm.spine, start=1)]
        lines += [f"w{i} {v}" for i, v in enumerate(norm.detours, start=1)]
        lines += [f"orig{v} {old}" for v, old in sorted(norm.to_input.items())]
        lines += [f"level{v} {'inf' if lv is None else lv}" for v, lv in sorted(norm.level.items())]
        with open(args.map, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_decompose(args) -> int:
    decomp = build_bfs_bags(read_instance(args.file))
    for d, bag in enumerate(decomp.bags):
        print(f"bag {d}: " + " ".join(map(str, sorted(bag))))
    print(f"width: {decomp.width}")
    return EXIT_OK


def cmd_count_paths(args) -> int:
    print(count_paths(read_instance(args.file)))
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.family == "gmo":
        with open(args.cnf, encoding="utf-8") as fh:
            instance = gen_gmo(parse_dimacs_cnf(fh.read()))
    elif args.family == "ladder":
        instance = gen_ladder(args.len, args.density, args.seed)
    else:
        instance = gen_backward_augmented(args.len, args.k, args.seed, args.density)
    text = serialize_instance(instance)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pafp", description="Paths avoiding forbidden pairs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide an instance and print a witness path")
    p.add_argument("file")
    p.add_argument("--algo", choices=["auto", "oracle", "elw2", "bfsw2k"], default="auto")
    p.add_argument("--max-k", type=int, default=DEFAULT_MAX_K)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a candidate path")
    p.add_argument("file")
    p.add_argument("--path", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("measure", help="report widths and backward-arc counts")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("normalize", help="emit the BFS-width-2 normal form")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.add_argument("--map", help="write the vertex bookkeeping to this file")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("decompose", help="print the BFS-layer path decomposition")
    p.add_argument("file")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("count-paths", help="count source-target paths of a DAG")
    p.add_argument("file")
    p.set_defaults(func=cmd_count_paths)

    p = sub.add_parser("gen", help="generate instances")
    gen = p.add_subparsers(dest="family", required=True)
    g = gen.add_parser("gmo")
    g.add_argument("cnf")
    g = gen.add_parser("ladder")
    g.add_argument("--len", type=int, required=True)
    g.add_argument("--density", type=float)
    g.add_argument("--seed", type=int, default=0)
    g = gen.add_parser("backward")
    g.add_argument("--len", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--density", type=float, default=0.5)
    for g in gen.choices.values():
        g.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InstanceError, UsageError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (PreconditionError, BudgetExceeded, InfeasibleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


def main() -> None:
    sys.exit(run())
