"""Command-line entry point: ``critgraph <verb> ...``.

Exit codes: 0 success, 1 verification failure, 2 infeasible parameters,
3 solver budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import alpha as alpha_mod
from .bench import greedy_solve, load_instances, parse_import, run_benchmark, verify_bundle
from .circulant import default_workers, format_catalog, search_critical
from .criticality import Verdict, is_critical
from .dimacs import DimacsError, read_dimacs
from .generator import (
    GeneratorConfig,
    InfeasibleParameters,
    generate_hard,
    generate_structureless,
    generate_witzel,
    load_bundle,
)
from .graph import is_connected
from .solver import SolveBudget, mvc

OK, VERIFY_FAIL, INFEASIBLE, BUDGET = 0, 1, 2, 3


def _range(text: str) -> tuple[int, int]:
    try:
        a, b = text.split("..")
        return int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None


def _budget(args) -> SolveBudget:
    return SolveBudget(max_nodes=args.max_nodes, max_time=args.max_time)


def _emit(text: str, out: str | None, suffix: str) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out + suffix).write_text(text)


def cmd_gen(args) -> int:
    cfg = GeneratorConfig(n=args.n, m=args.m, k=args.k, ell=args.ell, seed=args.seed,
                          n_bases=args.bases)
    for i in range(args.count):
        b = generate_hard(GeneratorConfig(**{**cfg.__dict__, "seed": cfg.seed + i}))
        prefix = args.out if args.count == 1 else f"{args.out}-{i:03d}"
        b.write(prefix)
        if args.trace:
            Path(prefix + ".trace").write_text("\n".join(b.traces))
    return OK


def cmd_gen_baseline(args) -> int:
    if args.kind == "structureless":
        if args.n is None or args.m is None or args.n_c is None:
            raise InfeasibleParameters("structureless needs --n, --m and --n-c")
        b = generate_structureless(args.n, args.m, args.n_c, args.seed)
    else:
        if args.cliques is None or args.clique_size is None or args.m is None:
            raise InfeasibleParameters("witzel needs --cliques, --clique-size and --m")
        b = generate_witzel(args.cliques, args.clique_size, args.m, args.seed)
    b.write(args.out)
    return OK


def cmd_solve(args) -> int:
    g = read_dimacs(args.graph)
    if args.algo == "greedy":
        cover, steps = greedy_solve(g)
        status = "heuristic"
    else:
        res = mvc(g, _budget(args))
        if not res.exact:
            sys.stderr.write(f"budget exhausted, best cover {res.size}\n")
            _emit(f"budget_exceeded {res.size} " + " ".join(str(v + 1) for v in sorted(res.cover)) + "\n",
                  args.out, ".cover")
            return BUDGET
        cover, steps, status = res.cover, res.stats.nodes, "exact"
    line = f"{status} {len(cover)} " + " ".join(str(v + 1) for v in sorted(cover)) + "\n"
    _emit(line, args.out, ".cover")
    return OK


def cmd_check_critical(args) -> int:
    g = read_dimacs(args.graph)
    if not is_connected(g):
        sys.stderr.write("error: graph is disconnected; check each component separately\n")
        return INFEASIBLE
    v = is_critical(g, _budget(args))
    line = f"{v.status.value} cover={v.base_cover_size}"
    if v.witness_edge is not None:
        u, w = v.witness_edge
        line += f" witness={u + 1}-{w + 1}"
    print(line)
    return BUDGET if v.status is Verdict.UNKNOWN else OK


def cmd_circulant_search(args) -> int:
    workers = args.workers if args.workers is not None else default_workers()
    rows = search_critical(args.degree, args.n, args.offsets,
                           SolveBudget(max_nodes=args.max_nodes, max_time=args.max_time),
                           workers=workers, critical_only=not args.all)
    _emit(format_catalog(rows), args.out, ".csv")
    crit = sum(r.verdict is Verdict.CRITICAL for r in rows)
    unknown = sum(r.verdict is Verdict.UNKNOWN for r in rows)
    sys.stderr.write(f"critical={crit} unknown={unknown}\n")
    return BUDGET if unknown else OK


def cmd_alpha(args) -> int:
    a = alpha_mod.lexmin_alpha(args.n, args.c)
    parts = " ".join(f"a_{i}={k}" for i, k in a.entries) or "(empty)"
    print(f"{parts} edges_lb={alpha_mod.alpha_edge_lower_bound(a)} "
          f"edges_max={alpha_mod.max_edges(args.n, args.c) if args.n > args.c else 0}")
    return OK


def cmd_verify(args) -> int:
    status = OK
    for prefix in args.bundle:
        rep = verify_bundle(load_bundle(prefix), _budget(args), exact_limit=args.exact_limit)
        sys.stdout.write(f"{prefix}: {rep.format()}")
        if not rep.ok:
            status = VERIFY_FAIL
    return status


def cmd_bench(args) -> int:
    instances = load_instances(args.bundle)
    imported = parse_import(Path(args.import_file).read_text()) if args.import_file else None
    algo = "import" if imported is not None else args.algo
    report = run_benchmark(instances, algo, _budget(args), imported)
    _emit(report.to_csv(), args.out, ".csv")
    sys.stderr.write(report.summary())
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="critgraph", description="Vertex-cover criticality toolkit.")
    sub = p.add_subparsers(dest="verb", required=True)

    def solver_flags(sp):
        sp.add_argument("--max-nodes", type=int, default=10**8)
        sp.add_argument("--max-time", type=float, default=60.0, help="seconds")

    sp = sub.add_parser("gen", help="hard instances with a hidden optimal cover")
    sp.add_argument("--n", type=int, required=True)
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--m", type=int)
    g.add_argument("--k", type=float, help="m = round(n**k)")
    sp.add_argument("--ell", type=int)
    sp.add_argument("--bases", type=int, default=2)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=1, help="bundles with seeds seed, seed+1, ...")
    sp.add_argument("--trace", action="store_true", help="also write base-graph traces")
    sp.add_argument("--out", required=True, help="path prefix")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("gen-baseline", help="structureless or clique-based baselines")
    sp.add_argument("kind", choices=("structureless", "witzel"))
    sp.add_argument("--n", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--n-c", type=int)
    sp.add_argument("--cliques", type=int)
    sp.add_argument("--clique-size", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_gen_baseline)

    sp = sub.add_parser("solve", help="minimum (exact) or greedy vertex cover")
    sp.add_argument("graph")
    sp.add_argument("--algo", choices=("exact", "greedy"), default="exact")
    sp.add_argument("--out")
    solver_flags(sp)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("check-critical", help="is every edge critical?")
    sp.add_argument("graph")
    solver_flags(sp)
    sp.set_defaults(func=cmd_check_critical)

    sp = sub.add_parser("circulant-search", help="critical circulants of degree 4 or 6")
    sp.add_argument("--degree", type=int, choices=(4, 6), required=True)
    sp.add_argument("--n", type=_range)
    sp.add_argument("--offsets", type=_range)
    sp.add_argument("--workers", type=int, help="default: $CRITGRAPH_WORKERS or 1")
    sp.add_argument("--all", action="store_true", help="also list reducible tuples")
    sp.add_argument("--out")
    sp.add_argument("--max-nodes", type=int, default=10**8)
    sp.add_argument("--max-time", type=float, default=30.0, help="seconds per tuple")
    sp.set_defaults(func=cmd_circulant_search)

    sp = sub.add_parser("alpha", help="cheapest clique vector for (n, c)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--c", type=int, required=True)
    sp.set_defaults(func=cmd_alpha)

    sp = sub.add_parser("verify", help="check bundles against their sidecars")
    sp.add_argument("bundle", nargs="+", help="bundle path prefixes")
    sp.add_argument("--exact-limit", type=int, default=60, help="largest n for the minimality check")
    solver_flags(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bench", help="run a solver over bundles and write a CSV report")
    sp.add_argument("bundle", nargs="+")
    sp.add_argument("--algo", choices=("exact", "greedy"), default="greedy")
    sp.add_argument("--import-file", help="external results, 'id size v1 .. vk' per line")
    sp.add_argument("--out")
    solver_flags(sp)
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InfeasibleParameters, alpha_mod.InfeasibleBudget) as exc:
        sys.stderr.write(f"infeasible: {exc}\n")
        return INFEASIBLE
    except (DimacsError, FileNotFoundError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return VERIFY_FAIL


if __name__ == "__main__":
    sys.exit(main())
