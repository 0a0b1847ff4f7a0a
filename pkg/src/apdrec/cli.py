"""Command line front end: apd, curves, reconstruct, generate, verify, stats."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .complexes import parse_complex, serialize_complex, validate_general_position
from .descriptors import betti_curve_from_apd, euler_curve_direct
from .errors import ApdrecError
from .geometry import format_rational
from .harness import GeneratorConfig, generate_complex, verify_config
from .higher import ReconstructionStats, reconstruct
from .oracle import Oracle, compute_apd, format_diagram
from .vertices import vertex_stage


def _load_complex(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_complex(handle.read())


def _parse_direction(text: str):
    return tuple(Fraction(tok) for tok in text.replace(",", " ").split())


def _cmd_apd(args) -> int:
    complex_ = _load_complex(args.complex)
    dgm = compute_apd(complex_, _parse_direction(args.dir))
    if args.dim is not None:
        dgm = dgm.restrict(args.dim)
    sys.stdout.write(format_diagram(dgm))
    return 0


def _format_value(value) -> str:
    if isinstance(value, tuple):
        return " ".join(str(x) for x in value)
    return str(value)


def _cmd_curves(args) -> int:
    complex_ = _load_complex(args.complex)
    direction = _parse_direction(args.dir)
    if args.kind == "betti":
        dgm = compute_apd(complex_, direction)
        curve = betti_curve_from_apd(dgm, args.dim if args.dim is not None else 0)
    else:
        curve = euler_curve_direct(complex_, direction)
    for height, value in curve.breakpoints:
        print(f"{format_rational(height)} {_format_value(value)}")
    for height, value in curve.decorations:
        print(f"# decoration {format_rational(height)} {_format_value(value)}")
    return 0


def _cmd_reconstruct(args) -> int:
    truth = _load_complex(args.complex)
    oracle = Oracle(truth)
    stats = ReconstructionStats()
    if args.stage == "vertices":
        points, _ = vertex_stage(oracle, strict=args.strict)
        for p in points:
            print(" ".join(format_rational(x) for x in p))
        print(f"# vertex queries: {oracle.log.count}")
        return 0
    if args.stage == "edges":
        from .edges import find_edges

        mark_points, frame = vertex_stage(oracle, strict=args.strict)
        vertex_queries = oracle.log.count
        edges = find_edges(mark_points, oracle, frame)
        for a, b in sorted(edges):
            print(f"{a} {b}")
        print(f"# vertex queries: {vertex_queries}")
        print(f"# edge queries: {oracle.log.count - vertex_queries}")
        return 0
    recovered = reconstruct(
        oracle, strict=args.strict, codim_zero=args.codim_zero, stats=stats
    )
    sys.stdout.write(serialize_complex(recovered))
    print(f"# vertex queries: {stats.vertex_queries}")
    print(f"# edge queries: {stats.edge_queries}")
    print(f"# higher-stage queries: {stats.higher_queries}")
    if stats.lifted_predicate_calls:
        print(f"# lifted queries: {sum(q for _, q in stats.lifted_predicate_calls)}")
    if args.stats:
        for k, q in stats.predicate_calls:
            print(f"# predicate dim={k} queries={q}")
        for k, q in stats.lifted_predicate_calls:
            print(f"# lifted predicate dim={k} queries={q}")
    return 0


def _cmd_generate(args) -> int:
    densities = [float(x) for x in args.density.split(",")] if args.density else [0.5]
    config = GeneratorConfig(
        ambient_dim=args.dim,
        vertex_count=args.n0,
        max_dim=args.kappa,
        densities=densities,
        seed=args.seed,
        coordinate_denominator_bound=args.denominator_bound,
        lift_general_position=args.codim_zero,
    )
    sys.stdout.write(serialize_complex(generate_complex(config)))
    return 0


def _cmd_verify(args) -> int:
    failures = 0
    for trial in range(args.trials):
        seed = args.seed + trial
        d = 3 + (trial % 3)
        kappa = min(args.kappa, d - 1)
        config = GeneratorConfig(
            ambient_dim=d,
            vertex_count=4 + (trial % 5),
            max_dim=kappa,
            densities=[0.5, 0.6, 0.6],
            seed=seed,
            lift_general_position=args.codim_zero,
        )
        report = verify_config(config, strict=args.strict, codim_zero=args.codim_zero)
        ok = report.exact_match and report.all_bounds_ok
        failures += 0 if ok else 1
        print(
            f"trial={trial} seed={seed} d={d} n0={config.vertex_count} "
            f"kappa={kappa} match={report.exact_match} "
            f"queries={report.total_queries} bounds_ok={report.all_bounds_ok}"
        )
    print(f"{args.trials - failures}/{args.trials} trials passed")
    return 0 if failures == 0 else 1


def _cmd_stats(args) -> int:
    complex_ = _load_complex(args.complex)
    print(f"ambient dimension: {complex_.ambient_dim}")
    print(f"vertices: {len(complex_.vertices)}")
    print(f"max simplex dimension: {complex_.kappa}")
    for k in range(complex_.kappa + 1):
        print(f"n_{k} = {complex_.n_k(k)}")
    print(f"total simplices: {complex_.n}")
    report = validate_general_position(complex_)
    print(f"unique e1 heights: {report.unique_e1_heights}")
    print(f"no projected collinear triple: {report.no_three_projected_collinear}")
    for witness in report.violations:
        print(f"violation: {witness}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apdrec",
        description="Augmented persistence diagrams and complex reconstruction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("apd", help="directional augmented persistence diagram")
    p.add_argument("--complex", required=True)
    p.add_argument("--dir", required=True, help="comma separated rationals")
    p.add_argument("--dim", type=int, default=None)
    p.set_defaults(func=_cmd_apd)

    p = sub.add_parser("curves", help="Betti or Euler characteristic curves")
    p.add_argument("--complex", required=True)
    p.add_argument("--dir", required=True)
    p.add_argument("--kind", choices=["betti", "euler"], required=True)
    p.add_argument("--dim", type=int, default=None)
    p.set_defaults(func=_cmd_curves)

    p = sub.add_parser("reconstruct", help="reconstruct a complex from its oracle")
    p.add_argument("--complex", required=True)
    p.add_argument("--codim-zero", action="store_true")
    p.add_argument("--stage", choices=["vertices", "edges", "full"], default="full")
    p.add_argument("--stats", action="store_true")
    p.add_argument("--no-strict", dest="strict", action="store_false")
    p.set_defaults(func=_cmd_reconstruct, strict=True)

    p = sub.add_parser("generate", help="random general-position complex")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n0", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--density", default=None, help="comma separated per dimension")
    p.add_argument("--denominator-bound", type=int, default=64)
    p.add_argument("--codim-zero", action="store_true")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("verify", help="seeded round-trip verification")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kappa", type=int, default=3)
    p.add_argument("--codim-zero", action="store_true")
    p.add_argument("--strict", action="store_true", default=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("stats", help="complex statistics and position report")
    p.add_argument("--complex", required=True)
    p.set_defaults(func=_cmd_stats)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ApdrecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
