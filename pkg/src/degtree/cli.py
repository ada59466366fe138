"""Command-line interface.

Exit codes: 0 success, 1 internal error, 2 usage or bad input, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .errors import InfeasibleError, InvalidInputError, ResourceLimitError
from .fileio import atomic_write, read_points, write_points, write_tree
from .instances import FAMILIES, InstanceSpec, generate, gen_random_uniform
from .mst import compute_mst
from .oracle import optimal_degree_k_tree
from .render import render_svg
from .report import METHODS, evaluate_instance, run_method

EXIT_OK, EXIT_INTERNAL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _cmd_mst(args) -> int:
    ps, _ = read_points(args.points)
    write_tree(args.out, compute_mst(ps))
    return EXIT_OK


def _tree_method(args) -> str:
    if args.highdim_mode is not None:
        if args.degree != 3:
            raise UsageError("--highdim-mode only applies to --degree 3")
        if args.variant == "preorder":
            raise UsageError("--variant preorder cannot be combined with --highdim-mode")
        return f"tree3_highdim_{args.highdim_mode}"
    if args.degree == 4:
        if args.variant == "preorder":
            raise UsageError("--variant preorder only applies to --degree 3")
        return "tree4"
    return "tree3_preorder" if args.variant == "preorder" else "tree3_strict"


def _cmd_tree(args) -> int:
    method = _tree_method(args)
    if args.root is not None and args.try_all_roots:
        raise UsageError("--root and --try-all-roots are mutually exclusive")
    if args.overlay_mst and not args.render:
        raise UsageError("--overlay-mst requires --render")
    ps, file_root = read_points(args.points)
    if args.render and ps.dim != 2:
        raise UsageError(f"--render is planar only; input has dimension {ps.dim}")
    root = args.root if args.root is not None else file_root
    if args.try_all_roots:
        strategy, root = "try_all", None
    elif root is not None:
        strategy = "given"
    else:
        strategy = "default"
    mst = compute_mst(ps)
    t = run_method(method, ps, mst, strategy, root)
    write_tree(args.out, t.tree)
    if args.report:
        rep = evaluate_instance(ps, [method], None, strategy, root, instance_id=str(args.points), mst=mst)
        atomic_write(args.report, rep.to_json())
    if args.render:
        atomic_write(args.render, render_svg(ps, t.tree, mst if args.overlay_mst else None))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    ps, _ = read_points(args.points)
    res = optimal_degree_k_tree(ps, args.k)
    if args.out:
        write_tree(args.out, res.best_tree)
    if args.report:
        rep = evaluate_instance(ps, [], args.k, instance_id=str(args.points))
        atomic_write(args.report, rep.to_json())
    if not args.out and not args.report:
        sys.stdout.write(f"k={args.k} weight={res.best_weight:.12g} trees={res.trees_enumerated}\n")
    return EXIT_OK


def _cmd_report(args) -> int:
    ps, file_root = read_points(args.points)
    root = args.root if args.root is not None else file_root
    strategy = "try_all" if args.try_all_roots else ("given" if root is not None else "default")
    rep = evaluate_instance(ps, args.methods, args.oracle_k, strategy, root, instance_id=str(args.points))
    text = rep.to_json()
    if args.out:
        atomic_write(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


_GEN_PARAMS = ("n", "d", "seed", "levels", "unit", "rows", "cols", "jitter", "radius")


def _cmd_gen(args) -> int:
    if args.config:
        with open(args.config) as fh:
            spec = InstanceSpec.from_dict(json.load(fh))
    else:
        if args.family is None:
            raise UsageError("gen needs a family or --config")
        family = "staircase_bad" if args.family == "staircase" else args.family
        family = "random_uniform" if family == "random" else family
        params = {k: getattr(args, k) for k in _GEN_PARAMS if getattr(args, k) is not None}
        spec = InstanceSpec(family, params)
    ps, root = generate(spec)
    write_points(args.out, ps, root, comments=[json.dumps(spec.to_dict(), sort_keys=True)])
    return EXIT_OK


def _cmd_bench(args) -> int:
    sys.stdout.write("n      mst_s     tree3_s   tree4_s\n")
    for n in args.sizes:
        ps = gen_random_uniform(n, 2, args.seed)
        t0 = time.perf_counter()
        mst = compute_mst(ps)
        t1 = time.perf_counter()
        run_method("tree3_strict", ps, mst)
        t2 = time.perf_counter()
        run_method("tree4", ps, mst)
        t3 = time.perf_counter()
        sys.stdout.write(f"{n:<6d} {t1 - t0:<9.4f} {t2 - t1:<9.4f} {t3 - t2:<9.4f}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="degtree", description="Low-weight degree-3/4 Euclidean spanning trees.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("mst", help="write the Euclidean MST of a point file")
    s.add_argument("points")
    s.add_argument("out")
    s.set_defaults(func=_cmd_mst)

    s = sub.add_parser("tree", help="build a degree-3 or degree-4 tree")
    s.add_argument("points")
    s.add_argument("out")
    s.add_argument("--degree", type=int, choices=(3, 4), default=3)
    s.add_argument("--variant", choices=("strict", "preorder"), default=None)
    s.add_argument("--root", type=int, default=None, help="leaf to root the MST at")
    s.add_argument("--try-all-roots", action="store_true")
    s.add_argument("--highdim-mode", choices=("permute", "group3"), default=None)
    s.add_argument("--report", metavar="JSON")
    s.add_argument("--render", metavar="SVG")
    s.add_argument("--overlay-mst", action="store_true", help="draw the MST dashed in the SVG")
    s.set_defaults(func=_cmd_tree)

    s = sub.add_parser("oracle", help="exhaustive optimum degree-k tree (small n)")
    s.add_argument("points")
    s.add_argument("--k", type=int, default=3)
    s.add_argument("--out", metavar="TREE")
    s.add_argument("--report", metavar="JSON")
    s.set_defaults(func=_cmd_oracle)

    s = sub.add_parser("report", help="JSON ratio report for several methods")
    s.add_argument("points")
    s.add_argument("--methods", nargs="+", choices=list(METHODS), default=["tree3_strict", "tree4"])
    s.add_argument("--oracle-k", type=int, default=None)
    s.add_argument("--root", type=int, default=None)
    s.add_argument("--try-all-roots", action="store_true")
    s.add_argument("--out", metavar="JSON")
    s.set_defaults(func=_cmd_report)

    s = sub.add_parser("gen", help="generate an instance point file")
    s.add_argument("family", nargs="?", choices=FAMILIES + ("staircase", "random"))
    s.add_argument("out")
    s.add_argument("--config", metavar="JSON", help="instance spec {'family': ..., 'params': {...}}")
    for name in ("n", "d", "seed", "levels", "rows", "cols"):
        s.add_argument(f"--{name}", type=int, default=None)
    for name in ("unit", "jitter", "radius"):
        s.add_argument(f"--{name}", type=float, default=None)
    s.set_defaults(func=_cmd_gen)

    s = sub.add_parser("bench", help="informational wall-clock scaling on random planar points")
    s.add_argument("--sizes", type=int, nargs="+", default=[250, 500, 1000, 2000])
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=_cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"degtree: error: {exc}\n")
        return EXIT_USAGE
    except ResourceLimitError as exc:
        sys.stderr.write(f"degtree: {exc}\n")
        return EXIT_CAP
    except (InvalidInputError, InfeasibleError, OSError) as exc:
        sys.stderr.write(f"degtree: {exc}\n")
        return EXIT_USAGE
    except Exception as exc:  # pragma: no cover
        sys.stderr.write(f"degtree: internal error: {exc!r}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
