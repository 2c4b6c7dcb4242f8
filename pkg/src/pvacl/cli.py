"""Command-line driver: ``pvacl monotone|shuffles|reduce|cocompose|bracket|verify``."""
from __future__ import annotations

import argparse
import sys
import time

from . import graphs, perms, pva


def _sizes(text: str) -> list:
    try:
        vals = [int(x) for x in text.replace(",", " ").split()]
    except ValueError as exc:
        raise ValueError(f"malformed block sizes {text!r}") from exc
    return vals


def cmd_monotone(args) -> int:
    n, k = args.n, args.k
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    rows = perms.enumerate_monotone(n, k)
    for pi in rows:
        drops = "{" + ", ".join(str(d) for d in pi.drops) + "}"
        sgn = "+1" if perms.drop_sign(pi) > 0 else "-1"
        print(f"{perms.format_perm(pi.perm)}  drops {drops}  (-1)^dr {sgn}")
    print(f"# {len(rows)} monotone permutations of {n} starting at {k}")
    return 0


def cmd_shuffles(args) -> int:
    rows = perms.enumerate_shuffles(args.m, args.n)
    for s in rows:
        print(f"{perms.format_perm(s)}  sign {'+1' if perms.sign(s) > 0 else '-1'}")
    print(f"# {len(rows)} ({args.m},{args.n})-shuffles")
    return 0


def cmd_reduce(args) -> int:
    vec = graphs.parse_graph_vector(args.vector)
    coords = graphs.reduce_to_lines(vec)
    print(graphs.format_coordinates(coords))
    return 0


def cmd_cocompose(args) -> int:
    g = graphs.parse_graph(args.graph)
    sizes = _sizes(args.sizes)
    co = graphs.cocompose(g, sizes)
    q = co.quotient
    print(f"quotient: n={q.n}; edges: " + ", ".join(f"{a}>{b}" for a, b in q.edges))
    for i, b in enumerate(co.blocks, 1):
        print(f"block {i}: {graphs.format_graph(b)}")
    forest = not graphs.has_undirected_cycle(q.n, q.edges) and len({tuple(sorted(e)) for e in q.edges}) == len(q.edges)
    print(f"quotient is a forest: {'yes' if forest else 'no'}")
    for k in range(1, g.n + 1):
        ext = sorted(graphs.externally_connected(g, sizes, k))
        if ext:
            print(f"X({k}) = {{{', '.join(str(j) for j in ext)}}}")
    return 0


def cmd_bracket(args) -> int:
    from .parse import parse_diffpoly
    from .suites import load_structure
    P = load_structure(args.structure)
    a = parse_diffpoly(args.a, P.generators)
    b = parse_diffpoly(args.b, P.generators)
    print(pva.lambda_bracket(P, a, b) if (a and b) else "0")
    return 0


def cmd_verify(args) -> int:
    from .suites import RunConfig, load_structure, run_suite
    load_structure(args.structure)
    cfg = RunConfig(seed=args.seed, max_degree=args.max_degree, max_order=args.max_order,
                    max_arity=args.max_arity, max_tuples=args.max_tuples,
                    structure=args.structure, n=args.n or 0)
    start = time.perf_counter()
    report = run_suite(args.suite, cfg, jobs=args.jobs)
    text = report.to_text()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
    # wall time stays out of the report so that reruns are byte-identical
    print(f"{args.suite}: {'PASS' if report.passed else 'FAIL'} in {time.perf_counter() - start:.1f}s",
          file=sys.stderr)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    from .suites import SUITES
    p = argparse.ArgumentParser(prog="pvacl", description="Classical operad, PVA and Harrison cochain checks.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("monotone", help="list monotone permutations of n starting at k")
    s.add_argument("n", type=int)
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_monotone)

    s = sub.add_parser("shuffles", help="list (m,n)-shuffles")
    s.add_argument("m", type=int)
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_shuffles)

    s = sub.add_parser("reduce", help="line-basis coordinates of a graph vector")
    s.add_argument("vector", help='e.g. "(n=3; edges: 1>2, 2>3) - 2*(n=3; edges: 2>1)"')
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("cocompose", help="split a graph along consecutive blocks")
    s.add_argument("graph", help='e.g. "n=4; edges: 1>3, 2>4"')
    s.add_argument("--sizes", required=True, help="block sizes, e.g. 2,2")
    s.set_defaults(func=cmd_cocompose)

    s = sub.add_parser("bracket", help="evaluate a lambda-bracket")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--structure", default="gfz", help="shipped name or .json descriptor")
    s.set_defaults(func=cmd_bracket)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("suite", choices=SUITES)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-degree", type=int, default=2)
    s.add_argument("--max-order", type=int, default=2)
    s.add_argument("--max-arity", type=int, default=3)
    s.add_argument("--max-tuples", type=int, default=16)
    s.add_argument("--structure", default="gfz", help="shipped name or .json descriptor")
    s.add_argument("--n", type=int, default=0, help="size for the monotone and line suites")
    s.add_argument("--jobs", type=int, default=1, help="worker processes")
    s.add_argument("--output", help="write the text report here instead of stdout")
    s.add_argument("--json", help="also write a JSON mirror of the report")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        msg = str(exc) if isinstance(exc, OSError) else (exc.args[0] if exc.args else str(exc))
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
