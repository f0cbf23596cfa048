"""Command-line front end.

Exit codes: 0 feasible/valid, 1 infeasible/invalid, 2 input error,
3 resource limit. The oracle node budget resolves as --max-nodes flag,
then the TOMO_MAX_NODES environment variable, then the library default.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .errors import InputError, LimitError
from .formats import (
    parse_instance,
    parse_solution,
    parse_three_color,
    render_ascii,
    render_pgm,
    serialize_instance,
    write_solution,
)
from .generate import gen_planted
from .grid import RecInstance, WRecInstance
from .oracle import OracleLimits, Status, oracle_enumerate, oracle_solve
from .reductions import invert_colors, one_pad, pad_to_k, three_color_to_rec, zero_pad
from .solvers import solve
from .verify import verify_rec, verify_wrec

_DEFAULT_MAX_NODES = 10_000_000
_DEFAULT_MAX_CELLS = 36


def _read(path: str) -> str:
    return Path(path).read_text(encoding="ascii")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="ascii")


def _node_budget(args: argparse.Namespace) -> int:
    if args.max_nodes is not None:
        return args.max_nodes
    env = os.environ.get("TOMO_MAX_NODES")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"TOMO_MAX_NODES must be an integer, got {env!r}") from None
    return _DEFAULT_MAX_NODES


def _limits(args: argparse.Namespace) -> OracleLimits:
    return OracleLimits(max_cells=args.max_cells, max_nodes=_node_budget(args))


def _cmd_solve(args: argparse.Namespace) -> int:
    inst = parse_instance(_read(args.file))
    if isinstance(inst, WRecInstance):
        if args.method not in ("auto", "oracle"):
            raise InputError(f"method {args.method!r} applies to REC instances only")
        outcome = oracle_solve(inst, _limits(args))
        status, image, method = outcome.status, outcome.image, "oracle"
    else:
        result = solve(inst, args.method, _limits(args))
        status, image, method = result.status, result.image, result.method.value
    if status is Status.FEASIBLE:
        _emit(write_solution(image), args.out)
        print(f"FEASIBLE method={method}", file=sys.stderr)
        return 0
    if status is Status.INFEASIBLE:
        print("INFEASIBLE")
        return 1
    print("LIMIT: search budget exhausted; raise --max-nodes or --max-cells")
    return 3


def _cmd_verify(args: argparse.Namespace) -> int:
    inst = parse_instance(_read(args.instance))
    x = parse_solution(_read(args.solution))
    if isinstance(inst, RecInstance):
        report = verify_rec(inst, x)
    else:
        report = verify_wrec(inst, x)
    if report.ok:
        print("VALID")
        return 0
    for violation in report:
        print(violation)
    return 1


def _cmd_oracle(args: argparse.Namespace) -> int:
    inst = parse_instance(_read(args.file))
    limits = _limits(args)
    if args.enumerate is None:
        outcome = oracle_solve(inst, limits)
        if outcome.status is Status.FEASIBLE:
            _emit(write_solution(outcome.image), args.out)
            return 0
        if outcome.status is Status.INFEASIBLE:
            print("INFEASIBLE")
            return 1
        print("LIMIT: search budget exhausted; raise --max-nodes or --max-cells")
        return 3
    result = oracle_enumerate(inst, limits, args.enumerate)
    chunks = [write_solution(image) for image in result.images]
    suffix = " (truncated)" if result.truncated else ""
    chunks.append(f"COUNT {len(result.images)}{suffix}\n")
    _emit("".join(chunks), args.out)
    if result.limit_hit:
        print("LIMIT: search budget exhausted before the space was covered", file=sys.stderr)
        return 3
    if result.images:
        return 0
    return 1


def _cmd_reduce(args: argparse.Namespace) -> int:
    tc = parse_three_color(_read(args.file))
    _emit(serialize_instance(three_color_to_rec(tc)), args.out)
    return 0


def _cmd_transform(args: argparse.Namespace) -> int:
    inst = parse_instance(_read(args.file))
    if args.kind == "invert":
        if not isinstance(inst, WRecInstance):
            raise InputError("invert applies to WREC instances")
        out = invert_colors(inst)
    elif args.kind == "pad-k":
        if not isinstance(inst, RecInstance):
            raise InputError("pad-k applies to REC instances")
        out = pad_to_k(inst, args.k)
    else:
        if not isinstance(inst, WRecInstance):
            raise InputError(f"{args.kind} applies to WREC instances")
        out = (zero_pad if args.kind == "zero-pad" else one_pad)(inst, args.k)
    _emit(serialize_instance(out), args.out)
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    inst, witness = gen_planted(
        args.m, args.n, args.k, args.nu, args.t, args.density, args.seed
    )
    if args.out_prefix is None:
        sys.stdout.write(serialize_instance(inst))
        return 0
    instance_path = Path(args.out_prefix + ".rec")
    solution_path = Path(args.out_prefix + ".sol")
    instance_path.write_text(serialize_instance(inst), encoding="ascii")
    solution_path.write_text(write_solution(witness), encoding="ascii")
    print(f"wrote {instance_path} and {solution_path}", file=sys.stderr)
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    x = parse_solution(_read(args.file))
    if args.format == "ascii":
        _emit(render_ascii(x), args.out)
        return 0
    data = render_pgm(x)
    if args.out is None:
        sys.stdout.buffer.write(data)
    else:
        Path(args.out).write_bytes(data)
    return 0


def _add_limit_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--max-nodes", type=int, default=None, help="oracle node budget"
    )
    parser.add_argument(
        "--max-cells",
        type=int,
        default=_DEFAULT_MAX_CELLS,
        help="largest grid area the oracle will search",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wintomo",
        description="Reconstruct binary images from row/column sums under "
        "block, window, and pattern constraints.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("file")
    p.add_argument(
        "--method",
        choices=["auto", "rec1", "k10", "kv2", "oracle"],
        default="auto",
    )
    p.add_argument("--out", help="write the solution here instead of stdout")
    _add_limit_flags(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check a solution file against an instance")
    p.add_argument("instance")
    p.add_argument("solution")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="run the exhaustive solver")
    p.add_argument("file")
    p.add_argument(
        "--enumerate", type=int, metavar="CAP", help="list all solutions up to CAP"
    )
    p.add_argument("--out")
    _add_limit_flags(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("reduce", help="encode another problem as an instance")
    rsub = p.add_subparsers(dest="kind", required=True)
    r = rsub.add_parser("three-color", help="encode a 3COLOR file as a REC instance")
    r.add_argument("file")
    r.add_argument("--out")
    r.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("transform", help="rewrite an instance")
    tsub = p.add_subparsers(dest="kind", required=True)
    t = tsub.add_parser("invert", help="swap the roles of 0 and 1 (WREC)")
    t.add_argument("file")
    t.add_argument("--out")
    t.set_defaults(func=_cmd_transform)
    for kind, title in (
        ("zero-pad", "grow WREC windows, padding with 0"),
        ("one-pad", "grow WREC windows, padding with 1"),
        ("pad-k", "grow REC blocks, padding with 0"),
    ):
        t = tsub.add_parser(kind, help=title)
        t.add_argument("file")
        t.add_argument("--k", type=int, required=True, help="target window side")
        t.add_argument("--out")
        t.set_defaults(func=_cmd_transform)

    p = sub.add_parser("gen", help="generate a feasible instance with a witness")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--nu", type=int, default=1)
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-prefix", help="write PREFIX.rec and PREFIX.sol")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("render", help="draw a solution file")
    p.add_argument("file")
    p.add_argument("--format", choices=["ascii", "pgm"], default="ascii")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
