"""Command line front end: solve boards, emit sequences, verify, serve.

Exit codes: 0 success, 1 verification failure, 2 usage or validation error.
Relative --output paths are placed under $WYTHOFF_OUTPUT_DIR when it is set.
"""

from __future__ import annotations

import argparse
import os
import sys

from .game import TerminalSpec
from .sequences import rows_to_csv, rows_to_json, sequence_rows
from .solver import CapacityError, build_table
from .verify import CHECK_NAMES, FAULTS, VerifyConfig, reports_to_jsonl, run_all

OUTPUT_DIR_ENV = "WYTHOFF_OUTPUT_DIR"


def _resolve_output(path: str) -> str:
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def _write(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    target = _resolve_output(output)
    parent = os.path.dirname(target)
    if parent:
        os.makedirs(parent, exist_ok=True)
    with open(target, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def cmd_solve(args: argparse.Namespace) -> int:
    try:
        table = build_table(TerminalSpec(args.k), args.bound)
    except (ValueError, CapacityError) as err:
        return _fail(str(err))
    if args.dump:
        _write(table.dump_text(), args.dump)
    pos = table.p_positions()
    if args.format == "json":
        _write(table.summary_json() + "\n", args.output)
    elif args.format == "csv":
        lines = ["x,y"] + [f"{p.x},{p.y}" for p in pos]
        _write("\n".join(lines) + "\n", args.output)
    else:
        lines = [f"k={args.k} bound={args.bound} p-positions={len(pos)}"]
        lines += [f"{p.x} {p.y}" for p in pos]
        _write("\n".join(lines) + "\n", args.output)
    return 0


def _sequences_text(k: int, rows) -> str:
    """Value rows with their difference rows directly beneath."""
    if not rows:
        return f"k={k} (no rows)\n"
    width = max(len(str(rows[-1].b)), len(str(rows[-1].n))) + 2
    def line(label: str, values) -> str:
        return label.ljust(5) + "".join(str(v).rjust(width) for v in values)
    return (
        "\n".join(
            [
                line("n", (r.n for r in rows)),
                line("a_n", (r.a for r in rows)),
                line("c_n", (r.c for r in rows)),
                line("b_n", (r.b for r in rows)),
                line("d_n", (r.d for r in rows)),
            ]
        )
        + "\n"
    )


def cmd_sequences(args: argparse.Namespace) -> int:
    if args.k < 1:
        return _fail(f"sequences need k >= 1, got {args.k}")
    if args.max_index < 0:
        return _fail(f"max index must be non-negative, got {args.max_index}")
    rows = sequence_rows(args.k, args.max_index)
    if args.format == "json":
        _write(rows_to_json(args.k, rows) + "\n", args.output)
    elif args.format == "csv":
        _write(rows_to_csv(rows), args.output)
    else:
        _write(_sequences_text(args.k, rows), args.output)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.fault is not None and args.fault not in FAULTS:
        return _fail(f"unknown fault fixture {args.fault!r}; known: {', '.join(sorted(FAULTS))}")
    checks = tuple(args.check) if args.check else CHECK_NAMES
    unknown = set(checks) - set(CHECK_NAMES)
    if unknown:
        return _fail(f"unknown check names: {sorted(unknown)}; known: {', '.join(CHECK_NAMES)}")
    config = VerifyConfig(
        pset_ks=tuple(args.ks) if args.ks else VerifyConfig.pset_ks,
        pset_bound=args.pset_bound,
        seq_ks=tuple(k for k in (args.ks or VerifyConfig.seq_ks) if k >= 1),
        max_index=args.max_index,
        partition_ks=tuple(k for k in (args.ks or VerifyConfig.partition_ks) if k >= 1),
        partition_bound=args.partition_bound,
        block_ks=tuple(k for k in (args.ks or VerifyConfig.block_ks) if k >= 1),
        max_block=args.max_block,
        diagonal_ks=tuple(k for k in (args.ks or VerifyConfig.diagonal_ks) if k >= 1),
        diagonal_bound=args.diagonal_bound,
        checks=checks,
    )
    reports = run_all(config, fault=args.fault)
    _write(reports_to_jsonl(reports), args.output)
    return 0 if all(r.passed for r in reports) else 1


def cmd_serve(args: argparse.Namespace) -> int:
    if not 1 <= args.port <= 65535:
        return _fail(f"port must lie in 1..65535, got {args.port}")
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wythoff",
        description="Solve, enumerate, verify, and serve terminal-region queen games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="brute-force a board and list its P-positions")
    p.add_argument("--k", type=int, default=0, help="terminal threshold (default 0)")
    p.add_argument("--bound", type=int, required=True, help="largest coordinate")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--output", help="write here instead of stdout")
    p.add_argument("--dump", help="also write the full value table to this path")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sequences", help="emit the pair sequences for one k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-index", type=int, required=True)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--output", help="write here instead of stdout")
    p.set_defaults(func=cmd_sequences)

    p = sub.add_parser("verify", help="run the cross-verification checks")
    p.add_argument("--check", action="append", metavar="NAME",
                   help="run only this check (repeatable)")
    p.add_argument("--ks", type=int, nargs="*", help="override the k grid")
    p.add_argument("--pset-bound", type=int, default=VerifyConfig.pset_bound)
    p.add_argument("--max-index", type=int, default=VerifyConfig.max_index)
    p.add_argument("--partition-bound", type=int, default=VerifyConfig.partition_bound)
    p.add_argument("--max-block", type=int, default=VerifyConfig.max_block)
    p.add_argument("--diagonal-bound", type=int, default=VerifyConfig.diagonal_bound)
    p.add_argument("--fault", metavar="NAME",
                   help="inject a named fault fixture (self-test; expect exit 1)")
    p.add_argument("--output", help="write the JSON-lines report here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("serve", help="run the HTTP play service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
