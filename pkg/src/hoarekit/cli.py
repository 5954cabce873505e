"""Command line: check proof scripts, run programs, format files.

Exit codes: 0 all good, 1 a semantic failure (failed proof, runtime error),
2 a syntactic or IO failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .interp import RunError, execute
from .surface import (
    ParseError, Style, check_script, parse_formula, parse_program, parse_script,
    print_formula, print_program, print_script,
)
from .lint import quantified_reads
from .syntax import Assert, IfElse, Mode, Seq, While, is_var_name

OK, FAILED, BAD_INPUT = 0, 1, 2


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits on its own; route usage errors through exit code 2 without SystemExit surprises
    def error(self, message):
        raise _Usage(message)


def _style_default() -> str:
    return os.environ.get("HOAREKIT_STYLE", "unicode").lower()


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _diag(msg: str) -> None:
    print(msg, file=sys.stderr)


def cmd_check(args) -> int:
    status = OK
    for path in args.files:
        try:
            items = parse_script(_read(path))
        except OSError as e:
            _diag(f"{path}: {e.strerror or e}")
            status = BAD_INPUT
            continue
        except (ParseError, UnicodeDecodeError) as e:
            _diag(f"{path}:{e}")
            status = BAD_INPUT
            continue
        report = check_script(items, Mode(args.mode), Style(args.print))
        if report.render():
            print(report.render())
        for w in report.warnings:
            _diag(f"{path}: warning: {w}")
        if not report.ok and status == OK:
            status = FAILED
    return status


def _binding(text: str) -> tuple[str, int]:
    name, sep, value = (part.strip() for part in text.partition("="))
    if not sep or not value.isdigit() or not is_var_name(name):
        raise _Usage(f"--set expects VAR=NAT, got {text!r}")
    return name, int(value)


def _quantified_reads(c) -> list[str]:
    out: list[str] = []
    stack = [c]
    while stack:
        c = stack.pop()
        match c:
            case Seq(a, b):
                stack.extend((b, a))
            case IfElse(b, t, e):
                out += quantified_reads(b)
                stack.extend((e, t))
            case While(b, body):
                out += quantified_reads(b)
                stack.append(body)
            case Assert(p, body, q):
                out += quantified_reads(p) + quantified_reads(q)
                stack.append(body)
    return list(dict.fromkeys(out))


def cmd_run(args) -> int:
    try:
        prog = parse_program(_read(args.file))
        ctx = dict(_binding(b) for b in args.set)
        if args.assert_:
            pre, post = (parse_formula(f) for f in args.assert_)
            prog = Assert(pre, prog, post)
    except OSError as e:
        _diag(f"{args.file}: {e.strerror or e}")
        return BAD_INPUT
    except (ParseError, UnicodeDecodeError) as e:
        _diag(f"{args.file}:{e}")
        return BAD_INPUT
    for v in _quantified_reads(prog):
        _diag(f"{args.file}: warning: quantifiers are erased at run time; {v} is read from the context")
    try:
        out = execute(ctx, prog, max_steps=args.max_steps)
    except RunError as e:
        _diag(str(e))
        return FAILED
    for name in sorted(out):
        print(f"{name}={out[name]}")
    return OK


def format_text(text: str, suffix: str, style) -> str:
    if suffix == ".imp":
        return print_program(parse_program(text), style) + "\n"
    if suffix == ".prf":
        return print_script(parse_script(text), style)
    lines = []
    for line in text.splitlines():
        body = line.split("#", 1)[0]
        lines.append(print_formula(parse_formula(body), style) if body.strip() else "")
    return "\n".join(lines).strip("\n") + "\n"


def cmd_fmt(args) -> int:
    try:
        text = _read(args.file)
        out = format_text(text, Path(args.file).suffix, Style(args.style))
    except OSError as e:
        _diag(f"{args.file}: {e.strerror or e}")
        return BAD_INPUT
    except (ParseError, UnicodeDecodeError) as e:
        _diag(f"{args.file}:{e}")
        return BAD_INPUT
    sys.stdout.write(out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    styles = [s.value for s in Style]
    p = _Parser(prog="hoarekit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="check .prf proof and triple scripts")
    c.add_argument("files", nargs="+", help=".prf scripts, checked in order")
    c.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.DEFAULT.value,
                   help="strict admits only equivalence rules under paths")
    c.add_argument("--print", choices=styles, default=None, help="symbol style of the report")
    c.set_defaults(func=cmd_check)

    r = sub.add_parser("run", help="execute an .imp program")
    r.add_argument("file", help=".imp program")
    r.add_argument("--set", action="append", default=[], metavar="VAR=NAT",
                   help="initial binding; repeatable")
    r.add_argument("--max-steps", type=int, default=1_000_000, help="step budget (default 1000000)")
    r.add_argument("--assert", dest="assert_", nargs=2, metavar=("PRE", "POST"),
                   help="wrap the program in assert {PRE} {...} {POST}")
    r.set_defaults(func=cmd_run)

    f = sub.add_parser("fmt", help="print a file in canonical form")
    f.add_argument("file", help=".imp program, .prf script, or one formula per line")
    f.add_argument("--style", choices=styles, default=None, help="symbol style of the output")
    f.set_defaults(func=cmd_fmt)
    return p


def main(argv=None) -> int:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    try:
        args = build_parser().parse_args(argv)
        for attr in ("print", "style"):
            if hasattr(args, attr) and getattr(args, attr) is None:
                setattr(args, attr, _style_default())
                Style(getattr(args, attr))
        return args.func(args)
    except _Usage as e:
        _diag(f"hoarekit: {e}")
        return BAD_INPUT
    except ValueError as e:  # a bad HOAREKIT_STYLE value
        _diag(f"hoarekit: {e}")
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
