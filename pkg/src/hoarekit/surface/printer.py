"""Pretty-printing with minimal parentheses.

Unicode style is the canonical form.  ASCII style swaps the symbols and
nothing else, so both styles parse back to the same tree.
"""

from __future__ import annotations

import enum
import os

from ..syntax import (
    And, Assert, Assign, Command, Eq, Exists, ForAll, Formula, IfElse, Imp,
    Mult, Not, Or, Plus, PropVar, Seq, Skip, Succ, Term, Var, While, Zero,
)


class Style(enum.Enum):
    UNICODE = "unicode"
    ASCII = "ascii"


_SYMBOLS = {
    Style.UNICODE: {"turnstile": "⊢ ", "not": "¬", "and": "∧", "or": "∨",
                    "imp": "→", "forall": "∀", "exists": "∃"},
    Style.ASCII: {"turnstile": "|- ", "not": "!", "and": "&", "or": "|",
                  "imp": "->", "forall": "forall ", "exists": "exists "},
}


def default_style() -> Style:
    return Style(os.environ.get("HOAREKIT_STYLE", "unicode").lower())


def _style(style) -> Style:
    if style is None:
        return default_style()
    return Style(style)


# binding strength, loosest first
_TERM_PREC = {Plus: 1, Mult: 2}
_FORMULA_PREC = {Imp: 1, Or: 2, And: 3}


def print_term(t: Term, style=None) -> str:
    return _term(t, 0)


def _term(t: Term, ctx: int) -> str:
    match t:
        case Var(v):
            return v
        case Zero():
            return "0"
        case Succ():
            n = 0
            while isinstance(t, Succ):
                n += 1
                t = t.arg
            return "S" * n + _term(t, 3)
        case Plus(a, b):
            s = f"{_term(a, 1)}+{_term(b, 2)}"
            return f"({s})" if ctx > 1 else s
        case Mult(a, b):
            s = f"{_term(a, 2)}*{_term(b, 3)}"
            return f"({s})" if ctx > 2 else s
    raise TypeError(f"not a term: {t!r}")


def print_formula(f: Formula, style=None) -> str:
    return _formula(f, 0, _SYMBOLS[_style(style)])


def _formula(f: Formula, ctx: int, sym: dict) -> str:
    match f:
        case Eq(a, b):
            return f"{_term(a, 0)}={_term(b, 0)}"
        case PropVar(v):
            return v
        case ForAll(v, body) | Exists(v, body):
            q = sym["forall"] if isinstance(f, ForAll) else sym["exists"]
            if isinstance(body, (ForAll, Exists)):
                return f"{q}{v}:{_formula(body, 4, sym)}"
            return f"{q}{v}:({_formula(body, 0, sym)})"
        case Not(a):
            return sym["not"] + _formula(a, 4, sym)
        case Imp(a, b):
            s = f"{_formula(a, 2, sym)}{sym['imp']}{_formula(b, 1, sym)}"
        case Or(a, b):
            s = f"{_formula(a, 2, sym)}{sym['or']}{_formula(b, 3, sym)}"
        case And(a, b):
            s = f"{_formula(a, 3, sym)}{sym['and']}{_formula(b, 4, sym)}"
        case _:
            raise TypeError(f"not a formula: {f!r}")
    return f"({s})" if ctx > _FORMULA_PREC[type(f)] else s


def print_theorem(x, style=None) -> str:
    sym = _SYMBOLS[_style(style)]
    return sym["turnstile"] + _formula(x.formula, 0, sym)


def print_program(c: Command, style=None) -> str:
    return _command(c, _SYMBOLS[_style(style)])


def _command(c: Command, sym: dict) -> str:
    match c:
        case Skip():
            return ";"
        case Assign(v, e):
            return f"{v} := {_term(e, 0)};"
        case Seq():
            parts = []
            while isinstance(c, Seq):
                first = _command(c.first, sym)
                # sequences parse right-nested; a nested left one needs a block
                parts.append("{" + first + "}" if isinstance(c.first, Seq) else first)
                c = c.second
            parts.append(_command(c, sym))
            return " ".join(parts)
        case IfElse(b, t, e):
            return (f"if ({_formula(b, 0, sym)}) then {{{_command(t, sym)}}} "
                    f"else {{{_command(e, sym)}}};")
        case While(b, body):
            return f"while ({_formula(b, 0, sym)}) do {{{_command(body, sym)}}};"
        case Assert(p, body, q):
            return (f"assert {{{_formula(p, 0, sym)}}} {{{_command(body, sym)}}} "
                    f"{{{_formula(q, 0, sym)}}};")
    raise TypeError(f"not a command: {c!r}")


def print_triple(t, style=None) -> str:
    sym = _SYMBOLS[_style(style)]
    return (f"{{{_formula(t.pre, 0, sym)}}} {_command(t.cmd, sym)} "
            f"{{{_formula(t.post, 0, sym)}}}")
