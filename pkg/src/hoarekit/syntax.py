"""Abstract syntax shared by every kernel: terms, formulas, commands, paths."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Union

KEYWORDS = frozenset({
    "forall", "exists", "skip", "if", "then", "else", "while", "do",
    "assert", "proof", "triple", "program", "fantasy", "as", "return",
    "qed", "S",
})

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


def is_var_name(name: str) -> bool:
    # a leading uppercase S always lexes as the successor symbol
    return (
        isinstance(name, str)
        and _IDENT.fullmatch(name) is not None
        and name not in KEYWORDS
        and not name.startswith("S")
    )


def check_var_name(name: str) -> str:
    if not is_var_name(name):
        raise ValueError(f"invalid variable name: {name!r}")
    return name


class Side(enum.Enum):
    LEFT = "L"
    RIGHT = "R"


L = Side.LEFT
R = Side.RIGHT

Path = tuple[Side, ...]


class Direction(enum.Enum):
    INTRO = "intro"
    ELIM = "elim"
    FORWARD = "forward"
    BACKWARD = "backward"


class Mode(enum.Enum):
    DEFAULT = "default"
    STRICT = "strict"


# -- terms -------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Var:
    name: str

    def __post_init__(self):
        check_var_name(self.name)


@dataclass(frozen=True, slots=True)
class Zero:
    pass


@dataclass(frozen=True, slots=True)
class Succ:
    arg: Term


@dataclass(frozen=True, slots=True)
class Plus:
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class Mult:
    left: Term
    right: Term


Term = Union[Var, Zero, Succ, Plus, Mult]
ZERO = Zero()


def numeral(n: int) -> Term:
    """Zero under ``n`` successors."""
    if n < 0:
        raise ValueError("numerals denote naturals")
    t: Term = ZERO
    for _ in range(n):
        t = Succ(t)
    return t


# -- formulas ----------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True, slots=True)
class ForAll:
    var: str
    body: Formula

    def __post_init__(self):
        check_var_name(self.var)


@dataclass(frozen=True, slots=True)
class Exists:
    var: str
    body: Formula

    def __post_init__(self):
        check_var_name(self.var)


@dataclass(frozen=True, slots=True)
class PropVar:
    """A propositional letter, opaque to arithmetic."""
    name: str

    def __post_init__(self):
        check_var_name(self.name)


@dataclass(frozen=True, slots=True)
class Not:
    arg: Formula


@dataclass(frozen=True, slots=True)
class And:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Or:
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Imp:
    left: Formula
    right: Formula


Atom = Union[Eq, ForAll, Exists, PropVar]
Formula = Union[Eq, ForAll, Exists, PropVar, Not, And, Or, Imp]
QUANTIFIERS = (ForAll, Exists)
ATOMS = (Eq, ForAll, Exists, PropVar)
BINARY = (And, Or, Imp)


def formula_eq(a: Formula, b: Formula) -> bool:
    """Structural equality; bound variable names matter."""
    return a == b


# -- commands ----------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Skip:
    pass


@dataclass(frozen=True, slots=True)
class Assign:
    var: str
    expr: Term

    def __post_init__(self):
        check_var_name(self.var)


@dataclass(frozen=True, slots=True)
class Seq:
    first: Command
    second: Command


@dataclass(frozen=True, slots=True)
class IfElse:
    cond: Formula
    then: Command
    orelse: Command


@dataclass(frozen=True, slots=True)
class While:
    cond: Formula
    body: Command


@dataclass(frozen=True, slots=True)
class Assert:
    pre: Formula
    body: Command
    post: Formula


Command = Union[Skip, Assign, Seq, IfElse, While, Assert]
SKIP = Skip()


def seq(*cmds: Command) -> Command:
    """Right-nested sequence; an empty sequence is ``Skip``."""
    if not cmds:
        return SKIP
    out = cmds[-1]
    for c in reversed(cmds[:-1]):
        out = Seq(c, out)
    return out


def command_vars(c: Command) -> list[str]:
    """Every term variable mentioned by a command, first occurrence order."""
    from .fol import vars_of_term, all_term_vars

    seen: dict[str, None] = {}

    def go(c):
        match c:
            case Assign(v, e):
                seen.setdefault(v)
                for x in vars_of_term(e):
                    seen.setdefault(x)
            case Seq(a, b):
                go(a)
                go(b)
            case IfElse(b, t, e):
                for x in all_term_vars(b):
                    seen.setdefault(x)
                go(t)
                go(e)
            case While(b, body):
                for x in all_term_vars(b):
                    seen.setdefault(x)
                go(body)
            case Assert(p, body, q):
                for x in all_term_vars(p):
                    seen.setdefault(x)
                go(body)
                for x in all_term_vars(q):
                    seen.setdefault(x)

    go(c)
    return list(seen)
