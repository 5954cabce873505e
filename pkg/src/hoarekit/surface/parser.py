"""Recursive-descent parser for terms, formulas and programs.

Precedence, loosest first: ``->`` (right), ``|``, ``&`` (left), then the
prefix forms ``!``, ``forall v:``, ``exists v:``.  Terms: ``+`` then ``*``
(left), then prefix ``S``.  ``<...>`` groups a formula like ``(...)``.
"""

from __future__ import annotations

from ..syntax import (
    KEYWORDS, SKIP, And, Assert, Assign, Command, Eq, Exists, ForAll, Formula,
    IfElse, Imp, Mult, Not, Or, Plus, PropVar, Succ, Term, Var, While,
    is_var_name, numeral, seq,
)
from .lexer import ParseError, Token, tokenize


class Parser:
    def __init__(self, src: str):
        self.toks = tokenize(src)
        self.pos = 0

    # -- token helpers --------------------------------------------------

    @property
    def tok(self) -> Token:
        return self.toks[self.pos]

    def peek(self, k: int = 1) -> Token:
        return self.toks[min(self.pos + k, len(self.toks) - 1)]

    def at(self, kind: str, value: str | None = None) -> bool:
        t = self.tok
        return t.kind == kind and (value is None or t.value == value)

    def at_kw(self, word: str) -> bool:
        return self.at("IDENT", word)

    def accept(self, kind: str, value: str | None = None) -> Token | None:
        if self.at(kind, value):
            t = self.tok
            self.pos += 1
            return t
        return None

    def error(self, message: str, expected=()) -> ParseError:
        t = self.tok
        found = "end of input" if t.kind == "EOF" else repr(t.value)
        return ParseError(f"{message}, found {found}", t.line, t.col, expected)

    def expect(self, kind: str, value: str | None = None) -> Token:
        t = self.accept(kind, value)
        if t is None:
            want = value if value is not None else kind
            raise self.error("unexpected token", [want])
        return t

    def expect_kw(self, word: str) -> Token:
        return self.expect("IDENT", word)

    def var_name(self) -> str:
        t = self.tok
        if t.kind == "IDENT" and is_var_name(t.value):
            self.pos += 1
            return t.value
        raise self.error("expected a variable", ["variable"])

    def end(self) -> None:
        if not self.at("EOF"):
            raise self.error("trailing input", ["end of input"])

    # -- formulas --------------------------------------------------------

    def formula(self) -> Formula:
        left = self.disjunction()
        if self.accept("->"):
            return Imp(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.accept("|"):
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.accept("&"):
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        if self.accept("!"):
            return Not(self.unary())
        for word, cls in (("forall", ForAll), ("exists", Exists)):
            if self.at_kw(word):
                self.pos += 1
                v = self.var_name()
                self.expect(":")
                return cls(v, self.unary())
        return self.primary()

    def primary(self) -> Formula:
        if self.accept("<"):
            f = self.formula()
            self.expect(">")
            return f
        if self.at("("):
            start = self.pos
            try:
                t = self.term()
                if self.accept("="):
                    return Eq(t, self.term())
                term_err = self.error("expected '='", ["="])
            except ParseError as e:
                term_err = e
            term_end = self.pos
            self.pos = start
            try:
                self.expect("(")
                f = self.formula()
                self.expect(")")
                return f
            except ParseError:
                if term_end > self.pos:
                    raise term_err from None
                raise
        bare = self.at("IDENT")
        t = self.term()
        if self.accept("="):
            return Eq(t, self.term())
        if bare and isinstance(t, Var):
            return PropVar(t.name)
        raise self.error("expected '=' after term", ["="])

    # -- terms ------------------------------------------------------------

    def term(self) -> Term:
        t = self.product()
        while self.accept("+"):
            t = Plus(t, self.product())
        return t

    def product(self) -> Term:
        t = self.prefix()
        while self.accept("*"):
            t = Mult(t, self.prefix())
        return t

    def prefix(self) -> Term:
        n = 0
        while self.accept("S"):
            n += 1
        t = self.atom()
        for _ in range(n):
            t = Succ(t)
        return t

    def atom(self) -> Term:
        t = self.tok
        if t.kind == "NUM":
            self.pos += 1
            return numeral(int(t.value))
        if t.kind == "IDENT" and is_var_name(t.value):
            self.pos += 1
            return Var(t.value)
        if self.accept("("):
            inner = self.term()
            self.expect(")")
            return inner
        raise self.error("expected a term", ["0", "variable", "S", "("])

    # -- programs ---------------------------------------------------------

    def commands(self, stop: str) -> list[Command]:
        out = []
        while not self.at(stop) and not self.at("EOF"):
            out.append(self.command())
        return out

    def block(self) -> Command:
        self.expect("{")
        body = self.commands("}")
        self.expect("}")
        return seq(*body)

    def condition(self) -> Formula:
        self.expect("(")
        f = self.formula()
        self.expect(")")
        return f

    def command(self) -> Command:
        if self.accept(";"):
            return SKIP
        if self.at_kw("skip"):
            self.pos += 1
            self.expect(";")
            return SKIP
        if self.at_kw("if"):
            self.pos += 1
            cond = self.condition()
            self.accept("IDENT", "then")
            then = self.block()
            self.expect_kw("else")
            orelse = self.block()
            self.accept(";")
            return IfElse(cond, then, orelse)
        if self.at_kw("while"):
            self.pos += 1
            cond = self.condition()
            self.accept("IDENT", "do")
            body = self.block()
            self.accept(";")
            return While(cond, body)
        if self.at_kw("assert"):
            self.pos += 1
            self.expect("{")
            pre = self.formula()
            self.expect("}")
            body = self.block()
            self.expect("{")
            post = self.formula()
            self.expect("}")
            self.accept(";")
            return Assert(pre, body, post)
        if self.at("{"):
            return self.block()
        if self.at("IDENT") and self.tok.value not in KEYWORDS:
            v = self.var_name()
            self.expect(":=")
            e = self.term()
            self.expect(";")
            return Assign(v, e)
        raise self.error("expected a command",
                         ["skip", ";", "variable", "if", "while", "assert", "{"])


def parse_term(text: str) -> Term:
    p = Parser(text)
    t = p.term()
    p.end()
    return t


def parse_formula(text: str) -> Formula:
    p = Parser(text)
    f = p.formula()
    p.end()
    return f


def parse_program(text: str) -> Command:
    p = Parser(text)
    body = p.commands("EOF")
    p.end()
    return seq(*body)
