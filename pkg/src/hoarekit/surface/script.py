"""Proof scripts: textual derivations elaborated into kernel calls.

A script is a sequence of items::

    program countToB { A := 0; while (!(A = B)) { A := S(A); } }

    proof lemma2 {
      s1 = axiom3(A, B)
      s2 = ruleSpec(D, s1)
      ...
      qed l2 : {forall D: D+S0 = S(D)+0}
    }

    triple count {
      ...
      qed t : {exists C: 0+C=B} countToB {!!(A=B) & exists C: A+C=B}
    }

Statements bind an id to a rule application, ``id = ruleName(args)``, or to
a fantasy block ``id = fantasy {F} as h { ...; return y }``.  Arguments are
ids, ``{formula}``, ``` `term` ```, bare variables, numbers, paths ``[L,R]``,
occurrences ``(L, [path], [path])`` and, where a rule is expected, rule
expressions such as ``ruleInterchangeR then ruleSpec(`SC`)``.  ``qed``
asserts the shape of a result and produces one report line.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Union

from .. import fol, hoare, prop
from ..evidence import HoareTriple, KernelError, Theorem
from ..lint import lint_formula
from ..syntax import (
    Assert, Assign, Command, Formula, IfElse, Mode, Seq, Side, Skip, Term, Var, While,
    is_var_name, numeral, seq,
)
from .lexer import ParseError
from .parser import Parser
from .printer import print_formula, print_program, print_term, print_theorem, print_triple


# -- script syntax tree ---------------------------------------------------------

@dataclass(frozen=True)
class Ref:
    name: str
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class FormulaArg:
    formula: Formula


@dataclass(frozen=True)
class TermArg:
    term: Term


@dataclass(frozen=True)
class ListArg:
    items: tuple


@dataclass(frozen=True)
class OccArg:
    side: Side
    fol_path: tuple
    term_path: tuple


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Then:
    parts: tuple


@dataclass(frozen=True)
class Fantasy:
    hypothesis: Formula
    premise: str
    body: tuple
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Bind:
    name: str
    expr: object
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Return:
    name: str
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Qed:
    name: str
    pre: Formula
    program: object = None  # Ref to a program item, or an inline Command
    post: Optional[Formula] = None
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ProofDef:
    name: str
    statements: tuple
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class TripleDef:
    name: str
    statements: tuple
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ProgramDef:
    name: str
    command: Command
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


ScriptItem = Union[ProofDef, TripleDef, ProgramDef]

_SIDES = {"L": Side.LEFT, "R": Side.RIGHT, "GoLeft": Side.LEFT, "GoRight": Side.RIGHT,
          "Left": Side.LEFT, "Right": Side.RIGHT}


# -- parsing ------------------------------------------------------------------

class _ScriptParser(Parser):

    def ident(self) -> str:
        t = self.tok
        if t.kind == "IDENT" and t.value not in ("qed", "return", "fantasy"):
            self.pos += 1
            return t.value
        raise self.error("expected an identifier", ["identifier"])

    def items(self) -> list[ScriptItem]:
        out = []
        while not self.at("EOF"):
            out.append(self.item())
        return out

    def item(self) -> ScriptItem:
        t = self.tok
        for word, cls in (("proof", ProofDef), ("triple", TripleDef)):
            if self.at_kw(word):
                self.pos += 1
                name = self.ident()
                self.expect("{")
                body = self.statements(allow_return=False)
                self.expect("}")
                return cls(name, tuple(body), t.line, t.col)
        if self.at_kw("program"):
            self.pos += 1
            name = self.ident()
            cmd = self.block()
            return ProgramDef(name, cmd, t.line, t.col)
        raise self.error("expected an item", ["proof", "triple", "program"])

    def statements(self, allow_return: bool) -> list:
        out = []
        while not self.at("}") and not self.at("EOF"):
            t = self.tok
            if self.at_kw("qed"):
                if allow_return:
                    raise self.error("qed is not allowed inside a fantasy")
                self.pos += 1
                out.append(self.qed(t))
            elif self.at_kw("return"):
                if not allow_return:
                    raise self.error("return outside a fantasy")
                self.pos += 1
                out.append(Return(self.ident(), t.line, t.col))
            else:
                name = self.ident()
                self.expect("=")
                out.append(Bind(name, self.expr(), t.line, t.col))
            self.accept(";")
        return out

    def qed(self, t) -> Qed:
        name = self.ident()
        self.expect(":")
        self.expect("{")
        pre = self.formula()
        self.expect("}")
        if self.at("<") or (self.at("IDENT") and self.peek().kind == "{"):
            if self.accept("<"):
                program = self.commands(">")
                self.expect(">")
                prog = seq(*program)
            else:
                u = self.tok
                prog = Ref(self.ident(), u.line, u.col)
            self.expect("{")
            post = self.formula()
            self.expect("}")
            return Qed(name, pre, prog, post, t.line, t.col)
        return Qed(name, pre, None, None, t.line, t.col)

    def expr(self):
        t = self.tok
        if self.at_kw("fantasy"):
            self.pos += 1
            self.expect("{")
            hyp = self.formula()
            self.expect("}")
            self.expect_kw("as")
            premise = self.ident()
            self.expect("{")
            body = self.statements(allow_return=True)
            self.expect("}")
            if not body or not isinstance(body[-1], Return):
                raise ParseError("fantasy block must end with return", t.line, t.col)
            return Fantasy(hyp, premise, tuple(body), t.line, t.col)
        return self.rule_expr()

    def rule_expr(self):
        parts = [self.call()]
        while self.accept("IDENT", "then"):
            parts.append(self.call())
        return parts[0] if len(parts) == 1 else Then(tuple(parts))

    def call(self):
        t = self.tok
        if self.at_kw("return"):
            self.pos += 1
            return Ref("return", t.line, t.col)
        name = self.ident()
        if not self.accept("("):
            return Ref(name, t.line, t.col)
        args = []
        if not self.at(")"):
            args.append(self.arg())
            while self.accept(","):
                args.append(self.arg())
        self.expect(")")
        return Call(name, tuple(args), t.line, t.col)

    def arg(self):
        if self.accept("{"):
            f = self.formula()
            self.expect("}")
            return FormulaArg(f)
        if self.accept("`"):
            term = self.term()
            self.expect("`")
            return TermArg(term)
        if self.accept("["):
            items = []
            if not self.at("]"):
                items.append(self.arg())
                while self.accept(","):
                    items.append(self.arg())
            self.expect("]")
            return ListArg(tuple(items))
        if self.accept("("):
            side = self.side()
            self.expect(",")
            fp = self.path()
            self.expect(",")
            tp = self.path()
            self.expect(")")
            return OccArg(side, fp, tp)
        if self.at("NUM"):
            return Num(int(self.expect("NUM").value))
        return self.rule_expr()

    def side(self) -> Side:
        t = self.tok
        if t.kind == "IDENT" and t.value in _SIDES:
            self.pos += 1
            return _SIDES[t.value]
        raise self.error("expected a side", ["L", "R"])

    def path(self) -> tuple:
        self.expect("[")
        steps = []
        if not self.at("]"):
            steps.append(self.side())
            while self.accept(","):
                steps.append(self.side())
        self.expect("]")
        return tuple(steps)


def parse_script(text: str) -> list[ScriptItem]:
    p = _ScriptParser(text)
    return p.items()


# -- checking -----------------------------------------------------------------

class CheckError(Exception):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.message = message
        self.line = line
        self.col = col
        super().__init__(f"{line}:{col}: {message}" if line else message)


@dataclass
class ReportLine:
    item: str
    ok: bool
    text: str  # the rendered result on success, the error otherwise
    value: object = None


@dataclass
class Report:
    lines: list[ReportLine] = field(default_factory=list)
    values: dict = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(line.ok for line in self.lines)

    def render(self) -> str:
        return "\n".join(
            f"{line.text} ✓" if line.ok else f"✗ {line.item}: {line.text}"
            for line in self.lines
        )


class _Checker:
    def __init__(self, mode: Mode, style):
        self.mode = mode
        self.style = style
        self.hyps: list[Theorem] = []
        self.rules = self._rule_table()

    # rule table: name -> (parameter kinds, implementation)
    def _rule_table(self) -> dict:
        def m():  # read at call time
            return self.mode

        def premises(explicit):
            return list(explicit) + self.hyps

        return {
            "ruleJoin": (("thm", "thm"), prop.join),
            "ruleSepL": (("thm",), prop.sep_left),
            "ruleSepR": (("thm",), prop.sep_right),
            "ruleDetachment": (("thm", "thm"), prop.detach),
            "ruleDoubleTildeIntro": (("thm",), prop.double_tilde_intro),
            "ruleDoubleTildeElim": (("thm",), prop.double_tilde_elim),
            "ruleContra": (("thm",), prop.contra_forward),
            "ruleContraF": (("thm",), prop.contra_forward),
            "ruleContraB": (("thm",), prop.contra_backward),
            "ruleDeMorgan": (("thm",), prop.de_morgan_auto),
            "ruleDeMorganF": (("thm",), prop.de_morgan_forward),
            "ruleDeMorganB": (("thm",), prop.de_morgan_backward),
            "ruleSwitcheroo": (("thm",), prop.switcheroo_auto),
            "ruleSwitcherooF": (("thm",), prop.switcheroo_forward),
            "ruleSwitcherooB": (("thm",), prop.switcheroo_backward),
            "ruleFantasy": (("formula", "rule"), self._fantasy_rule),
            "applyPropRule": (("path", "rule", "thm"),
                              lambda p, r, x: prop.apply_prop_rule(p, r, x, m())),
            "ruleSpec": (("term", "thm"), fol.spec),
            "ruleGeneralize": (("var", "premises", "thm"),
                               lambda u, ps, x: fol.generalize(u, premises(ps), x)),
            "ruleInterchangeL": (("thm",), fol.interchange_forward),
            "ruleInterchangeR": (("thm",), fol.interchange_backward),
            "ruleExistence": (("var", "occs", "thm"), fol.existence),
            "ruleSymmetry": (("thm",), fol.symmetry),
            "ruleTransitivity": (("thm", "thm"), fol.transitivity),
            "ruleAddS": (("thm",), fol.add_s),
            "ruleDropS": (("thm",), fol.drop_s),
            "ruleInduction": (("thm", "thm"), fol.induction),
            "axiom1": (("var",), lambda a: fol.peano_axiom(1, a)),
            "axiom2": (("var",), lambda a: fol.peano_axiom(2, a)),
            "axiom3": (("var", "var"), lambda a, b: fol.peano_axiom(3, a, b)),
            "axiom4": (("var",), lambda a: fol.peano_axiom(4, a)),
            "axiom5": (("var", "var"), lambda a, b: fol.peano_axiom(5, a, b)),
            "applyFOLRule": (("path", "rule", "premises", "thm"),
                             lambda p, r, ps, x: fol.apply_fol_rule(p, r, premises(ps), x, m())),
            "applyFOLArithRule": (("occ", "termrule", "thm"),
                                  lambda o, tr, x: fol.apply_fol_arith_rule(o, tr, x, m())),
            "hoareSkip": (("formula",), hoare.h_skip),
            "hoareAssignment": (("var", "term", "formula"), hoare.h_assign),
            "hoareConsequence": (("thm", "triple", "thm"), hoare.h_consequence),
            "hoareSequence": (("triple", "triple"), hoare.h_sequence),
            "hoareConditional": (("triple", "triple"), hoare.h_conditional),
            "hoareWhile": (("triple",), hoare.h_while),
        }

    def _fantasy_rule(self, hypothesis: Formula, rule: Callable) -> Theorem:
        def derive(h):
            self.hyps.append(h)
            try:
                return rule(h)
            finally:
                self.hyps.pop()
        return prop.fantasy(hypothesis, derive)

    # -- argument elaboration --

    def lookup(self, env: dict, ref: Ref):
        if ref.name not in env:
            raise CheckError(f"unknown id {ref.name!r}", ref.line, ref.col)
        return env[ref.name]

    def value(self, env, expr, kind: str):
        """Elaborate an expression that must produce a Theorem or HoareTriple."""
        want = Theorem if kind == "thm" else HoareTriple
        if isinstance(expr, Ref):
            v = self.lookup(env, expr)
        elif isinstance(expr, Call):
            v = self.call(env, expr)
        else:
            raise CheckError(f"expected a {'theorem' if kind == 'thm' else 'triple'} argument")
        if not isinstance(v, want):
            what = "theorem" if kind == "thm" else "triple"
            raise CheckError(f"expected a {what}, got {type(v).__name__}",
                             getattr(expr, "line", 0), getattr(expr, "col", 0))
        return v

    def arg(self, env, expr, kind: str):
        if kind in ("thm", "triple"):
            return self.value(env, expr, kind)
        if kind == "formula":
            if isinstance(expr, FormulaArg):
                return expr.formula
            raise CheckError("expected {formula}")
        if kind == "term":
            if isinstance(expr, TermArg):
                return expr.term
            if isinstance(expr, Num):
                return numeral(expr.value)
            if isinstance(expr, Ref) and is_var_name(expr.name):
                return Var(expr.name)
            raise CheckError("expected `term`")
        if kind == "var":
            if isinstance(expr, Ref) and is_var_name(expr.name):
                return expr.name
            if isinstance(expr, TermArg) and isinstance(expr.term, Var):
                return expr.term.name
            raise CheckError("expected a variable")
        if kind == "path":
            if isinstance(expr, ListArg):
                steps = []
                for s in expr.items:
                    if not (isinstance(s, Ref) and s.name in _SIDES):
                        raise CheckError("path steps are L or R")
                    steps.append(_SIDES[s.name])
                return tuple(steps)
            raise CheckError("expected a path [L, R, ...]")
        if kind == "premises":
            if isinstance(expr, ListArg):
                return [self.value(env, e, "thm") for e in expr.items]
            raise CheckError("expected a list of premises")
        if kind == "occ":
            if isinstance(expr, OccArg):
                return fol.Occurrence(expr.side, expr.fol_path, expr.term_path)
            raise CheckError("expected an occurrence (L|R, [path], [path])")
        if kind == "occs":
            if isinstance(expr, ListArg):
                return [self.arg(env, e, "occ") for e in expr.items]
            raise CheckError("expected a list of occurrences")
        if kind == "termrule":
            t = self.arg(env, expr, "term")
            return lambda _old: t
        if kind == "rule":
            return self.rule(env, expr)
        raise AssertionError(kind)

    def rule(self, env, expr) -> Callable:
        """Elaborate a rule expression to a unary ``Theorem -> Theorem`` callable."""
        if isinstance(expr, Then):
            return prop.then(*(self.rule(env, p) for p in expr.parts))
        if isinstance(expr, Ref):
            if expr.name == "return":
                return prop.identity
            kinds, fn = self._entry(expr.name, expr)
            if kinds != ("thm",):
                raise CheckError(f"{expr.name} needs arguments before it can be used as a rule",
                                 expr.line, expr.col)
            return fn
        if isinstance(expr, Call):
            kinds, fn = self._entry(expr.name, expr)
            if not kinds or kinds[-1] != "thm" or len(expr.args) != len(kinds) - 1:
                raise CheckError(f"{expr.name} expects {len(kinds) - 1} argument(s) "
                                 "when used as a rule", expr.line, expr.col)
            fixed = [self.arg(env, a, k) for a, k in zip(expr.args, kinds)]
            return lambda x: fn(*fixed, x)
        raise CheckError("expected a rule")

    def _entry(self, name, node):
        if name not in self.rules:
            raise CheckError(f"unknown rule {name!r}", node.line, node.col)
        return self.rules[name]

    def call(self, env, c: Call):
        kinds, fn = self._entry(c.name, c)
        if len(c.args) != len(kinds):
            raise CheckError(f"{c.name} expects {len(kinds)} argument(s), got {len(c.args)}",
                             c.line, c.col)
        try:
            args = [self.arg(env, a, k) for a, k in zip(c.args, kinds)]
            return fn(*args)
        except CheckError as e:
            if not e.line:
                raise CheckError(e.message, c.line, c.col) from None
            raise
        except KernelError as e:
            raise CheckError(str(e), c.line, c.col) from None

    # -- statements --

    def statements(self, env: dict, stmts, report: Report, item: str):
        last = None
        for s in stmts:
            if isinstance(s, Bind):
                if s.name in env:
                    raise CheckError(f"id {s.name!r} is already bound", s.line, s.col)
                env[s.name] = last = self.expr(env, s.expr)
            elif isinstance(s, Qed):
                last = self.qed(env, s)
                report.lines.append(ReportLine(item, True, self.render(last), last))
            elif isinstance(s, Return):
                return self.lookup(env, Ref(s.name, s.line, s.col))
        return last

    def expr(self, env, e):
        if isinstance(e, Fantasy):
            return self.fantasy(env, e)
        if isinstance(e, Call):
            return self.call(env, e)
        if isinstance(e, Ref):
            return self.lookup(env, e)
        raise CheckError("a rule expression cannot be bound directly")

    def fantasy(self, env, e: Fantasy) -> Theorem:
        def derive(h: Theorem) -> Theorem:
            inner = dict(env)
            if e.premise in inner:
                raise CheckError(f"id {e.premise!r} is already bound", e.line, e.col)
            inner[e.premise] = h
            self.hyps.append(h)
            try:
                out = self.statements(inner, e.body, None, "")
            finally:
                self.hyps.pop()
            if not isinstance(out, Theorem):
                raise CheckError("fantasy must return a theorem", e.line, e.col)
            return out
        return prop.fantasy(e.hypothesis, derive)

    def qed(self, env, q: Qed):
        v = self.lookup(env, Ref(q.name, q.line, q.col))
        if q.program is None:
            if not isinstance(v, Theorem):
                raise CheckError(f"{q.name} is not a theorem", q.line, q.col)
            if v.formula != q.pre:
                raise CheckError(f"qed mismatch: derived {print_theorem(v, self.style)}, "
                                 f"stated ⊢ {print_formula(q.pre, self.style)}", q.line, q.col)
            return v
        if not isinstance(v, HoareTriple):
            raise CheckError(f"{q.name} is not a triple", q.line, q.col)
        cmd = q.program
        if isinstance(cmd, Ref):
            cmd = self.lookup(env, cmd)
            if not isinstance(cmd, _COMMANDS):
                raise CheckError(f"{q.program.name} is not a program", q.line, q.col)
        if (v.pre, v.cmd, v.post) != (q.pre, cmd, q.post):
            raise CheckError(f"qed mismatch: derived {print_triple(v, self.style)}", q.line, q.col)
        return v

    def render(self, v) -> str:
        if isinstance(v, Theorem):
            return print_theorem(v, self.style)
        return print_triple(v, self.style)


_COMMANDS = (Skip, Assign, Seq, IfElse, While, Assert)


def _formulas(stmts):
    """Every formula written in a statement list, in source order, without repeats."""
    seen: dict = {}

    def arg(a):
        match a:
            case FormulaArg(g):
                seen.setdefault(g)
            case ListArg(items) | Then(items) | Call(_, items):
                for x in items:
                    arg(x)

    for s in stmts:
        match s:
            case Bind(_, Fantasy(hyp, _, body)):
                seen.setdefault(hyp)
                for g in _formulas(body):
                    seen.setdefault(g)
            case Bind(_, expr):
                arg(expr)
            case Qed(_, pre, _, post):
                seen.setdefault(pre)
                if post is not None:
                    seen.setdefault(post)
    return list(seen)


def check_script(items: list[ScriptItem], mode: Mode = Mode.DEFAULT, style=None) -> Report:
    """Elaborate every item, in order, into kernel calls."""
    checker = _Checker(Mode(mode), style)
    report = Report()
    globals_: dict = {}
    names: set[str] = set()
    for item in items:
        clash = ("duplicate item name" if item.name in names
                 else "item name shadows a rule" if item.name in checker.rules else None)
        names.add(item.name)
        if clash:
            report.lines.append(ReportLine(item.name, False,
                                           f"{item.line}:{item.col}: {clash} {item.name!r}"))
            continue
        if isinstance(item, ProgramDef):
            globals_[item.name] = item.command
            continue
        for g in _formulas(item.statements):
            report.warnings.extend(f"{item.name}: {w}" for w in lint_formula(g))
        env = dict(globals_)
        try:
            value = checker.statements(env, item.statements, report, item.name)
            if value is None:
                raise CheckError("item derives nothing", item.line, item.col)
            want = Theorem if isinstance(item, ProofDef) else HoareTriple
            if not isinstance(value, want):
                kind = "proof" if want is Theorem else "triple"
                raise CheckError(f"{kind} item must end with a {'theorem' if want is Theorem else 'triple'}",
                                 item.line, item.col)
        except CheckError as e:
            report.lines.append(ReportLine(item.name, False, str(e)))
            continue
        except RecursionError:
            report.lines.append(ReportLine(item.name, False, "derivation too deep"))
            continue
        globals_[item.name] = value
        report.values[item.name] = value
    return report


# -- canonical printing ----------------------------------------------------------

def _print_arg(a, style) -> str:
    match a:
        case Ref(name):
            return name
        case Num(n):
            return str(n)
        case FormulaArg(f):
            return "{" + print_formula(f, style) + "}"
        case TermArg(t):
            return "`" + print_term(t) + "`"
        case ListArg(items):
            return "[" + ", ".join(_print_arg(x, style) for x in items) + "]"
        case OccArg(side, fp, tp):
            return f"({side.value}, {_print_path(fp)}, {_print_path(tp)})"
        case Call(name, args):
            return f"{name}(" + ", ".join(_print_arg(x, style) for x in args) + ")"
        case Then(parts):
            return " then ".join(_print_arg(x, style) for x in parts)
    raise TypeError(a)


def _print_path(p) -> str:
    return "[" + ", ".join(s.value for s in p) + "]"


def _print_statements(stmts, style, indent: int) -> list[str]:
    pad = "  " * indent
    out = []
    for s in stmts:
        match s:
            case Bind(name, Fantasy(hyp, premise, body)):
                out.append(f"{pad}{name} = fantasy {{{print_formula(hyp, style)}}} as {premise} {{")
                out.extend(_print_statements(body, style, indent + 1))
                out.append(f"{pad}}}")
            case Bind(name, expr):
                out.append(f"{pad}{name} = {_print_arg(expr, style)}")
            case Return(name):
                out.append(f"{pad}return {name}")
            case Qed(name, pre, None, None):
                out.append(f"{pad}qed {name} : {{{print_formula(pre, style)}}}")
            case Qed(name, pre, prog, post):
                p = prog.name if isinstance(prog, Ref) else "<" + print_program(prog, style) + ">"
                out.append(f"{pad}qed {name} : {{{print_formula(pre, style)}}} {p} "
                           f"{{{print_formula(post, style)}}}")
    return out


def print_script(items: list[ScriptItem], style=None) -> str:
    blocks = []
    for item in items:
        if isinstance(item, ProgramDef):
            blocks.append(f"program {item.name} {{{print_program(item.command, style)}}}")
            continue
        kw = "proof" if isinstance(item, ProofDef) else "triple"
        lines = [f"{kw} {item.name} {{"]
        lines.extend(_print_statements(item.statements, style, 1))
        lines.append("}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"
