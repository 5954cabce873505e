"""Substitution, variable analysis and the number-theory rules."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .evidence import KernelError, Theorem, _prove
from .prop import Rule, _equivalence, check_mode
from .syntax import (
    ATOMS, QUANTIFIERS, ZERO, And, Direction, Eq, Exists, ForAll, Formula,
    Imp, Mode, Mult, Not, Or, Path, Plus, PropVar, Side, Succ, Term, Var,
    check_var_name,
)


# -- substitution ------------------------------------------------------------

def subst_term(t: Term, pattern: Term, replacement: Term) -> Term:
    """Replace every subterm equal to ``pattern``; inserted material is not rescanned."""
    if t == pattern:
        return replacement
    match t:
        case Succ(a):
            return Succ(subst_term(a, pattern, replacement))
        case Plus(a, b):
            return Plus(subst_term(a, pattern, replacement), subst_term(b, pattern, replacement))
        case Mult(a, b):
            return Mult(subst_term(a, pattern, replacement), subst_term(b, pattern, replacement))
    return t


def subst_formula(f: Formula, pattern: Term, replacement: Term) -> Formula:
    """Apply :func:`subst_term` in every equation, straight through binders."""
    match f:
        case Eq(a, b):
            return Eq(subst_term(a, pattern, replacement), subst_term(b, pattern, replacement))
        case ForAll(v, body) | Exists(v, body):
            return type(f)(v, subst_formula(body, pattern, replacement))
        case PropVar():
            return f
        case Not(a):
            return Not(subst_formula(a, pattern, replacement))
        case And(a, b) | Or(a, b) | Imp(a, b):
            return type(f)(subst_formula(a, pattern, replacement),
                           subst_formula(b, pattern, replacement))
    raise TypeError(f"not a formula: {f!r}")


# -- variable analysis -------------------------------------------------------

def _dedup(xs: Iterable[str]) -> list[str]:
    return list(dict.fromkeys(xs))


def _term_occurrences(t: Term) -> list[str]:
    out = []
    stack = [t]
    while stack:
        t = stack.pop()
        match t:
            case Var(v):
                out.append(v)
            case Succ(a):
                stack.append(a)
            case Plus(a, b) | Mult(a, b):
                stack.append(b)
                stack.append(a)
    return out


def vars_of_term(t: Term) -> list[str]:
    return _dedup(_term_occurrences(t))


def bound_vars(f: Formula) -> list[str]:
    """Variables of the leading chain of quantified atoms.

    Quantifiers below a connective are not collected; the rule side
    conditions are defined against this shallow walk.
    """
    out = []
    while isinstance(f, QUANTIFIERS):
        out.append(f.var)
        f = f.body
    return _dedup(out)


def all_binders(f: Formula) -> list[str]:
    """Every quantified variable anywhere in ``f``."""
    out = []

    def go(f):
        match f:
            case ForAll(v, body) | Exists(v, body):
                out.append(v)
                go(body)
            case Not(a):
                go(a)
            case And(a, b) | Or(a, b) | Imp(a, b):
                go(a)
                go(b)

    go(f)
    return _dedup(out)


def free_vars(f: Formula) -> list[str]:
    out = []

    def go(f, bound):
        match f:
            case Eq(a, b):
                out.extend(v for v in _term_occurrences(a) + _term_occurrences(b)
                           if v not in bound)
            case ForAll(v, body) | Exists(v, body):
                go(body, bound | {v})
            case Not(a):
                go(a, bound)
            case And(a, b) | Or(a, b) | Imp(a, b):
                go(a, bound)
                go(b, bound)

    go(f, frozenset())
    return _dedup(out)


def all_term_vars(f: Formula) -> list[str]:
    """Every variable read in a term position, bound or not."""
    out = []

    def go(f):
        match f:
            case Eq(a, b):
                out.extend(_term_occurrences(a))
                out.extend(_term_occurrences(b))
            case ForAll(_, body) | Exists(_, body):
                go(body)
            case Not(a):
                go(a)
            case And(a, b) | Or(a, b) | Imp(a, b):
                go(a)
                go(b)

    go(f)
    return _dedup(out)


# -- rules -------------------------------------------------------------------

def _var_name(u) -> str:
    if isinstance(u, Var):
        return u.name
    return check_var_name(u)


def spec(e: Term, x: Theorem) -> Theorem:
    """From ``∀u:body`` conclude ``body[u := e]``."""
    f = x.formula
    if not isinstance(f, ForAll):
        raise KernelError("ruleSpec", "not universally quantified")
    clash = set(vars_of_term(e)) & set(bound_vars(f.body))
    if clash:
        raise KernelError("ruleSpec", f"term mentions quantified variable {sorted(clash)[0]}")
    return _prove(subst_formula(f.body, Var(f.var), e))


def generalize(u, premises: Sequence[Theorem], x: Theorem) -> Theorem:
    """Wrap ``x`` in ``∀u:``; ``premises`` are the open fantasy hypotheses."""
    u = _var_name(u)
    if u in bound_vars(x.formula):
        raise KernelError("ruleGeneralize", f"{u} is already quantified")
    for p in premises:
        if u in free_vars(p.formula):
            raise KernelError("ruleGeneralize", f"{u} is free in a fantasy premise")
    return _prove(ForAll(u, x.formula))


def interchange(x: Theorem, direction: Direction) -> Theorem:
    """``∀u:¬body`` and ``¬∃u:body`` rewrite into each other."""
    f = x.formula
    if direction is Direction.FORWARD:
        if isinstance(f, ForAll) and isinstance(f.body, Not):
            return _prove(Not(Exists(f.var, f.body.arg)))
        raise KernelError("ruleInterchange", "expected ∀u:¬x")
    if direction is Direction.BACKWARD:
        if isinstance(f, Not) and isinstance(f.arg, Exists):
            return _prove(ForAll(f.arg.var, Not(f.arg.body)))
        raise KernelError("ruleInterchange", "expected ¬∃u:x")
    raise ValueError(direction)


@_equivalence
def interchange_forward(x: Theorem) -> Theorem:
    return interchange(x, Direction.FORWARD)


@_equivalence
def interchange_backward(x: Theorem) -> Theorem:
    return interchange(x, Direction.BACKWARD)


def symmetry(x: Theorem) -> Theorem:
    f = x.formula
    if not isinstance(f, Eq):
        raise KernelError("ruleSymmetry", "not an equation")
    return _prove(Eq(f.right, f.left))


def transitivity(x: Theorem, y: Theorem) -> Theorem:
    f, g = x.formula, y.formula
    if not (isinstance(f, Eq) and isinstance(g, Eq)):
        raise KernelError("ruleTransitivity", "not an equation")
    if f.right != g.left:
        raise KernelError("ruleTransitivity", "middle terms differ")
    return _prove(Eq(f.left, g.right))


def add_s(x: Theorem) -> Theorem:
    f = x.formula
    if not isinstance(f, Eq):
        raise KernelError("ruleAddS", "not an equation")
    return _prove(Eq(Succ(f.left), Succ(f.right)))


def drop_s(x: Theorem) -> Theorem:
    f = x.formula
    if isinstance(f, Eq) and isinstance(f.left, Succ) and isinstance(f.right, Succ):
        return _prove(Eq(f.left.arg, f.right.arg))
    raise KernelError("ruleDropS", "expected Sr=St")


def induction(base: Theorem, step: Theorem) -> Theorem:
    """From ``X[0]`` and ``∀u:(X[u]→X[Su])`` conclude ``∀u:X[u]``."""
    f = step.formula
    if not (isinstance(f, ForAll) and isinstance(f.body, Imp)):
        raise KernelError("ruleInduction", "step is not ∀u:(x→y)")
    u, y, z = f.var, f.body.left, f.body.right
    if subst_formula(y, Var(u), ZERO) != base.formula:
        raise KernelError("ruleInduction", "base case does not match")
    if subst_formula(y, Var(u), Succ(Var(u))) != z:
        raise KernelError("ruleInduction", "step conclusion is not the successor case")
    return _prove(ForAll(u, y))


def peano_axiom(n: int, *args) -> Theorem:
    """Peano axiom ``n`` quantified over the given variable(s)."""
    arity = {1: 1, 2: 1, 3: 2, 4: 1, 5: 2}
    if n not in arity:
        raise ValueError(f"no axiom {n}")
    name = f"axiom{n}"
    if len(args) != arity[n]:
        raise KernelError(name, f"expects {arity[n]} variable(s)")
    vs = []
    for a in args:
        if isinstance(a, str):
            a = Var(check_var_name(a))
        if not isinstance(a, Var):
            raise KernelError(name, "argument is not a variable")
        vs.append(a)
    if len(vs) == 2 and vs[0] == vs[1]:
        raise KernelError(name, "variables must be distinct")
    a = vs[0]
    if n == 1:
        f = ForAll(a.name, Not(Eq(Succ(a), ZERO)))
    elif n == 2:
        f = ForAll(a.name, Eq(Plus(a, ZERO), a))
    elif n == 3:
        b = vs[1]
        f = ForAll(a.name, ForAll(b.name, Eq(Plus(a, Succ(b)), Succ(Plus(a, b)))))
    elif n == 4:
        f = ForAll(a.name, Eq(Mult(a, ZERO), ZERO))
    else:
        b = vs[1]
        f = ForAll(a.name, ForAll(b.name, Eq(Mult(a, Succ(b)), Plus(Mult(a, b), a))))
    return _prove(f)


# -- paths through formulas and terms -----------------------------------------

def apply_fol_rule(path: Path, rule: Rule, premises: Sequence[Theorem], x: Theorem,
                   mode: Mode = Mode.DEFAULT) -> Theorem:
    """Rewrite the subformula addressed by ``path``, also descending into quantifier bodies.

    Any step enters ``Not`` or a quantifier body.  The rewrite may not change
    whether a variable bound on the way down occurs free, and may not bind a
    variable that is free in one of ``premises``.
    """
    check_mode(rule, mode, "applyFOLRule")
    premise_free = {v for p in premises for v in free_vars(p.formula)}

    def go(path, f, binders):
        if path:
            step, rest = path[0], path[1:]
            if isinstance(f, Not):
                return Not(go(rest, f.arg, binders))
            if isinstance(f, QUANTIFIERS):
                return type(f)(f.var, go(rest, f.body, binders | {f.var}))
            if not isinstance(f, ATOMS):
                if step is Side.LEFT:
                    return type(f)(go(rest, f.left, binders), f.right)
                return type(f)(f.left, go(rest, f.right, binders))
        new = rule(_prove(f)).formula
        old_free, new_free = set(free_vars(f)), set(free_vars(new))
        for u in binders:
            if (u in old_free) != (u in new_free):
                raise KernelError("applyFOLRule", f"rewrite changes the bound variable {u}")
        captured = (set(all_binders(new)) - set(all_binders(f))) & premise_free
        if captured:
            raise KernelError("applyFOLRule",
                              f"rewrite binds {sorted(captured)[0]}, free in a premise")
        return new

    return _prove(go(tuple(path), x.formula, frozenset()))


@dataclass(frozen=True)
class Occurrence:
    """Address of a subterm: which side of which equation, then a path into that side."""
    side: Side
    fol_path: Path = ()
    term_path: Path = ()


def _locate_eq(fol_path: Path, f: Formula) -> tuple[Eq, frozenset]:
    binders: frozenset = frozenset()
    for step in fol_path:
        if isinstance(f, Not):
            f = f.arg
        elif isinstance(f, QUANTIFIERS):
            binders |= {f.var}
            f = f.body
        elif isinstance(f, (And, Or, Imp)):
            f = f.left if step is Side.LEFT else f.right
        else:
            raise KernelError("getTerm", "formula path runs past an atom")
    if not isinstance(f, Eq):
        raise KernelError("getTerm", "formula path does not reach an equation")
    return f, binders


def _rebuild(fol_path: Path, f: Formula, fn: Callable[[Eq], Eq]) -> Formula:
    if not fol_path:
        return fn(f)
    step, rest = fol_path[0], fol_path[1:]
    if isinstance(f, Not):
        return Not(_rebuild(rest, f.arg, fn))
    if isinstance(f, QUANTIFIERS):
        return type(f)(f.var, _rebuild(rest, f.body, fn))
    if step is Side.LEFT:
        return type(f)(_rebuild(rest, f.left, fn), f.right)
    return type(f)(f.left, _rebuild(rest, f.right, fn))


def _subterm(t: Term, path: Path) -> Term:
    for step in path:
        if isinstance(t, Succ):
            t = t.arg
        elif isinstance(t, (Plus, Mult)):
            t = t.left if step is Side.LEFT else t.right
        else:
            raise KernelError("getTerm", "term path runs past a leaf")
    return t


def _replace_subterm(t: Term, path: Path, fn: Callable[[Term], Term]) -> Term:
    if not path:
        return fn(t)
    step, rest = path[0], path[1:]
    if isinstance(t, Succ):
        return Succ(_replace_subterm(t.arg, rest, fn))
    if isinstance(t, (Plus, Mult)):
        if step is Side.LEFT:
            return type(t)(_replace_subterm(t.left, rest, fn), t.right)
        return type(t)(t.left, _replace_subterm(t.right, rest, fn))
    raise KernelError("getTerm", "term path runs past a leaf")


def get_term(ref: Occurrence, f: Formula) -> Term:
    eq, _ = _locate_eq(tuple(ref.fol_path), f)
    side = eq.left if ref.side is Side.LEFT else eq.right
    return _subterm(side, tuple(ref.term_path))


def _rewrite_occurrence(ref: Occurrence, f: Formula, term_rule: Callable[[Term], Term]) -> Formula:
    _locate_eq(tuple(ref.fol_path), f)

    def on_eq(eq: Eq) -> Eq:
        if ref.side is Side.LEFT:
            return Eq(_replace_subterm(eq.left, tuple(ref.term_path), term_rule), eq.right)
        return Eq(eq.left, _replace_subterm(eq.right, tuple(ref.term_path), term_rule))

    return _rebuild(tuple(ref.fol_path), f, on_eq)


def apply_fol_arith_rule(ref: Occurrence, term_rule: Callable[[Term], Term], x: Theorem,
                         mode: Mode = Mode.DEFAULT) -> Theorem:
    """Replace one addressed subterm by ``term_rule`` of it.

    Arbitrary term rewriting is not truth preserving, so strict mode refuses it.
    """
    if mode is Mode.STRICT:
        raise KernelError("applyFOLArithRule", "term rewriting is not admitted in strict mode")
    return _prove(_rewrite_occurrence(ref, x.formula, term_rule))


def existence(u, occurrences: Sequence[Occurrence], x: Theorem) -> Theorem:
    """Replace the addressed (identical) subterms by ``u`` and prefix ``∃u:``."""
    u = _var_name(u)
    f = x.formula
    if not occurrences:
        if u in bound_vars(f):
            raise KernelError("ruleExistence", f"{u} is already quantified")
        return _prove(Exists(u, f))
    terms = [get_term(o, f) for o in occurrences]
    t = terms[0]
    if any(s != t for s in terms[1:]):
        raise KernelError("ruleExistence", "addressed terms differ")
    term_vars = set(vars_of_term(t))
    if u in term_vars:
        raise KernelError("ruleExistence", f"{u} occurs in the replaced term")
    for o in occurrences:
        _, binders = _locate_eq(tuple(o.fol_path), f)
        if term_vars & binders:
            raise KernelError("ruleExistence", "replaced term mentions a bound variable")
        if u in binders:
            raise KernelError("ruleExistence", f"{u} would be captured by an inner quantifier")
    for o in occurrences:
        f = _rewrite_occurrence(o, f, lambda _: Var(u))
    return _prove(Exists(u, f))
