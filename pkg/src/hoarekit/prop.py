"""Propositional rules.

Every rule takes theorems and returns a theorem or raises
:class:`KernelError`.  Unary rules are plain callables ``Theorem -> Theorem``
so they can be handed to :func:`apply_prop_rule` and composed with
:func:`then`.  Rules that replace a formula by a logically equivalent one
are registered as equivalences; only those are admitted by path application
in strict mode.
"""

from __future__ import annotations

import weakref
from typing import Callable

from .evidence import KernelError, Theorem, _prove
from .syntax import (
    ATOMS, And, Direction, Formula, Imp, Mode, Not, Or, Path, Side,
)

Rule = Callable[[Theorem], Theorem]

# kernel-owned rules known to preserve logical equivalence
_EQUIVALENCES: weakref.WeakSet = weakref.WeakSet()


def _equivalence(rule: Rule) -> Rule:
    _EQUIVALENCES.add(rule)
    return rule


def is_equivalence(rule: Rule) -> bool:
    return rule in _EQUIVALENCES


@_equivalence
def identity(x: Theorem) -> Theorem:
    return x


def then(*rules: Rule) -> Rule:
    """Left-to-right composition of unary rules."""
    def composed(x: Theorem) -> Theorem:
        for r in rules:
            x = r(x)
        return x
    if all(is_equivalence(r) for r in rules):
        _EQUIVALENCES.add(composed)
    return composed


def fantasy(hypothesis: Formula, derive: Callable[[Theorem], Theorem]) -> Theorem:
    """Discharge a hypothetical derivation as an implication.

    ``derive`` receives the hypothesis as a theorem and may freely use any
    theorem already in hand.
    """
    result = derive(_prove(hypothesis))
    if not isinstance(result, Theorem):
        raise TypeError("fantasy body must return a Theorem")
    return _prove(Imp(hypothesis, result.formula))


def detach(x: Theorem, imp: Theorem) -> Theorem:
    f = imp.formula
    if not isinstance(f, Imp):
        raise KernelError("ruleDetachment", "second premise is not an implication")
    if f.left != x.formula:
        raise KernelError("ruleDetachment", "antecedent does not match")
    return _prove(f.right)


def join(x: Theorem, y: Theorem) -> Theorem:
    return _prove(And(x.formula, y.formula))


def sep(x: Theorem, side: Side) -> Theorem:
    f = x.formula
    rule = "ruleSepL" if side is Side.LEFT else "ruleSepR"
    if not isinstance(f, And):
        raise KernelError(rule, "not a conjunction")
    return _prove(f.left if side is Side.LEFT else f.right)


def sep_left(x: Theorem) -> Theorem:
    return sep(x, Side.LEFT)


def sep_right(x: Theorem) -> Theorem:
    return sep(x, Side.RIGHT)


def double_tilde(x: Theorem, direction: Direction) -> Theorem:
    f = x.formula
    if direction is Direction.INTRO:
        return _prove(Not(Not(f)))
    if direction is Direction.ELIM:
        if isinstance(f, Not) and isinstance(f.arg, Not):
            return _prove(f.arg.arg)
        raise KernelError("ruleDoubleTildeElim", "no double negation")
    raise ValueError(direction)


def contrapositive(x: Theorem, direction: Direction) -> Theorem:
    f = x.formula
    if isinstance(f, Imp):
        if direction is Direction.FORWARD:
            return _prove(Imp(Not(f.right), Not(f.left)))
        if direction is Direction.BACKWARD:
            if isinstance(f.left, Not) and isinstance(f.right, Not):
                return _prove(Imp(f.right.arg, f.left.arg))
            raise KernelError("ruleContra", "expected ¬b→¬a")
        raise ValueError(direction)
    raise KernelError("ruleContra", "not an implication")


def de_morgan(x: Theorem, direction: Direction) -> Theorem:
    f = x.formula
    if direction is Direction.FORWARD:
        if isinstance(f, And) and isinstance(f.left, Not) and isinstance(f.right, Not):
            return _prove(Not(Or(f.left.arg, f.right.arg)))
        raise KernelError("ruleDeMorgan", "expected ¬a∧¬b")
    if direction is Direction.BACKWARD:
        if isinstance(f, Not) and isinstance(f.arg, Or):
            return _prove(And(Not(f.arg.left), Not(f.arg.right)))
        raise KernelError("ruleDeMorgan", "expected ¬(a∨b)")
    raise ValueError(direction)


def switcheroo(x: Theorem, direction: Direction) -> Theorem:
    f = x.formula
    if direction is Direction.FORWARD:
        if isinstance(f, Or):
            return _prove(Imp(Not(f.left), f.right))
        raise KernelError("ruleSwitcheroo", "expected a∨b")
    if direction is Direction.BACKWARD:
        if isinstance(f, Imp) and isinstance(f.left, Not):
            return _prove(Or(f.left.arg, f.right))
        raise KernelError("ruleSwitcheroo", "expected ¬a→b")
    raise ValueError(direction)


@_equivalence
def double_tilde_intro(x: Theorem) -> Theorem:
    return double_tilde(x, Direction.INTRO)


@_equivalence
def double_tilde_elim(x: Theorem) -> Theorem:
    return double_tilde(x, Direction.ELIM)


@_equivalence
def contra_forward(x: Theorem) -> Theorem:
    return contrapositive(x, Direction.FORWARD)


@_equivalence
def contra_backward(x: Theorem) -> Theorem:
    return contrapositive(x, Direction.BACKWARD)


@_equivalence
def de_morgan_forward(x: Theorem) -> Theorem:
    return de_morgan(x, Direction.FORWARD)


@_equivalence
def de_morgan_backward(x: Theorem) -> Theorem:
    return de_morgan(x, Direction.BACKWARD)


@_equivalence
def de_morgan_auto(x: Theorem) -> Theorem:
    if isinstance(x.formula, Not):
        return de_morgan(x, Direction.BACKWARD)
    return de_morgan(x, Direction.FORWARD)


@_equivalence
def switcheroo_forward(x: Theorem) -> Theorem:
    return switcheroo(x, Direction.FORWARD)


@_equivalence
def switcheroo_backward(x: Theorem) -> Theorem:
    return switcheroo(x, Direction.BACKWARD)


@_equivalence
def switcheroo_auto(x: Theorem) -> Theorem:
    if isinstance(x.formula, Or):
        return switcheroo(x, Direction.FORWARD)
    return switcheroo(x, Direction.BACKWARD)


def check_mode(rule: Rule, mode: Mode, name: str) -> None:
    if mode is Mode.STRICT and not is_equivalence(rule):
        raise KernelError(name, "strict mode admits only equivalence rules under a path")


def apply_prop_rule(path: Path, rule: Rule, x: Theorem, mode: Mode = Mode.DEFAULT) -> Theorem:
    """Rewrite the subformula addressed by ``path`` with ``rule``.

    A step into ``Not`` is consumed whatever its side.  Descent stops at an
    atom or when the path runs out.  In default mode any rule is accepted,
    which can yield non-tautologies (``⊢ A→A∧B`` from ``⊢ A∧B→A∧B``).
    """
    check_mode(rule, mode, "applyPropRule")

    def go(path, f):
        if path:
            step, rest = path[0], path[1:]
            if isinstance(f, Not):
                return Not(go(rest, f.arg))
            if not isinstance(f, ATOMS):
                if step is Side.LEFT:
                    return type(f)(go(rest, f.left), f.right)
                return type(f)(f.left, go(rest, f.right))
        return rule(_prove(f)).formula

    return _prove(go(tuple(path), x.formula))
