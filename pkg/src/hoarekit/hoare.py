"""Hoare rules; the only way to obtain a :class:`HoareTriple`."""

from __future__ import annotations

from .evidence import HoareTriple, KernelError, Theorem, _certify
from .fol import subst_formula
from .syntax import SKIP, And, Assign, Formula, IfElse, Imp, Not, Seq, Term, Var, While


def h_skip(p: Formula) -> HoareTriple:
    return _certify(p, SKIP, p)


def h_assign(v: str, e: Term, q: Formula) -> HoareTriple:
    """``{q[e/v]} v := e {q}``."""
    return _certify(subst_formula(q, Var(v), e), Assign(v, e), q)


def h_consequence(strengthen: Theorem, t: HoareTriple, weaken: Theorem) -> HoareTriple:
    p, q = strengthen.formula, weaken.formula
    if not (isinstance(p, Imp) and isinstance(q, Imp)):
        raise KernelError("hoareConsequence", "expected two implications")
    if p.right != t.pre:
        raise KernelError("hoareConsequence", "implication does not conclude the precondition")
    if q.left != t.post:
        raise KernelError("hoareConsequence", "implication does not start from the postcondition")
    return _certify(p.left, t.cmd, q.right)


def h_sequence(t1: HoareTriple, t2: HoareTriple) -> HoareTriple:
    if t1.post != t2.pre:
        raise KernelError("hoareSequence", "middle conditions differ")
    return _certify(t1.pre, Seq(t1.cmd, t2.cmd), t2.post)


def h_conditional(t_then: HoareTriple, t_else: HoareTriple) -> HoareTriple:
    a, b = t_then.pre, t_else.pre
    if not (isinstance(a, And) and isinstance(b, And) and isinstance(b.left, Not)):
        raise KernelError("hoareConditional", "expected {b∧p} and {¬b∧p}")
    if a.left != b.left.arg or a.right != b.right:
        raise KernelError("hoareConditional", "branch preconditions disagree")
    if t_then.post != t_else.post:
        raise KernelError("hoareConditional", "branch postconditions differ")
    return _certify(a.right, IfElse(a.left, t_then.cmd, t_else.cmd), t_then.post)


def h_while(t_body: HoareTriple) -> HoareTriple:
    pre = t_body.pre
    if not isinstance(pre, And):
        raise KernelError("hoareWhile", "body precondition is not b∧p")
    if pre.right != t_body.post:
        raise KernelError("hoareWhile", "body does not preserve the invariant")
    b, p = pre.left, pre.right
    return _certify(p, While(b, t_body.cmd), And(Not(b), p))
