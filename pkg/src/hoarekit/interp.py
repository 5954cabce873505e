"""Big-step evaluation of terms, formulas and commands."""

from __future__ import annotations

from typing import Iterable, Mapping, Optional

from .syntax import (
    And, Assert, Assign, Command, Eq, Exists, ForAll, Formula, IfElse, Imp,
    Mult, Not, Or, Plus, PropVar, Seq, Skip, Succ, Term, Var, While, Zero,
)

Context = Mapping[str, int]

# values are unsigned machine words
MAX_VALUE = 2**64 - 1


class RunError(Exception):
    pass


class UnboundVariable(RunError):
    def __init__(self, var: str):
        self.var = var
        super().__init__(f"Element not found: {var}")


class PreconditionFailed(RunError):
    def __init__(self):
        super().__init__("Assert: Pre-condition does not match!")


class PostconditionFailed(RunError):
    def __init__(self):
        super().__init__("Assert: Post-condition does not match!")


class BudgetExhausted(RunError):
    def __init__(self, steps: int):
        self.steps = steps
        super().__init__(f"step budget of {steps} exhausted")


class ArithmeticOverflow(RunError):
    def __init__(self):
        super().__init__(f"arithmetic overflow: value exceeds {MAX_VALUE}")


def _lookup(ctx: Context, v: str) -> int:
    try:
        return ctx[v]
    except KeyError:
        raise UnboundVariable(v) from None


def _checked(n: int) -> int:
    if n > MAX_VALUE:
        raise ArithmeticOverflow()
    return n


def aeval(ctx: Context, t: Term) -> int:
    match t:
        case Var(v):
            return _lookup(ctx, v)
        case Zero():
            return 0
        case Succ(a):
            # numerals are long Succ chains; count them without recursing
            n = 0
            while isinstance(t, Succ):
                n += 1
                t = t.arg
            return _checked(n + aeval(ctx, t))
        case Plus(a, b):
            return _checked(aeval(ctx, a) + aeval(ctx, b))
        case Mult(a, b):
            return _checked(aeval(ctx, a) * aeval(ctx, b))
    raise TypeError(f"not a term: {t!r}")


def beval(ctx: Context, f: Formula, domain: Optional[Iterable[int]] = None) -> bool:
    """Truth value of ``f``.

    By default quantifiers are erased and quantified variables are read from
    ``ctx`` like any other.  With a finite ``domain`` they range over it
    instead, which is what a runtime check of a quantified condition needs.
    A propositional letter is true when it is bound to a nonzero value.
    """
    values = None if domain is None else tuple(domain)
    return _beval(ctx, f, values)


def _beval(ctx: Context, f: Formula, values) -> bool:
    match f:
        case Eq(a, b):
            return aeval(ctx, a) == aeval(ctx, b)
        case ForAll(v, body) | Exists(v, body):
            if values is None:
                return _beval(ctx, body, values)
            test = all if isinstance(f, ForAll) else any
            return test(_beval({**ctx, v: n}, body, values) for n in values)
        case PropVar(v):
            return _lookup(ctx, v) != 0
        case Not(a):
            return not _beval(ctx, a, values)
        case And(a, b):
            x, y = _beval(ctx, a, values), _beval(ctx, b, values)
            return x and y
        case Or(a, b):
            x, y = _beval(ctx, a, values), _beval(ctx, b, values)
            return x or y
        case Imp(a, b):
            x, y = _beval(ctx, a, values), _beval(ctx, b, values)
            return (not x) or y
    raise TypeError(f"not a formula: {f!r}")


class _Budget:
    __slots__ = ("limit", "left")

    def __init__(self, limit: Optional[int]):
        self.limit = limit
        self.left = limit

    def tick(self):
        if self.left is None:
            return
        if self.left <= 0:
            raise BudgetExhausted(self.limit)
        self.left -= 1


def execute(ctx: Context, c: Command, max_steps: Optional[int] = None) -> dict[str, int]:
    """Run ``c`` from ``ctx`` and return the final context.

    With ``max_steps`` set, every command node evaluated (each loop
    iteration included) costs one step.
    """
    budget = _Budget(max_steps)
    env = dict(ctx)
    _exec(env, c, budget)
    return env


def _exec(env: dict, c: Command, budget: _Budget) -> None:
    budget.tick()
    # walk sequences along their right spine so long programs stay shallow
    while isinstance(c, Seq):
        _exec(env, c.first, budget)
        c = c.second
        budget.tick()
    match c:
        case Skip():
            pass
        case Assign(v, e):
            env[v] = aeval(env, e)
        case IfElse(b, t, e):
            _exec(env, t if beval(env, b) else e, budget)
        case While(b, body):
            while beval(env, b):
                _exec(env, body, budget)
                budget.tick()
        case Assert(p, body, q):
            if not beval(env, p):
                raise PreconditionFailed()
            _exec(env, body, budget)
            if not beval(env, q):
                raise PostconditionFailed()
        case _:
            raise TypeError(f"not a command: {c!r}")
