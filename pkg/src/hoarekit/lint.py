"""Advisory checks; they never change what the kernel accepts."""

from __future__ import annotations

from .syntax import And, Exists, ForAll, Formula, Imp, Not, Or


def shadowed_binders(f: Formula) -> list[str]:
    """Variables re-bound inside the scope of a binder of the same name."""
    out: list[str] = []
    stack = [(f, frozenset())]
    while stack:
        g, bound = stack.pop()
        match g:
            case ForAll(v, body) | Exists(v, body):
                if v in bound and v not in out:
                    out.append(v)
                stack.append((body, bound | {v}))
            case Not(a):
                stack.append((a, bound))
            case And(a, b) | Or(a, b) | Imp(a, b):
                stack.append((a, bound))
                stack.append((b, bound))
    return out


def lint_formula(f: Formula) -> list[str]:
    return [f"binder {v} shadows an enclosing binder" for v in shadowed_binders(f)]


def quantified_reads(f: Formula) -> list[str]:
    """Binders whose values beval would take from the context, since it erases quantifiers."""
    out: list[str] = []
    stack = [f]
    while stack:
        g = stack.pop()
        match g:
            case ForAll(v, body) | Exists(v, body):
                if v not in out:
                    out.append(v)
                stack.append(body)
            case Not(a):
                stack.append(a)
            case And(a, b) | Or(a, b) | Imp(a, b):
                stack.extend((a, b))
    return out
