"""A small LCF-style checker for propositional logic, Peano arithmetic and Hoare triples."""

from .evidence import HoareTriple, KernelError, Theorem
from .syntax import (
    L, R, SKIP, ZERO, And, Assert, Assign, Direction, Eq, Exists, ForAll, IfElse,
    Imp, Mode, Mult, Not, Or, Plus, PropVar, Seq, Side, Skip, Succ, Var, While,
    Zero, numeral, seq,
)

__all__ = [
    "HoareTriple", "KernelError", "Theorem", "L", "R", "SKIP", "ZERO", "And",
    "Assert", "Assign", "Direction", "Eq", "Exists", "ForAll", "IfElse", "Imp",
    "Mode", "Mult", "Not", "Or", "Plus", "PropVar", "Seq", "Side", "Skip",
    "Succ", "Var", "While", "Zero", "numeral", "seq",
]
