"""Sealed evidence tokens.

A :class:`Theorem` or :class:`HoareTriple` can only be minted by the kernel
modules, which hold the private seal.  Calling either constructor from
outside raises ``TypeError``.
"""

from __future__ import annotations

from .syntax import Command, Formula

_SEAL = object()


class KernelError(Exception):
    """A rule refused its inputs."""

    def __init__(self, rule: str, detail: str = ""):
        self.rule = rule
        self.detail = detail
        msg = f"{rule}: Cannot construct proof"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class Theorem:
    __slots__ = ("_formula",)

    def __init__(self, formula: Formula, *, _seal=None):
        if _seal is not _SEAL:
            raise TypeError("theorems are produced by kernel rules only")
        object.__setattr__(self, "_formula", formula)

    @property
    def formula(self) -> Formula:
        return self._formula

    def __setattr__(self, name, value):
        raise AttributeError("Theorem is immutable")

    def __eq__(self, other):
        return isinstance(other, Theorem) and self._formula == other._formula

    def __hash__(self):
        return hash(("Theorem", self._formula))

    def __repr__(self):
        from .surface.printer import print_theorem
        return f"<Theorem {print_theorem(self)}>"

    def __reduce__(self):
        raise TypeError("theorems cannot be pickled")

    # immutable, so copies can share
    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self


class HoareTriple:
    __slots__ = ("_pre", "_cmd", "_post")

    def __init__(self, pre: Formula, cmd: Command, post: Formula, *, _seal=None):
        if _seal is not _SEAL:
            raise TypeError("triples are produced by Hoare rules only")
        object.__setattr__(self, "_pre", pre)
        object.__setattr__(self, "_cmd", cmd)
        object.__setattr__(self, "_post", post)

    @property
    def pre(self) -> Formula:
        return self._pre

    @property
    def cmd(self) -> Command:
        return self._cmd

    @property
    def post(self) -> Formula:
        return self._post

    def __setattr__(self, name, value):
        raise AttributeError("HoareTriple is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, HoareTriple)
            and (self._pre, self._cmd, self._post) == (other._pre, other._cmd, other._post)
        )

    def __hash__(self):
        return hash(("HoareTriple", self._pre, self._cmd, self._post))

    def __repr__(self):
        from .surface.printer import print_triple
        return f"<HoareTriple {print_triple(self)}>"

    def __reduce__(self):
        raise TypeError("triples cannot be pickled")

    # immutable, so copies can share
    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self


def _prove(formula: Formula) -> Theorem:
    return Theorem(formula, _seal=_SEAL)


def _certify(pre: Formula, cmd: Command, post: Formula) -> HoareTriple:
    return HoareTriple(pre, cmd, post, _seal=_SEAL)
