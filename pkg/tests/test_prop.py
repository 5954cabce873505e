import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hoarekit import prop
from hoarekit.evidence import KernelError, Theorem
from hoarekit.surface import parse_formula, print_theorem
from hoarekit.syntax import L, R, And, Direction, Imp, Mode, Not, Or, PropVar

from gen import DEFAULT_EXTRA, PROP_LEAVES, QUANTIFIED_LEAVES, STRICT_UNARY, derive, is_tautology
from strategies import prop_formulas

A, B, C = PropVar("A"), PropVar("B"), PropVar("C")


def assume(f):
    """A theorem of the form ``f`` available inside a fantasy on ``f``."""
    box = []
    prop.fantasy(f, lambda h: box.append(h) or h)
    return box[0]


def pr(t):
    return print_theorem(t, "unicode")


def test_commute_and():
    t = prop.fantasy(And(A, B), lambda h: prop.join(prop.sep_right(h), prop.sep_left(h)))
    assert pr(t) == "⊢ A∧B→B∧A"


def test_double_tilde_under_path():
    t = prop.fantasy(Or(A, B), lambda h: prop.apply_prop_rule([R], prop.double_tilde_intro, h))
    assert pr(t) == "⊢ A∨B→A∨¬¬B"


def test_eight_step_derivation():
    def body(premise):
        step1 = prop.switcheroo_auto(premise)
        step2 = prop.contra_forward(step1)
        step3 = prop.fantasy(Not(B), lambda p2: prop.double_tilde_elim(prop.detach(p2, step2)))
        bor_a = prop.switcheroo_auto(step3)
        step5 = prop.switcheroo_auto(bor_a)
        step6 = prop.contra_forward(step5)
        return prop.switcheroo_auto(step6)

    assert pr(prop.fantasy(Or(A, B), body)) == "⊢ A∨B→A∨¬¬B"


def test_default_mode_caveat():
    h = prop.fantasy(And(A, B), prop.identity)
    t = prop.apply_prop_rule([L], prop.sep_left, h)
    assert pr(t) == "⊢ A→A∧B"
    assert not is_tautology(t.formula)
    with pytest.raises(KernelError, match="applyPropRule"):
        prop.apply_prop_rule([L], prop.sep_left, h, Mode.STRICT)


def test_fantasy_requires_a_theorem():
    with pytest.raises(TypeError):
        prop.fantasy(A, lambda h: A)


def test_detach():
    imp = assume(Imp(A, B))
    assert prop.detach(assume(A), imp).formula == B
    with pytest.raises(KernelError, match="ruleDetachment"):
        prop.detach(assume(C), imp)
    with pytest.raises(KernelError, match="ruleDetachment"):
        prop.detach(assume(A), assume(A))


def test_sep_errors_name_their_side():
    with pytest.raises(KernelError, match="^ruleSepL"):
        prop.sep_left(assume(A))
    with pytest.raises(KernelError, match="^ruleSepR"):
        prop.sep_right(assume(A))


@pytest.mark.parametrize("rule, src, dst", [
    (prop.double_tilde_intro, "A", "!!A"),
    (prop.double_tilde_elim, "!!A", "A"),
    (prop.contra_forward, "A -> B", "!B -> !A"),
    (prop.contra_backward, "!B -> !A", "A -> B"),
    (prop.de_morgan_forward, "!A & !B", "!(A | B)"),
    (prop.de_morgan_backward, "!(A | B)", "!A & !B"),
    (prop.de_morgan_auto, "!A & !B", "!(A | B)"),
    (prop.de_morgan_auto, "!(A | B)", "!A & !B"),
    (prop.switcheroo_forward, "A | B", "!A -> B"),
    (prop.switcheroo_backward, "!A -> B", "A | B"),
    (prop.switcheroo_auto, "!A -> B", "A | B"),
    (prop.switcheroo_auto, "A | B", "!A -> B"),
])
def test_rule_shapes(rule, src, dst):
    assert rule(assume(parse_formula(src))).formula == parse_formula(dst)


@pytest.mark.parametrize("rule, src", [
    (prop.double_tilde_elim, "!A"),
    (prop.contra_backward, "A -> B"),
    (prop.de_morgan_forward, "!A | !B"),
    (prop.de_morgan_backward, "!(A & B)"),
    (prop.switcheroo_backward, "A -> B"),
    (prop.switcheroo_forward, "A & B"),
])
def test_rule_mismatch(rule, src):
    with pytest.raises(KernelError):
        rule(assume(parse_formula(src)))


def test_direction_functions_agree_with_wrappers():
    x = assume(parse_formula("A -> B"))
    assert prop.contrapositive(x, Direction.FORWARD) == prop.contra_forward(x)
    assert prop.double_tilde(x, Direction.INTRO) == prop.double_tilde_intro(x)


def test_path_enters_not_on_either_side():
    x = assume(parse_formula("!(A & B)"))
    for side in (L, R):
        t = prop.apply_prop_rule([side, L], prop.double_tilde_intro, x)
        assert t.formula == parse_formula("!(!!A & B)")


def test_path_stops_at_atoms():
    x = assume(parse_formula("A | B"))
    t = prop.apply_prop_rule([R, L, L, R], prop.double_tilde_intro, x)
    assert t.formula == parse_formula("A | !!B")


def test_strict_registry():
    assert prop.is_equivalence(prop.double_tilde_intro)
    assert not prop.is_equivalence(prop.sep_left)
    assert not prop.is_equivalence(lambda x: x)
    assert prop.is_equivalence(prop.then(prop.double_tilde_intro, prop.double_tilde_elim))
    assert not prop.is_equivalence(prop.then(prop.double_tilde_intro, prop.sep_left))
    # a copy of a registered function does not inherit its standing
    import functools
    assert not prop.is_equivalence(functools.partial(prop.double_tilde_intro))


def test_strict_admits_equivalences():
    x = assume(parse_formula("A | B"))
    t = prop.apply_prop_rule([R], prop.double_tilde_intro, x, Mode.STRICT)
    assert t.formula == parse_formula("A | !!B")


@given(prop_formulas)
def test_double_tilde_round_trip(f):
    x = assume(f)
    assert prop.double_tilde_elim(prop.double_tilde_intro(x)) == x


@given(prop_formulas, prop_formulas)
def test_direction_round_trips(a, b):
    imp = assume(Imp(a, b))
    assert prop.contra_backward(prop.contra_forward(imp)) == imp
    nn = assume(And(Not(a), Not(b)))
    assert prop.de_morgan_backward(prop.de_morgan_forward(nn)) == nn
    no = assume(Not(Or(a, b)))
    assert prop.de_morgan_forward(prop.de_morgan_backward(no)) == no
    o = assume(Or(a, b))
    assert prop.switcheroo_backward(prop.switcheroo_forward(o)) == o


@settings(max_examples=200)
@given(st.integers(0, 2**32), st.sampled_from([PROP_LEAVES, QUANTIFIED_LEAVES]))
def test_strict_derivations_are_tautologies(seed, leaves):
    t = derive(random.Random(seed), Mode.STRICT, leaves)
    assert isinstance(t, Theorem)
    assert is_tautology(t.formula)


@given(prop_formulas, prop_formulas)
def test_sep_undoes_join(a, b):
    x, y = assume(a), assume(b)
    xy = prop.join(x, y)
    assert prop.sep(xy, L) == x
    assert prop.sep(xy, R) == y


@given(prop_formulas, st.sampled_from(STRICT_UNARY + DEFAULT_EXTRA), st.sampled_from(list(Mode)))
def test_empty_path_is_direct_application(f, rule, mode):
    x = assume(f)
    try:
        direct = rule(x)
    except KernelError:
        direct = None
    try:
        via_path = prop.apply_prop_rule([], rule, x, mode)
    except KernelError:
        via_path = None
    if mode is Mode.STRICT and not prop.is_equivalence(rule):
        assert via_path is None
    else:
        assert via_path == direct
