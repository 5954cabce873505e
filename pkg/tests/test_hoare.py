import pytest
from hypothesis import given

from hoarekit import fol, hoare, prop
from hoarekit.evidence import KernelError
from hoarekit.surface import parse_formula, parse_term, print_theorem, print_triple
from hoarekit.syntax import SKIP, And, Not, Var, While, numeral

from strategies import formulas
from test_prop import assume

f = parse_formula
A, B = Var("A"), Var("B")


def pr(t):
    return print_triple(t, "unicode")


def test_skip():
    assert pr(hoare.h_skip(f("A = SSS0"))) == "{A=SSS0} ; {A=SSS0}"


def test_assign():
    ht = hoare.h_assign("A", B, f("A=A"))
    assert pr(ht) == "{B=B} A := B; {A=A}"
    ht = hoare.h_assign("A", parse_term("B+S0"), f("A = SS0 & 0 = 0"))
    assert pr(ht) == "{B+S0=SS0∧0=0} A := B+S0; {A=SS0∧0=0}"


def test_consequence():
    e = parse_term("B+S0")
    ht = hoare.h_assign("A", e, f("A = SS0 & 0 = 0"))
    pre = prop.fantasy(f("B+S0 = SS0 & 0 = 0"), prop.identity)
    post = prop.fantasy(f("A = SS0 & 0 = 0"), prop.sep_left)
    assert print_theorem(post) == "⊢ A=SS0∧0=0→A=SS0"
    assert pr(hoare.h_consequence(pre, ht, post)) == "{B+S0=SS0∧0=0} A := B+S0; {A=SS0}"
    with pytest.raises(KernelError, match="hoareConsequence"):
        hoare.h_consequence(post, ht, pre)
    with pytest.raises(KernelError, match="hoareConsequence"):
        hoare.h_consequence(assume(f("A=A")), ht, post)


def test_sequence():
    c1 = hoare.h_assign("B", numeral(0), f("B = 0 & A = A"))
    c2 = hoare.h_assign("C", A, f("B = 0 & C = A"))
    assert pr(hoare.h_sequence(c1, c2)) == "{0=0∧A=A} B := 0; C := A; {B=0∧C=A}"
    with pytest.raises(KernelError, match="hoareSequence"):
        hoare.h_sequence(c2, c1)


def test_conditional():
    ht1 = hoare.h_skip(f("!(A = 0) & 0 = 0"))
    ht2 = hoare.h_assign("A", parse_term("SA"), f("!(A = 0) & 0 = 0"))

    def body(pq):
        nz = fol.spec(A, fol.peano_axiom(1, "A"))
        return prop.join(nz, prop.sep_right(pq))

    prf1 = prop.fantasy(f("A = 0 & 0 = 0"), body)
    prf2 = prop.fantasy(f("!(A = 0) & 0 = 0"), prop.identity)
    ht3 = hoare.h_consequence(prf1, ht2, prf2)
    assert pr(hoare.h_conditional(ht3, ht1)) == "{0=0} if (A=0) then {A := SA;} else {;}; {¬A=0∧0=0}"
    with pytest.raises(KernelError, match="hoareConditional"):
        hoare.h_conditional(ht1, ht3)
    with pytest.raises(KernelError, match="hoareConditional"):
        hoare.h_conditional(ht3, hoare.h_skip(f("!(A = 0) & 1 = 1")))


def test_while():
    ht1 = hoare.h_skip(f("0 = 0"))
    pre = prop.fantasy(f("0 = 0 & 0 = 0"), prop.sep_right)
    post = prop.fantasy(f("0 = 0"), prop.identity)
    ht2 = hoare.h_consequence(pre, ht1, post)
    out = hoare.h_while(ht2)
    assert pr(out) == "{0=0} while (0=0) do {;}; {¬0=0∧0=0}"
    assert out.cmd == While(f("0=0"), SKIP)
    with pytest.raises(KernelError, match="hoareWhile"):
        hoare.h_while(ht1)
    with pytest.raises(KernelError, match="hoareWhile"):
        hoare.h_while(hoare.h_assign("A", numeral(1), f("A = 0 & 0 = 0")))


def test_assignment_substitutes_under_binders():
    ht = hoare.h_assign("A", parse_term("SA"), f("exists C: A+C = B"))
    assert pr(ht) == "{∃C:(SA+C=B)} A := SA; {∃C:(A+C=B)}"


@given(formulas)
def test_skip_triple_has_equal_conditions(p):
    ht = hoare.h_skip(p)
    assert ht.pre == ht.post == p


@given(formulas, formulas)
def test_identity_consequence_is_the_identity(p, q):
    ht = hoare.h_assign("A", Var("B"), q)
    same_pre = prop.fantasy(ht.pre, prop.identity)
    same_post = prop.fantasy(ht.post, prop.identity)
    assert hoare.h_consequence(same_pre, ht, same_post) == ht
    ht = hoare.h_skip(p)
    assert hoare.h_consequence(prop.fantasy(p, prop.identity), ht, prop.fantasy(p, prop.identity)) == ht


@given(formulas, formulas)
def test_while_concludes_negated_guard_and_invariant(b, inv):
    body = hoare.h_skip(And(b, inv))
    body = hoare.h_consequence(prop.fantasy(And(b, inv), prop.identity), body,
                               prop.fantasy(And(b, inv), prop.sep_right))
    out = hoare.h_while(body)
    assert (out.pre, out.cmd, out.post) == (inv, While(b, SKIP), And(Not(b), inv))
