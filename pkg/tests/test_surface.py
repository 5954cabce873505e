import pytest
from hypothesis import given, settings

from hoarekit.surface import (
    ParseError, parse_formula, parse_program, parse_term, print_formula,
    print_program, print_term,
)
from hoarekit.syntax import (
    SKIP, ZERO, And, Assign, Eq, ForAll, IfElse, Imp, Mult, Not, Or, Plus,
    PropVar, Seq, Succ, Var, While, numeral,
)

from strategies import commands, formulas, terms

A, B, C, D = (Var(v) for v in "ABCD")


def test_parse_examples():
    assert parse_term("A+S0") == Plus(A, Succ(ZERO))
    assert parse_term("3") == numeral(3)
    assert parse_formula("forall C: forall D: D+S(C) = S(D)+C") == ForAll(
        "C", ForAll("D", Eq(Plus(D, Succ(C)), Plus(Succ(D), C))))


def test_parse_programs():
    assert parse_program("skip;") == SKIP
    assert parse_program("A := 0; while (!(A = B)) { A := S(A); }") == Seq(
        Assign("A", ZERO), While(Not(Eq(A, B)), Assign("A", Succ(A))))
    assert parse_program("if (A=0) { A := S(A); } else { skip; }") == IfElse(
        Eq(A, ZERO), Assign("A", Succ(A)), SKIP)
    assert parse_program("while (0=0) {}") == While(Eq(ZERO, ZERO), SKIP)


def test_precedence_and_associativity():
    assert parse_formula("P -> Q -> P") == Imp(PropVar("P"), Imp(PropVar("Q"), PropVar("P")))
    assert parse_formula("P | Q & P") == Or(PropVar("P"), And(PropVar("Q"), PropVar("P")))
    assert parse_term("A+B+C") == Plus(Plus(A, B), C)
    assert parse_term("A+B*C") == Plus(A, Mult(B, C))
    assert parse_term("SA*B") == Mult(Succ(A), B)


def test_unicode_aliases_and_angle_groups():
    assert parse_formula("∀C:<∀D:(D=C)→¬(C=D)>") == parse_formula(
        "forall C: ((forall D: D = C) -> !(C = D))")
    assert parse_formula("A·B=0 ∧ P ∨ Q") == parse_formula("A*B=0 & P | Q")


@pytest.mark.parametrize("text, line, col", [
    ("A + ", 1, 5),
    ("A = B &", 1, 8),
    ("forall S: A=A", 1, 8),
    ("(A = B", 1, 7),
    ("A = B\n  & ? ", 2, 5),
])
def test_parse_errors_carry_positions(text, line, col):
    with pytest.raises(ParseError) as e:
        parse_formula(text)
    assert (e.value.line, e.value.col) == (line, col)


def test_parse_error_lists_expected_tokens():
    with pytest.raises(ParseError) as e:
        parse_program("A := 0")
    assert ";" in e.value.expected
    assert str(e.value).startswith("1:7:")


# -- printing ---------------------------------------------------------------

@pytest.mark.parametrize("text, out", [
    ("SSS0", "SSS0"),
    ("S(A+B)", "S(A+B)"),
    ("A+(B+C)", "A+(B+C)"),
    ("(A+B)+C", "A+B+C"),
    ("(A+B)*C", "(A+B)*C"),
    ("A*(B*C)", "A*(B*C)"),
    ("S(A*B)", "S(A*B)"),
])
def test_print_terms(text, out):
    assert print_term(parse_term(text)) == out


@pytest.mark.parametrize("text, out", [
    ("A|B -> A|!!B", "A∨B→A∨¬¬B"),
    ("!(A=0) & 0=0", "¬A=0∧0=0"),
    ("!(A | B)", "¬(A∨B)"),
    ("(A -> B) -> C", "(A→B)→C"),
    ("A & (B & C)", "A∧(B∧C)"),
    ("(A | B) & C", "(A∨B)∧C"),
    ("forall C: forall D: D+SC = SD+C", "∀C:∀D:(D+SC=SD+C)"),
    ("forall C: ((forall D: D=C) -> C=C)", "∀C:(∀D:(D=C)→C=C)"),
    ("!!exists C: A+C=B", "¬¬∃C:(A+C=B)"),
])
def test_print_formulas(text, out):
    assert print_formula(parse_formula(text), "unicode") == out


def test_ascii_style():
    g = parse_formula("forall C: !(A=B) | P -> Q")
    assert print_formula(g, "ascii") == "forall C:(!A=B)|P->Q"


def test_print_programs():
    c = parse_program("A := 0; while (!(A = B)) { A := S(A); }")
    assert print_program(c, "unicode") == "A := 0; while (¬A=B) do {A := SA;};"
    assert print_program(parse_program("if (!(A=0)) { skip; } else { A := A+S0; }"), "unicode") == (
        "if (¬A=0) then {;} else {A := A+S0;};")
    assert print_program(Seq(Seq(SKIP, SKIP), SKIP)) == "{; ;} ;"


def test_style_env(monkeypatch):
    monkeypatch.setenv("HOAREKIT_STYLE", "ascii")
    assert print_formula(Not(PropVar("P"))) == "!P"


# -- round trips -------------------------------------------------------------

@settings(max_examples=300)
@given(terms)
def test_term_round_trip(t):
    assert parse_term(print_term(t)) == t


@settings(max_examples=300)
@given(formulas)
def test_formula_round_trip(g):
    for style in ("unicode", "ascii"):
        assert parse_formula(print_formula(g, style)) == g


@settings(max_examples=300)
@given(commands)
def test_command_round_trip(c):
    for style in ("unicode", "ascii"):
        assert parse_program(print_program(c, style)) == c


@given(formulas)
def test_print_is_canonical(g):
    text = print_formula(g, "unicode")
    assert print_formula(parse_formula(print_formula(g, "ascii")), "unicode") == text
