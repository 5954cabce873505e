"""Hypothesis strategies for syntax trees."""

from hypothesis import strategies as st

from hoarekit.syntax import (
    SKIP, ZERO, And, Assert, Assign, Eq, Exists, ForAll, IfElse, Imp, Mult, Not, Or,
    Plus, PropVar, Seq, Succ, Var, While, numeral,
)

VARS = ["A", "B", "C", "D", "x", "y1"]
ATOMS = ["A", "B", "C", "D"]

var_names = st.sampled_from(VARS)

terms = st.recursive(
    st.one_of(st.just(ZERO), var_names.map(Var), st.integers(0, 4).map(numeral)),
    lambda t: st.one_of(
        t.map(Succ),
        st.builds(Plus, t, t),
        st.builds(Mult, t, t),
    ),
    max_leaves=8,
)

equations = st.builds(Eq, terms, terms)

formulas = st.recursive(
    st.one_of(equations, st.sampled_from(ATOMS).map(PropVar)),
    lambda f: st.one_of(
        f.map(Not),
        st.builds(And, f, f),
        st.builds(Or, f, f),
        st.builds(Imp, f, f),
        st.builds(ForAll, var_names, f),
        st.builds(Exists, var_names, f),
    ),
    max_leaves=8,
)

prop_formulas = st.recursive(
    st.sampled_from(ATOMS).map(PropVar),
    lambda f: st.one_of(
        f.map(Not), st.builds(And, f, f), st.builds(Or, f, f), st.builds(Imp, f, f),
    ),
    max_leaves=6,
)

commands = st.recursive(
    st.one_of(st.builds(Assign, var_names, terms), st.just(SKIP)),
    lambda c: st.one_of(
        st.builds(Seq, c, c),
        st.builds(IfElse, formulas, c, c),
        st.builds(While, formulas, c),
        st.builds(Assert, formulas, c, formulas),
    ),
    max_leaves=6,
)
