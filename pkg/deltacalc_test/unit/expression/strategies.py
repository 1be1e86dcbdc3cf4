# -*- coding: utf-8 -*-
'''hypothesis strategies for expression trees.'''

from hypothesis import strategies as st

from deltacalc.expression.canonical import canonicalize
from deltacalc.expression.nodes import (
    Constant, Var, Add, Sub, Mul, Div, PowInt, ConstPow, Call, FUNCTIONS
)

# nonzero and exactly representable, so folded products never vanish
CONSTANTS = st.sampled_from([0.5, 1.5, 2.0, 3.0, -1.0, -2.5, 0.25, 7.0])
EXPONENTS = st.integers(min_value=-3, max_value=4).filter(lambda n: n not in (0, 1))

leaves = st.one_of(CONSTANTS.map(Constant), st.just(Var()))

# denominators that can never fold to zero
denominators = st.one_of(
    st.just(Var()),
    EXPONENTS.map(lambda n: PowInt(Var(), n)),
    CONSTANTS.map(lambda c: Add(Constant(abs(c) + 1), PowInt(Var(), 2))),
    CONSTANTS.map(lambda c: Call('exp', Mul(Constant(c), Var()))),
)

def _extend(children):
    return st.one_of(
        st.tuples(children, children).map(lambda pair: Add(*pair)),
        st.tuples(children, children).map(lambda pair: Sub(*pair)),
        st.tuples(children, children).map(lambda pair: Mul(*pair)),
        st.tuples(children, denominators).map(lambda pair: Div(*pair)),
        st.tuples(children, EXPONENTS).map(lambda pair: PowInt(*pair)),
        st.tuples(CONSTANTS.map(abs).map(Constant), children).map(lambda pair: ConstPow(*pair)),
        st.tuples(st.sampled_from(FUNCTIONS), children).map(lambda pair: Call(*pair)),
    )

raw_trees = st.recursive(leaves, _extend, max_leaves=10)
canonical_trees = raw_trees.map(canonicalize)

# trees whose classical derivative is well conditioned on [0.5, 1.5]
SMOOTH_CONSTANTS = st.sampled_from([0.5, 1.0, 1.5, -0.5, -1.0, 2.0])

def _linear(c):
    return Mul(Constant(c), Var())

smooth_leaves = st.one_of(
    SMOOTH_CONSTANTS.map(Constant),
    st.just(Var()),
    st.integers(min_value=2, max_value=3).map(lambda n: PowInt(Var(), n)),
    st.tuples(st.sampled_from(['exp', 'sinh', 'cosh']), SMOOTH_CONSTANTS)
        .map(lambda pair: Call(pair[0], _linear(pair[1]))),
    st.just(Call('ln', Add(Constant(2.0), PowInt(Var(), 2)))),
    SMOOTH_CONSTANTS.map(lambda c: Call('sqrt', Add(Constant(abs(c) + 1), _linear(abs(c))))),
    SMOOTH_CONSTANTS.map(lambda c: ConstPow(Constant(abs(c) + 1), Var())),
)

def _smooth_extend(children):
    return st.one_of(
        st.tuples(children, children).map(lambda pair: Add(*pair)),
        st.tuples(children, children).map(lambda pair: Sub(*pair)),
        st.tuples(children, children).map(lambda pair: Mul(*pair)),
        st.tuples(st.sampled_from(['sin', 'cos']), smooth_leaves).map(lambda pair: Call(*pair)),
        children.map(lambda e: Div(e, Add(Constant(2.0), PowInt(Var(), 2)))),
    )

smooth_trees = st.recursive(smooth_leaves, _smooth_extend, max_leaves=6)
