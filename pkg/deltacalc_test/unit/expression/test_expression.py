# -*- coding: utf-8 -*-

import math

from unittest import TestCase

from hypothesis import given, settings, strategies as st

from deltacalc.engine.derivatives import delta_derivative, nabla_derivative
from deltacalc.exceptions import (
    ExpressionSyntaxError, DepthExceeded, UnsupportedNode
)
from deltacalc.expression.calculus import (
    classical_diff, to_function, differentiate, ExpressionDerivative,
    SYMBOLIC_FALLBACK
)
from deltacalc.expression.canonical import canonicalize
from deltacalc.expression.evaluate import evaluate
from deltacalc.expression.matcher import match_catalog, MatchResult, RULES
from deltacalc.expression.nodes import (
    Constant, Var, Add, Mul, Div, PowInt, ConstPow, Call
)
from deltacalc.expression.parser import parse
from deltacalc.expression.render import format_expr, format_constant
from deltacalc.catalog.checks import list_catalog
from deltacalc.scales.parsers import parse_scale
from deltacalc.utils import is_close
from deltacalc_test.test_base import assert_close
from deltacalc_test.unit.expression.strategies import canonical_trees, smooth_trees

T = Var()

# the twenty table shapes with k=2, c=3, n=3
REPRESENTATIVES = [
    ('B01', '2', dict(k=2)),
    ('B02', 't^3', dict(n=3)),
    ('B03', '2^t', dict(k=2)),
    ('B04', '(t + 2)^3', dict(k=2, n=3)),
    ('R01', 'sqrt(t)', dict()),
    ('R02', 'sqrt(2 + t^3)', dict(k=2, n=3)),
    ('R03', 't^3*sqrt(2 + 3*t)', dict(k=2, c=3, n=3)),
    ('L01', 'ln(t^3)', dict(n=3)),
    ('L02', 'ln(2*t + 3)', dict(k=2, c=3)),
    ('E01', 'exp(2*t)', dict(k=2)),
    ('E02', 't^3*exp(2*t)', dict(k=2, n=3)),
    ('T01', 'sin(t)', dict()),
    ('T02', 'cos(t)', dict()),
    ('TM01', 't*sin(2*t)', dict(k=2)),
    ('TM02', 't*cos(2*t)', dict(k=2)),
    ('TE01', 'exp(2*t)*sin(3*t)', dict(k=2, c=3)),
    ('TE02', 'exp(2*t)*cos(3*t)', dict(k=2, c=3)),
    ('H01', 'sinh(2*t)', dict(k=2)),
    ('H02', 'cosh(2*t)', dict(k=2)),
    ('H03', 'sinh(2*t)*cosh(2*t)', dict(k=2)),
]

def central_difference(expr, t, h=1e-5):
    return (evaluate(expr, t + h) - evaluate(expr, t - h)) / (2 * h)

class TestParser(TestCase):
    def test_grammar(self):
        '''Test parsing follows precedence and associativity
        '''
        self.assertEquals(
            parse('t^3 * exp(2*t)'),
            Mul(PowInt(T, 3), Call('exp', Mul(Constant(2), T)))
        )
        self.assertEquals(
            parse('ln(3*t + 1)'),
            Call('ln', Add(Mul(Constant(3), T), Constant(1)))
        )
        self.assertEquals(parse('-t^2'), Mul(Constant(-1), PowInt(T, 2)))
        self.assertEquals(parse('2^t'), ConstPow(Constant(2), T))
        self.assertEquals(parse('2^3^2'), PowInt(Constant(2), 9))
        self.assertEquals(parse('t^-2'), PowInt(T, -2))
        self.assertEquals(parse('  1.5e1 *t'), Mul(Constant(15), T))

    def test_call_needs_parentheses(self):
        '''Test a function name without parentheses is rejected at the operand
        '''
        with self.assertRaises(ExpressionSyntaxError) as ctx:
            parse('sin t')
        self.assertEquals(ctx.exception.offset, 4)
        self.assertIn('(', ctx.exception.expected)

    def test_syntax_errors(self):
        '''Test offsets of malformed input
        '''
        cases = [('2*', 2), ('t^t', 1), ('x', 0), ('1/0', 1), ('t +', 3), ('(t', 2), ('', 0)]
        for text, offset in cases:
            with self.assertRaises(ExpressionSyntaxError) as ctx:
                parse(text)
            self.assertEquals(ctx.exception.offset, offset, text)

    def test_exponent_range(self):
        '''Test integer exponents are bounded unless the base is a positive constant
        '''
        self.assertEquals(parse('t^60'), PowInt(T, 60))
        with self.assertRaises(ExpressionSyntaxError):
            parse('t^61')
        with self.assertRaises(ExpressionSyntaxError):
            parse('t^0.5')
        self.assertEquals(parse('2^0.5'), ConstPow(Constant(2), Constant(0.5)))

    def test_length(self):
        with self.assertRaises(ExpressionSyntaxError):
            parse('t+' * 2048 + 't')

    def test_depth(self):
        '''Test deeply nested input raises DepthExceeded
        '''
        with self.assertRaises(DepthExceeded):
            parse('(' * 70 + 't' + ')' * 70)
        with self.assertRaises(DepthExceeded):
            parse('-' * 70 + 't')
        self.assertEquals(parse('((t))'), T)

    def test_depth_of_long_divisor_and_exponent(self):
        '''Test long chains under / and ^ raise DepthExceeded, not RecursionError
        '''
        chain = '+'.join(['t'] * 1500)
        with self.assertRaises(DepthExceeded) as ctx:
            parse('1/(' + chain + ')')
        self.assertEquals(ctx.exception.details['offset'], 1)
        with self.assertRaises(DepthExceeded):
            parse('2^(' + chain + ')')
        with self.assertRaises(DepthExceeded):
            parse(chain)

    def test_error_text(self):
        with self.assertRaises(ExpressionSyntaxError) as ctx:
            parse('2*')
        self.assertIn('at offset 2', str(ctx.exception))
        self.assertTrue(str(ctx.exception).startswith('syntax-error: '))

class TestCanonical(TestCase):
    def test_examples(self):
        '''Test folding, sorting and power collection
        '''
        self.assertEquals(canonicalize(parse('t*t')), PowInt(T, 2))
        self.assertEquals(canonicalize(parse('2*3*t')), Mul(Constant(6), T))
        self.assertEquals(
            canonicalize(parse('exp(t)*t^2')), Mul(PowInt(T, 2), Call('exp', T))
        )
        self.assertEquals(canonicalize(parse('t + 1')), Add(Constant(1), T))
        self.assertEquals(canonicalize(parse('t/2')), Mul(Constant(0.5), T))
        self.assertEquals(canonicalize(parse('sin(0) + 1')), Constant(1))

    def test_no_simplification(self):
        '''Test like terms and square roots are left alone
        '''
        self.assertEquals(
            canonicalize(parse('sqrt(t)*sqrt(t)')), PowInt(Call('sqrt', T), 2)
        )
        self.assertEquals(
            canonicalize(parse('t - t')), Add(T, Mul(Constant(-1), T))
        )
        self.assertEquals(canonicalize(parse('ln(2)')), Call('ln', Constant(2)))
        self.assertEquals(canonicalize(parse('sqrt(-1)')), Call('sqrt', Constant(-1)))

    def test_power_limits(self):
        '''Test powers are merged only while the exponent stays in range
        '''
        self.assertEquals(canonicalize(parse('(t^2)^3')), PowInt(T, 6))
        self.assertEquals(
            canonicalize(parse('(t^16)^4')), PowInt(PowInt(T, 16), 4)
        )
        self.assertEquals(
            canonicalize(parse('t^40*t^30')), Mul(PowInt(T, 30), PowInt(T, 40))
        )
        self.assertEquals(canonicalize(parse('t^40*t^-30')), PowInt(T, 10))
        self.assertEquals(canonicalize(parse('t*t^-1')), Constant(1))

    @given(canonical_trees)
    @settings(max_examples=200, derandomize=True, deadline=None)
    def test_idempotent(self, expr):
        self.assertEquals(canonicalize(expr), expr)

class TestRender(TestCase):
    def test_examples(self):
        '''Test minimal parentheses
        '''
        self.assertEquals(format_expr(Mul(Constant(2), T)), '2*t')
        self.assertEquals(format_expr(PowInt(Add(T, Constant(1)), 3)), '(t + 1)^3')
        self.assertEquals(format_expr(Call('ln', T)), 'ln(t)')
        self.assertEquals(format_expr(Add(T, Mul(Constant(-2), T))), 't - 2*t')
        self.assertEquals(format_expr(Mul(Constant(-1), Add(T, Constant(1)))), '-(t + 1)')
        self.assertEquals(format_expr(ConstPow(Constant(2), Mul(Constant(2), T))), '2^(2*t)')
        self.assertEquals(format_expr(PowInt(T, -3)), 't^-3')

    def test_constants(self):
        self.assertEquals(format_constant(3.0), '3')
        self.assertEquals(format_constant(0.1), '0.1')
        self.assertEquals(format_constant(1e20), '1e+20')

    @given(canonical_trees)
    @settings(max_examples=1000, derandomize=True, deadline=None)
    def test_round_trip(self, expr):
        '''Test rendering then parsing gives back the canonical tree
        '''
        self.assertEquals(canonicalize(parse(format_expr(expr))), expr)

class TestMatcher(TestCase):
    def test_rules_follow_the_table(self):
        '''Test every catalog entry has one rule
        '''
        self.assertEquals(
            sorted(entry_id for entry_id, _ in RULES),
            sorted(entry.id for entry in list_catalog())
        )

    def test_representatives(self):
        '''Test each table shape matches its id and rebuilds the same tree
        '''
        for entry_id, text, bindings in REPRESENTATIVES:
            expr = canonicalize(parse(text))
            match = match_catalog(expr)
            self.assertEquals(match, MatchResult(entry_id, bindings), text)
            self.assertEquals(match.build(), expr, text)

    def test_examples(self):
        self.assertEquals(
            match_catalog(canonicalize(parse('exp(2*t)*sin(3*t)'))),
            MatchResult('TE01', dict(k=2, c=3))
        )
        self.assertEquals(
            match_catalog(canonicalize(parse('exp(2*t)'))), MatchResult('E01', dict(k=2))
        )
        self.assertIsNone(match_catalog(canonicalize(parse('t + sin(t)'))))

    def test_exponential_through_log(self):
        '''Test exp(ln(k)*t) is recognized as k^t when k is positive
        '''
        match = match_catalog(canonicalize(parse('exp(ln(2)*t)')))
        self.assertEquals(match, MatchResult('B03', dict(k=2)))
        self.assertEquals(match.build(), ConstPow(Constant(2), T))
        self.assertIsNone(match_catalog(canonicalize(parse('exp(ln(-1)*t)'))))

    def test_constraints_reject(self):
        '''Test shapes whose parameters break a constraint do not match
        '''
        self.assertIsNone(match_catalog(canonicalize(parse('t^-2'))))
        self.assertIsNone(match_catalog(canonicalize(parse('ln(t^-1)'))))

    def test_catalog_agrees_with_quotient(self):
        '''Test catalog values agree with the difference quotient at scattered points
        '''
        scales = [parse_scale('Z'), parse_scale('hZ:0.5')]
        for entry_id, text, _ in REPRESENTATIVES:
            derivative = ExpressionDerivative(parse(text))
            self.assertEquals(derivative.provenance, entry_id)
            for ts in scales:
                for t in (0.5, 1.0, 2.0, 3.0):
                    if not ts.contains(t):
                        continue
                    closed = derivative(ts, t)
                    quotient = delta_derivative(ts, derivative.function, t).value
                    self.assertTrue(
                        is_close(closed, quotient, rtol=1e-10),
                        '{} at {} on {}: {} vs {}'.format(text, t, ts.spec, closed, quotient)
                    )

class TestClassicalDiff(TestCase):
    def test_examples(self):
        '''Test the power, chain and quotient rules
        '''
        self.assertEquals(classical_diff(parse('t^3')), Mul(Constant(3), PowInt(T, 2)))
        self.assertEquals(
            classical_diff(parse('exp(2*t)')),
            Mul(Constant(2), Call('exp', Mul(Constant(2), T)))
        )
        self.assertEquals(classical_diff(parse('ln(t)')), Div(Constant(1), T))
        self.assertEquals(classical_diff(parse('5')), Constant(0))

    def test_every_function(self):
        '''Test each function rule against a central difference
        '''
        for fn in ('sqrt', 'ln', 'exp', 'sin', 'cos', 'sinh', 'cosh'):
            expr = Call(fn, Mul(Constant(2), T))
            assert_close(
                evaluate(classical_diff(expr), 0.7), central_difference(expr, 0.7),
                rtol=1e-8, msg=fn
            )
        expr = parse('2^t')
        assert_close(evaluate(classical_diff(expr), 1.5), math.log(2) * 2 ** 1.5)

    def test_unsupported(self):
        with self.assertRaises(UnsupportedNode):
            classical_diff(Call('tan', T))

    def test_power_at_the_exponent_limit(self):
        '''Test d/dt t^-60 keeps every integer power within 60
        '''
        for source in ('t^-60', '(2*t + 1)^-60'):
            derivative = classical_diff(parse(source))
            stack = [derivative]
            while stack:
                node = stack.pop()
                if isinstance(node, PowInt):
                    self.assertLessEqual(abs(node.exponent), 60, source)
                stack.extend(node.children())
            assert_close(
                evaluate(derivative, 1.1), central_difference(parse(source), 1.1),
                rtol=1e-7, msg=source
            )
        assert_close(evaluate(classical_diff(parse('t^-60')), 1.1), -60 * 1.1 ** -61)

    @given(smooth_trees, st.floats(min_value=0.5, max_value=1.5))
    @settings(max_examples=100, derandomize=True, deadline=None)
    def test_matches_central_difference(self, expr, t):
        '''Test symbolic derivatives agree with central differences
        '''
        symbolic = evaluate(classical_diff(expr), t)
        numeric = central_difference(expr, t)
        scale = max(1.0, abs(symbolic), abs(evaluate(expr, t)))
        self.assertLessEqual(abs(symbolic - numeric), 1e-6 * scale, format_expr(expr))

    def test_to_function(self):
        f = to_function(parse('t^2'))
        self.assertEquals(f(3.0), 9.0)
        self.assertEquals(f.classical_derivative(3.0), 6.0)
        self.assertEquals(f.name, 't^2')

class TestDifferentiate(TestCase):
    def test_catalog_path(self):
        '''Test a table shape is evaluated by its closed form
        '''
        report = differentiate(parse('t^2'), parse_scale('Z'), 3)
        self.assertEquals(report.value, 7)
        self.assertEquals(report.provenance, 'B02')
        self.assertEquals(report.diagnostics['branch'], 'closed-form')

    def test_symbolic_fallback(self):
        '''Test other trees fall back to the difference quotient
        '''
        report = differentiate(parse('t + sin(t)'), parse_scale('Z'), 0)
        assert_close(report.value, 1 + math.sin(1))
        self.assertEquals(report.provenance, SYMBOLIC_FALLBACK)

    def test_dense_point(self):
        '''Test the classical limit at right-dense points
        '''
        report = differentiate(parse('t^2'), parse_scale('R'), 3)
        assert_close(report.value, 6)
        self.assertEquals(report.provenance, 'B02')
        self.assertEquals(report.diagnostics['branch'], 'limit')
        self.assertEquals(report.mu_used, 0)

        report = differentiate(parse('t + sin(t)'), parse_scale('R'), 0)
        assert_close(report.value, 2.0)

    def test_nabla(self):
        '''Test the backward derivative through both paths
        '''
        ts = parse_scale('Z')
        self.assertEquals(differentiate(parse('t^2'), ts, 3, nabla=True).value, 5)
        f = to_function(parse('t + sin(t)'))
        report = differentiate(parse('t + sin(t)'), ts, 1, nabla=True)
        assert_close(report.value, nabla_derivative(ts, f, 1).value)
        assert_close(report.value, 1 + math.sin(1))

    def test_prepared_once(self):
        derivative = ExpressionDerivative(parse('t*t'))
        self.assertEquals(derivative.expr, PowInt(T, 2))
        self.assertEquals(derivative.match, MatchResult('B02', dict(n=2)))
        ts = parse_scale('hZ:0.5')
        for t, expected in ((0, 0.5), (0.5, 1.5), (1, 2.5)):
            assert_close(derivative(ts, t), expected)
