# -*- coding: utf-8 -*-

import math

from unittest import TestCase

from hypothesis import given, settings, strategies as st
from mock import patch

from deltacalc.engine.derivatives import (
    delta_derivative, delta_derivative_quadrature, nabla_derivative,
    nabla_derivative_quadrature, delta_integral, kappa_point, dual_kappa_point
)
from deltacalc.engine.functions import (
    RealFunction, DerivativeReport, guarded_call,
    CATALOG, QUOTIENT, CLASSICAL, QUADRATURE
)
from deltacalc.engine.quadrature import adaptive_simpson, gauss_legendre
from deltacalc.exceptions import (
    DomainViolation, NonFiniteValue, NotDifferentiable, NotInKappa,
    QuadratureNoConvergence, EmptyWindow, PointNotInScale
)
from deltacalc.scales.parsers import parse_scale
from deltacalc_test.test_base import assert_close

def square():
    return RealFunction(lambda t: t * t, name='t^2')

class TestRealFunction(TestCase):
    def test_guarded_call(self):
        '''Test math failures become engine errors
        '''
        self.assertEquals(guarded_call(math.sqrt, 4.0), 2.0)
        with self.assertRaises(DomainViolation):
            guarded_call(math.log, -1.0)
        with self.assertRaises(NonFiniteValue):
            guarded_call(lambda t: 1 / t, 0.0)
        with self.assertRaises(NonFiniteValue):
            guarded_call(math.exp, 1000.0)
        with self.assertRaises(NonFiniteValue):
            guarded_call(lambda t: float('nan'), 0.0)

    def test_known_derivative(self):
        f = RealFunction(math.sin, classical_derivative=math.cos, name='sin')
        self.assertTrue(f.has_derivative)
        self.assertEquals(f.derivative(0.3), math.cos(0.3))

    def test_central_difference(self):
        estimate, step = square().central_difference(3.0)
        assert_close(estimate, 6.0, rtol=1e-8)
        self.assertTrue(step > 0)

    def test_kink(self):
        '''Test one-sided derivatives that disagree are refused
        '''
        with self.assertRaises(NotDifferentiable):
            RealFunction(abs).central_difference(0.0, check_one_sided=True)

    def test_report(self):
        report = DerivativeReport(1.5, QUOTIENT, 1.0, dict(sigma=2.0))
        self.assertEquals(report.as_dict()['sigma'], 2.0)
        self.assertEquals(report.as_dict()['mu'], 1.0)
        with self.assertRaises(ValueError):
            DerivativeReport(1.0, 'guess', 0.0)

class TestQuadrature(TestCase):
    def test_simpson(self):
        result = adaptive_simpson(math.sin, 0.0, math.pi)
        assert_close(result.value, 2.0, rtol=1e-9)
        self.assertTrue(result.intervals > 1)

    def test_simpson_empty_interval(self):
        self.assertEquals(adaptive_simpson(math.sin, 1.0, 1.0).value, 0.0)

    def test_simpson_budget(self):
        with self.assertRaises(QuadratureNoConvergence):
            adaptive_simpson(math.sin, 0.0, 1.0, max_intervals=4)

    def test_simpson_is_repeatable(self):
        first = adaptive_simpson(math.exp, 0.0, 1.0)
        second = adaptive_simpson(math.exp, 0.0, 1.0)
        self.assertEquals(first, second)

    def test_gauss(self):
        result = gauss_legendre(math.exp, 0.0, 1.0, 0.5)
        assert_close(result.value, math.e - 1, rtol=1e-12)

    def test_gauss_budget(self):
        with self.assertRaises(QuadratureNoConvergence):
            gauss_legendre(math.exp, 0.0, 1.0, 0.5, max_panels=2)

    def test_gauss_wide_window_fails_before_evaluating(self):
        '''Test a window needing too many panels is refused up front
        '''
        def integrand(x):
            raise AssertionError('integrand evaluated')
        with self.assertRaises(QuadratureNoConvergence):
            gauss_legendre(integrand, 0.0, 2e4, 0.1, max_panels=2 ** 15)
        with self.assertRaises(QuadratureNoConvergence):
            gauss_legendre(integrand, -1e308, 1e308, 1e-300)

    def test_gauss_is_open(self):
        '''Test the endpoints are never evaluated
        '''
        def integrand(x):
            if x in (0.0, 1.0):
                raise AssertionError('endpoint evaluated')
            return 1.0
        assert_close(gauss_legendre(integrand, 0.0, 1.0, 0.25).value, 1.0)

class TestDeltaDerivative(TestCase):
    def test_integers(self):
        '''Test the forward difference of t^2 at 3 on Z
        '''
        report = delta_derivative(parse_scale('Z'), square(), 3)
        self.assertEquals(report.value, 7)
        self.assertEquals(report.method, QUOTIENT)
        self.assertEquals(report.mu_used, 1)

    def test_reals(self):
        report = delta_derivative(parse_scale('R'), square(), 3)
        assert_close(report.value, 6.0, rtol=1e-8)
        self.assertEquals(report.method, CLASSICAL)

    def test_known_derivative_on_reals(self):
        f = RealFunction(math.sin, classical_derivative=math.cos)
        self.assertEquals(delta_derivative(parse_scale('R'), f, 0.5).value, math.cos(0.5))

    def test_q_lattice(self):
        '''Test the q-derivative of t^2 is (q + 1) t
        '''
        report = delta_derivative(parse_scale('q:2'), square(), 4)
        self.assertEquals(report.value, 12)

    def test_outside_kappa(self):
        with self.assertRaises(NotInKappa):
            delta_derivative(parse_scale('set:{0,1,2}'), square(), 2)
        with self.assertRaises(NotInKappa):
            kappa_point(parse_scale('union:[0,1]+{2}'), 2)

    def test_not_in_scale(self):
        with self.assertRaises(PointNotInScale):
            delta_derivative(parse_scale('Z'), square(), 0.5)

    def test_non_finite(self):
        f = RealFunction(math.exp)
        with self.assertRaises(NonFiniteValue):
            delta_derivative(parse_scale('hZ:100'), f, 700)

    def test_quadrature(self):
        '''Test the integral representation reproduces the forward difference
        '''
        f = RealFunction(lambda t: t ** 3, classical_derivative=lambda t: 3 * t ** 2)
        report = delta_derivative_quadrature(parse_scale('Z'), f, 2)
        assert_close(report.value, 19.0, rtol=1e-10)
        self.assertEquals(report.method, QUADRATURE)
        self.assertIn('intervals', report.diagnostics)

    def test_quadrature_budget(self):
        f = RealFunction(math.sin, classical_derivative=math.cos)
        with self.assertRaises(QuadratureNoConvergence):
            delta_derivative_quadrature(parse_scale('Z'), f, 0, max_intervals=2)

class TestNablaDerivative(TestCase):
    def test_integers(self):
        report = nabla_derivative(parse_scale('Z'), square(), 3)
        self.assertEquals(report.value, 5)
        self.assertEquals(report.mu_used, 1)

    @given(st.integers(min_value=-10 ** 6, max_value=10 ** 6))
    @settings(max_examples=100, derandomize=True)
    def test_shifted_equality(self, m):
        '''Test nabla at t equals delta at t - 1 on Z
        '''
        ts = parse_scale('Z')
        nabla = nabla_derivative(ts, square(), m).value
        delta = delta_derivative(ts, square(), m - 1).value
        assert_close(nabla, delta, rtol=1e-12)

    def test_right_scattered_minimum(self):
        with self.assertRaises(NotInKappa):
            nabla_derivative(parse_scale('q:2'), square(), 1)
        with self.assertRaises(NotInKappa):
            dual_kappa_point(parse_scale('set:{0,1}'), 0)

    def test_quadrature(self):
        f = RealFunction(lambda t: t * t, classical_derivative=lambda t: 2 * t)
        report = nabla_derivative_quadrature(parse_scale('Z'), f, 3)
        assert_close(report.value, 5.0, rtol=1e-12)

class TestDeltaIntegral(TestCase):
    def test_integers(self):
        self.assertEquals(delta_integral(parse_scale('Z'), lambda t: 2 * t + 1, 0, 3, 0.1), 9)

    def test_reals(self):
        assert_close(delta_integral(parse_scale('R'), lambda t: t, 0, 1, 0.1), 0.5)

    def test_union(self):
        '''Test one dense unit plus one unit jump at 1
        '''
        value = delta_integral(parse_scale('union:[0,1]+{2}'), lambda t: 1.0, 0, 2, 0.1)
        assert_close(value, 2.0)

    def test_q_lattice(self):
        self.assertEquals(delta_integral(parse_scale('q:2'), lambda t: 1.0, 1, 8, 0.1), 7)

    def test_same_limits(self):
        self.assertEquals(delta_integral(parse_scale('Z'), lambda t: t, 2, 2, 0.1), 0.0)

    def test_empty_window(self):
        with self.assertRaises(EmptyWindow):
            delta_integral(parse_scale('Z'), lambda t: t, 3, 0, 0.1)

    def test_limit_not_in_scale(self):
        with self.assertRaises(PointNotInScale):
            delta_integral(parse_scale('Z'), lambda t: t, 0, 2.5, 0.1)

    @patch('deltacalc.engine.derivatives.gauss_legendre')
    def test_dense_pieces_use_gauss(self, gauss):
        gauss.side_effect = QuadratureNoConvergence('budget')
        with self.assertRaises(QuadratureNoConvergence):
            delta_integral(parse_scale('R'), lambda t: t, 0, 1, 0.1)
        self.assertEquals(gauss.call_count, 1)

    def test_methods_are_distinct(self):
        self.assertEquals(len(set([CATALOG, QUOTIENT, CLASSICAL, QUADRATURE])), 4)
