# -*- coding: utf-8 -*-

import json
import math
import os
import tempfile

from unittest import TestCase

from hypothesis import given, settings, strategies as st

from deltacalc.exceptions import BadScaleSpec, PointNotInScale, EmptyWindow, NonFiniteValue
from deltacalc.scales import operators
from deltacalc.scales.models import PointClass, format_point
from deltacalc.scales.parsers import parse_scale, scale_from_dict, load_scale_file
from deltacalc_test.test_base import assert_close
from deltacalc_test.factories import (
    RealsFactory, UniformLatticeFactory, QLatticeFactory, FiniteSetFactory,
    IntervalUnionFactory, CantorApproxFactory
)

class TestPointClass(TestCase):
    def test_tags(self):
        '''Test the four classifications render as tags
        '''
        self.assertEquals(PointClass(True, True).tag, 'isolated')
        self.assertEquals(PointClass(False, False).tag, 'dense')
        self.assertEquals(PointClass(False, True).tag, 'left-scattered, right-dense')
        self.assertEquals(PointClass(True, False).tag, 'left-dense, right-scattered')

    def test_equality(self):
        self.assertEquals(PointClass(True, False), PointClass(1, 0))
        self.assertNotEqual(PointClass(True, False), PointClass(False, True))
        self.assertEquals(len(set([PointClass(True, True), PointClass(True, True)])), 1)

class TestReals(TestCase):
    def setUp(self):
        self.ts = RealsFactory()

    def test_operators_at_zero(self):
        '''Test every point of the real line is dense
        '''
        self.assertEquals(self.ts.sigma(0), 0)
        self.assertEquals(self.ts.rho(0), 0)
        self.assertEquals(self.ts.mu(0), 0)
        self.assertEquals(self.ts.nu(0), 0)
        self.assertTrue(self.ts.classify(0).is_dense)
        self.assertTrue(self.ts.in_kappa(0))

    @given(st.floats(min_value=-1e6, max_value=1e6))
    @settings(max_examples=20, derandomize=True)
    def test_identity_jumps(self, t):
        self.assertEquals(self.ts.sigma(t), t)
        self.assertEquals(self.ts.rho(t), t)

    def test_sample(self):
        self.assertEquals(self.ts.sample(0, 1, 0.25), [0.0, 0.25, 0.5, 0.75, 1.0])

    def test_spec(self):
        self.assertEquals(self.ts.spec, 'R')
        self.assertEquals(self.ts.infimum, -math.inf)

class TestUniformLattice(TestCase):
    def test_integers(self):
        '''Test the integers jump by one in both directions
        '''
        ts = UniformLatticeFactory()
        self.assertEquals(ts.spec, 'Z')
        self.assertEquals(ts.sigma(3), 4)
        self.assertEquals(ts.rho(3), 2)
        self.assertEquals(ts.mu(3), 1)
        self.assertEquals(ts.nu(3), 1)
        self.assertTrue(ts.classify(3).is_isolated)

    def test_membership_tolerance(self):
        ts = UniformLatticeFactory()
        self.assertEquals(ts.locate(3 + 1e-12), 3.0)
        self.assertTrue(ts.contains(-7))
        self.assertFalse(ts.contains(3.1))
        with self.assertRaises(PointNotInScale):
            ts.sigma(3.5)

    @given(st.integers(min_value=-1000, max_value=1000))
    @settings(max_examples=20, derandomize=True)
    def test_half_lattice_closed_forms(self, m):
        '''Test sigma(t) = t + h and mu = nu = h on hZ
        '''
        ts = UniformLatticeFactory(step=0.5)
        t = 0.5 * m
        self.assertEquals(ts.sigma(t), t + 0.5)
        self.assertEquals(ts.rho(t), t - 0.5)
        self.assertEquals(ts.mu(t), 0.5)
        self.assertEquals(ts.nu(t), 0.5)

    def test_offset(self):
        ts = UniformLatticeFactory(step=0.5, offset=0.25)
        self.assertEquals(ts.spec, 'hZ:0.5:0.25')
        self.assertEquals(ts.sigma(0.25), 0.75)
        self.assertFalse(ts.contains(0))

    def test_sample_and_pieces(self):
        ts = UniformLatticeFactory()
        self.assertEquals(ts.sample(-2, 2, 0.1), [-2.0, -1.0, 0.0, 1.0, 2.0])
        self.assertEquals(ts.pieces(0, 3), ([], [0.0, 1.0, 2.0]))
        with self.assertRaises(EmptyWindow):
            ts.sample(0.2, 0.8, 0.1)
        with self.assertRaises(EmptyWindow):
            ts.sample(3, 1, 0.1)

    def test_bad_step(self):
        with self.assertRaises(BadScaleSpec):
            UniformLatticeFactory(step=0)
        with self.assertRaises(BadScaleSpec):
            UniformLatticeFactory(step=-1)

class TestQLattice(TestCase):
    def setUp(self):
        self.ts = QLatticeFactory()

    def test_at_four(self):
        '''Test the q-lattice point 4 with q = 2
        '''
        self.assertEquals(self.ts.sigma(4), 8)
        self.assertEquals(self.ts.rho(4), 2)
        self.assertEquals(self.ts.mu(4), 4)
        self.assertEquals(self.ts.nu(4), 2)
        self.assertEquals(self.ts.classify(4).tag, 'isolated')

    def test_closed_forms(self):
        '''Test sigma = qt, rho = t/q, mu = (q-1)t and nu = (1-1/q)t
        '''
        q = 2.0
        for k in range(1, 21):
            t = q ** k
            self.assertEquals(self.ts.sigma(t), q * t)
            self.assertEquals(self.ts.rho(t), t / q)
            self.assertEquals(self.ts.mu(t), (q - 1) * t)
            self.assertEquals(self.ts.nu(t), (1 - 1 / q) * t)

    def test_minimum(self):
        '''Test 1 is the right-scattered minimum
        '''
        self.assertEquals(self.ts.rho(1), 1)
        self.assertEquals(self.ts.nu(1), 0)
        self.assertFalse(self.ts.in_kappa_dual(1))
        self.assertTrue(self.ts.in_kappa(1))
        self.assertEquals(self.ts.classify(1).tag, 'left-dense, right-scattered')

    def test_not_members(self):
        for t in (0, -2, 0.5, 3):
            self.assertFalse(self.ts.contains(t))

    def test_sample(self):
        self.assertEquals(self.ts.sample(0, 20, 1), [1.0, 2.0, 4.0, 8.0, 16.0])
        self.assertEquals(self.ts.pieces(1, 8), ([], [1.0, 2.0, 4.0]))

    def test_bad_ratio(self):
        with self.assertRaises(BadScaleSpec):
            QLatticeFactory(ratio=1)

    def test_top_of_float_range(self):
        '''Test the largest q-lattice float has no finite successor
        '''
        top = 2.0 ** 1023
        self.assertTrue(self.ts.contains(top))
        self.assertEquals(self.ts.rho(top), 2.0 ** 1022)
        self.assertEquals(self.ts.classify(top).tag, 'isolated')
        self.assertTrue(self.ts.in_kappa(top))
        with self.assertRaises(NonFiniteValue):
            self.ts.sigma(top)
        with self.assertRaises(NonFiniteValue):
            self.ts.mu(top)
        self.assertFalse(self.ts.contains(1.7e308))
        self.assertEquals(self.ts.sample(2.0 ** 1022, 1.7e308, 1)[-1], top)

class TestFiniteSet(TestCase):
    def setUp(self):
        self.ts = FiniteSetFactory()

    def test_jumps(self):
        self.assertEquals(self.ts.sigma(0.1), 0.5)
        self.assertEquals(self.ts.rho(0.1), 0.0)
        self.assertEquals(self.ts.rho(0), 0)
        self.assertEquals(self.ts.sigma(1), 1)
        self.assertEquals(self.ts.mu(1), 0)

    def test_kappa(self):
        '''Test the maximum is outside kappa and the minimum outside the dual
        '''
        self.assertFalse(self.ts.in_kappa(1))
        self.assertTrue(self.ts.in_kappa(0.5))
        self.assertFalse(self.ts.in_kappa_dual(0))
        self.assertTrue(self.ts.in_kappa_dual(1))

    def test_spec_round_trip(self):
        self.assertEquals(self.ts.spec, 'set:{0,0.1,0.5,1}')
        self.assertEquals(parse_scale(self.ts.spec).spec, self.ts.spec)

    def test_pieces_skip_the_maximum(self):
        self.assertEquals(self.ts.pieces(0, 1), ([], [0.0, 0.1, 0.5]))

    def test_empty(self):
        with self.assertRaises(BadScaleSpec):
            FiniteSetFactory(points=[])

class TestIntervalUnion(TestCase):
    def setUp(self):
        self.ts = IntervalUnionFactory()

    def test_right_end_of_interval(self):
        self.assertEquals(self.ts.sigma(1), 2)
        self.assertEquals(self.ts.mu(1), 1)
        self.assertEquals(self.ts.classify(1).tag, 'left-dense, right-scattered')

    def test_isolated_point(self):
        self.assertEquals(self.ts.sigma(2), 3)
        self.assertEquals(self.ts.rho(2), 1)
        self.assertTrue(self.ts.classify(2).is_isolated)

    def test_dense_interior(self):
        self.assertEquals(self.ts.sigma(0.5), 0.5)
        self.assertTrue(self.ts.classify(3.5).is_dense)
        self.assertFalse(self.ts.contains(1.5))

    def test_left_scattered_maximum(self):
        '''Test the isolated maximum of [0,1] + {2} is not in kappa
        '''
        ts = parse_scale('union:[0,1]+{2}')
        self.assertEquals(ts.classify(2).tag, 'left-scattered, right-dense')
        self.assertFalse(ts.in_kappa(2))
        self.assertTrue(self.ts.in_kappa(4))

    def test_merge(self):
        ts = IntervalUnionFactory(intervals=[(2, 3), (0, 1), (1, 1.5)])
        self.assertEquals(ts.intervals, [(0.0, 1.5), (2.0, 3.0)])

    def test_pieces(self):
        self.assertEquals(self.ts.pieces(0, 4), ([(0.0, 1.0), (3.0, 4.0)], [1.0, 2.0]))

    def test_sample(self):
        ts = parse_scale('union:[0,1]+{2}')
        self.assertEquals(ts.sample(0, 2, 0.5), [0.0, 0.5, 1.0, 2.0])

    def test_bad_interval(self):
        with self.assertRaises(BadScaleSpec):
            IntervalUnionFactory(intervals=[(1, 0)])
        with self.assertRaises(BadScaleSpec):
            IntervalUnionFactory(intervals=[])

class TestCantorApprox(TestCase):
    def test_stage_two(self):
        ts = CantorApproxFactory()
        self.assertEquals(len(ts.intervals), 4)
        self.assertAlmostEqual(ts.measure, 4.0 / 9)
        self.assertAlmostEqual(ts.sigma(1.0 / 9), 2.0 / 9)
        self.assertAlmostEqual(ts.rho(2.0 / 3), 1.0 / 3)
        self.assertEquals(ts.spec, 'cantor:2')

    @given(st.integers(min_value=0, max_value=12))
    @settings(max_examples=13, derandomize=True)
    def test_stage_counts_and_measure(self, depth):
        '''Test stage d has 2^d intervals of total length (2/3)^d
        '''
        ts = CantorApproxFactory(depth=depth)
        self.assertEquals(len(ts.intervals), 2 ** depth)
        assert_close(ts.measure, (2.0 / 3) ** depth, rtol=1e-12)
        self.assertEquals((ts.infimum, ts.supremum), (0.0, 1.0))

    def test_depth_limits(self):
        with self.assertRaises(BadScaleSpec):
            CantorApproxFactory(depth=21)
        with self.assertRaises(BadScaleSpec):
            CantorApproxFactory(depth=1.5)

class TestOperators(TestCase):
    def test_module_functions(self):
        ts = QLatticeFactory()
        self.assertEquals(operators.sigma(ts, 2), 4)
        self.assertEquals(operators.rho(ts, 2), 1)
        self.assertEquals(operators.mu(ts, 2), 2)
        self.assertEquals(operators.nu(ts, 2), 1)
        self.assertTrue(operators.contains(ts, 8))
        self.assertTrue(operators.in_kappa(ts, 8))
        self.assertTrue(operators.in_kappa_dual(ts, 8))
        self.assertEquals(operators.classify(ts, 8).tag, 'isolated')
        self.assertEquals(operators.sample(ts, 1, 4, 1), [1.0, 2.0, 4.0])

class TestParsers(TestCase):
    def test_compact_strings(self):
        '''Test every compact form parses and renders back
        '''
        for spec in (
            'R', 'Z', 'hZ:0.5', 'hZ:0.5:0.25', 'q:2', 'set:{0,0.1,0.5,1}',
            'union:[0,1]+{2}+[3,4]', 'union:[-inf,0]+[1,inf]', 'cantor:3'
        ):
            self.assertEquals(parse_scale(spec).spec, spec)

    def test_points_inside_unions(self):
        ts = parse_scale('union:[0,1]+{2,5}')
        self.assertEquals(ts.intervals, [(0.0, 1.0), (2.0, 2.0), (5.0, 5.0)])

    def test_hZ_one_is_integers(self):
        self.assertEquals(parse_scale('hZ:1').spec, 'Z')

    def test_bad_strings(self):
        for spec in (
            '', 'foo', 'hZ:-1', 'hZ:nan', 'hZ:1:2:3', 'q:1', 'q:abc',
            'set:{}', 'set:0,1', 'union:[1,0]', 'union:(0,1)', 'cantor:21',
            'cantor:1.5', 'x:1'
        ):
            with self.assertRaises(BadScaleSpec):
                parse_scale(spec)

    def test_from_dict(self):
        ts = scale_from_dict(dict(kind='union', intervals=[['-inf', 0], [1, 'inf']]))
        self.assertEquals(ts.infimum, -math.inf)
        self.assertEquals(ts.sigma(0), 1)
        self.assertEquals(scale_from_dict(dict(kind='lattice', h=0.5)).spec, 'hZ:0.5')
        self.assertEquals(scale_from_dict(dict(kind='qlattice', q=3)).spec, 'q:3')
        self.assertEquals(scale_from_dict(dict(kind='cantor', depth=2)).spec, 'cantor:2')
        self.assertEquals(scale_from_dict(dict(kind='reals')).spec, 'R')

    def test_from_dict_errors(self):
        for data in (
            [], dict(kind='lattice'), dict(kind='what'),
            dict(kind='union', intervals=[[0]]), dict(kind='finite', points=5)
        ):
            with self.assertRaises(BadScaleSpec):
                scale_from_dict(data)

    def test_load_file(self):
        handle, path = tempfile.mkstemp(suffix='.json')
        try:
            with os.fdopen(handle, 'w') as f:
                json.dump(dict(kind='finite', points=[0, 1, 3]), f)
            ts = load_scale_file(path)
            self.assertEquals(ts.sigma(1), 3)
        finally:
            os.remove(path)

    def test_load_missing_or_bad_file(self):
        with self.assertRaises(BadScaleSpec):
            load_scale_file('/does/not/exist.json')
        handle, path = tempfile.mkstemp(suffix='.json')
        try:
            with os.fdopen(handle, 'w') as f:
                f.write('{not json')
            with self.assertRaises(BadScaleSpec):
                load_scale_file(path)
        finally:
            os.remove(path)

    def test_format_point(self):
        self.assertEquals(format_point(1.0), '1')
        self.assertEquals(format_point(0.5), '0.5')
        self.assertEquals(format_point(-math.inf), '-inf')
