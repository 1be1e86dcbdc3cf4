# -*- coding: utf-8 -*-

import factory

from deltacalc.scales.models import (
    Reals, UniformLattice, QLattice, FiniteSet, IntervalUnion, CantorApprox
)

class RealsFactory(factory.Factory):
    class Meta:
        model = Reals

class UniformLatticeFactory(factory.Factory):
    step = 1.0
    offset = 0.0

    class Meta:
        model = UniformLattice

class QLatticeFactory(factory.Factory):
    ratio = 2.0

    class Meta:
        model = QLattice

class FiniteSetFactory(factory.Factory):
    points = factory.LazyFunction(lambda: [0.0, 0.1, 0.5, 1.0])

    class Meta:
        model = FiniteSet

class IntervalUnionFactory(factory.Factory):
    intervals = factory.LazyFunction(lambda: [(0.0, 1.0), (2.0, 2.0), (3.0, 4.0)])

    class Meta:
        model = IntervalUnion

class CantorApproxFactory(factory.Factory):
    depth = 2

    class Meta:
        model = CantorApprox

class CatalogParamsFactory(factory.DictFactory):
    '''Parameters that fit every entry on scales of moderate extent'''
    k = 0.5
    c = 1.5
    n = 3

class QLatticeParamsFactory(CatalogParamsFactory):
    '''Small rates so exponentials stay finite up to ``t = 1024``'''
    k = 0.01
    c = 0.01

class RepresentativeParamsFactory(CatalogParamsFactory):
    k = 2.0
    c = 3.0
    n = 3
