# -*- coding: utf-8 -*-

from deltacalc.scales.parsers import parse_scale
from deltacalc_test.factories import CatalogParamsFactory, QLatticeParamsFactory

# the five scales every catalog property is checked on, with ten points each
# at which every entry is admissible
STANDARD_POINTS = (
    ('R', [0.1, 0.3, 0.7, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0, 5.0]),
    ('Z', [1, 2, 3, 4, 5, 6, 7, 8, 9, 10]),
    ('hZ:0.5', [0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0]),
    ('q:2', [1, 2, 4, 8, 16, 32, 64, 128, 256, 512]),
    ('union:[0,1]+{2}+[3,4]', [0.1, 0.3, 0.5, 0.9, 1.0, 2.0, 3.0, 3.25, 3.75, 4.0]),
)

# finite windows for the fundamental theorem and identity checks
STANDARD_WINDOWS = (
    ('R', (0.0, 1.0)),
    ('Z', (-3.0, 3.0)),
    ('hZ:0.5', (-2.0, 2.0)),
    ('q:2', (1.0, 16.0)),
    ('union:[0,1]+{2}+[3,4]', (0.0, 4.0)),
)

def standard_scales():
    '''``(scale, points)`` pairs for the standard scales'''
    return [(parse_scale(spec), points) for spec, points in STANDARD_POINTS]

def params_for(ts):
    if ts.kind == 'qlattice':
        return QLatticeParamsFactory()
    return CatalogParamsFactory()

def scattered_points(ts, points):
    return [t for t in points if ts.mu(t) > 0 and ts.in_kappa(t)]
