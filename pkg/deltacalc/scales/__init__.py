# -*- coding: utf-8 -*-

from deltacalc.scales.models import (
    TimeScale, PointClass, Reals, UniformLattice, QLattice,
    FiniteSet, IntervalUnion, CantorApprox
)
from deltacalc.scales.operators import (
    contains, sigma, rho, mu, nu, classify, in_kappa, in_kappa_dual, sample
)
from deltacalc.scales.parsers import (
    parse_scale, scale_from_dict, load_scale_file
)
