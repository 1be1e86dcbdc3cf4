# -*- coding: utf-8 -*-

from deltacalc.engine.functions import (
    RealFunction, DerivativeReport, guarded_call,
    CATALOG, QUOTIENT, CLASSICAL, QUADRATURE
)
from deltacalc.engine.derivatives import (
    delta_derivative, delta_derivative_quadrature,
    nabla_derivative, nabla_derivative_quadrature, delta_integral,
    kappa_point, dual_kappa_point
)
