# -*- coding: utf-8 -*-

from deltacalc.special.functions import (
    sine, cosine, hyperbolic_sine, hyperbolic_cosine,
    sin_ts, cos_ts, sinh_ts, cosh_ts,
    pythagorean_defect, hyperbolic_defect, DefectReport
)
