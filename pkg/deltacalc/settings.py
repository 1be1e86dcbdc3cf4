# -*- coding: utf-8 -*-
import os

from deltacalc import utils

HERE = os.path.abspath(os.path.dirname(__file__))
os_env = os.environ
PROJECT_ROOT = os.path.abspath(os.path.join(HERE, os.pardir))

def _float_env(name, default):
    return float(os_env.get(name, default))

class Config(object):
    APP_DIR = HERE
    PROJECT_ROOT = PROJECT_ROOT
    MEMBERSHIP_RTOL = _float_env('DELTACALC_MEMBERSHIP_RTOL', utils.MEMBERSHIP_RTOL)
    MU_RTOL = _float_env('DELTACALC_MU_RTOL', utils.MU_RTOL)
    QUADRATURE_TOL = _float_env('DELTACALC_QUADRATURE_TOL', utils.QUADRATURE_TOL)
    QUADRATURE_RTOL = _float_env('DELTACALC_QUADRATURE_RTOL', utils.QUADRATURE_RTOL)
    QUADRATURE_MAX_INTERVALS = int(os_env.get(
        'DELTACALC_QUADRATURE_MAX_INTERVALS', utils.QUADRATURE_MAX_INTERVALS
    ))
    CROSS_CHECK_RTOL = _float_env('DELTACALC_CROSS_CHECK_RTOL', utils.CROSS_CHECK_RTOL)
    IDENTITY_TOL = _float_env('DELTACALC_IDENTITY_TOL', utils.IDENTITY_TOL)
    HYPERBOLIC_TOL = _float_env('DELTACALC_HYPERBOLIC_TOL', utils.HYPERBOLIC_TOL)
    FTC_RTOL = _float_env('DELTACALC_FTC_RTOL', utils.FTC_RTOL)
    DEFAULT_MAX_STEP = _float_env('DELTACALC_MAX_STEP', 0.1)
    OUTPUT_FORMAT = os_env.get('DELTACALC_OUTPUT_FORMAT', 'table')
    PARALLEL_WORKERS = int(os_env.get('DELTACALC_PARALLEL_WORKERS', 4))
    SIGNIFICANT_DIGITS = 17


class ProdConfig(Config):
    """Production configuration."""
    ENV = 'prod'
    DEBUG = False


class DevConfig(Config):
    """Development configuration."""
    ENV = 'dev'
    DEBUG = True


class TestConfig(Config):
    ENV = 'test'
    TESTING = True
    DEBUG = True
    PARALLEL_WORKERS = 2
