# -*- coding: utf-8 -*-
'''The twenty closed-form delta derivatives.

Every entry knows its function, the classical derivative, a stable closed
form of the delta derivative for nonzero graininess, its domain and the
expression tree of its shape. Entries register themselves on
:py:class:`CatalogEntry` in table order.
'''

import math

from deltacalc.catalog.stable import (
    power_difference_quotient, shifted_power, expm1_ratio, log1p_ratio,
    sin_shift_ratio, cos_shift_ratio, shifted_sin, shifted_cos,
    sinh_shift_ratio, cosh_shift_ratio
)
from deltacalc.engine.functions import RealFunction
from deltacalc.exceptions import ParamViolation
from deltacalc.expression.canonical import canonicalize
from deltacalc.expression.nodes import (
    Constant, Var, Add, Mul, PowInt, ConstPow, Call, MAX_EXPONENT
)

T = Var()

def check_order(value, entry_id):
    '''Validate the positive integer parameter ``n``'''
    if isinstance(value, bool):
        raise ParamViolation('{}: n must be an integer, got {!r}'.format(entry_id, value), entry=entry_id)
    try:
        number = float(value)
    except (TypeError, ValueError):
        raise ParamViolation('{}: n must be an integer, got {!r}'.format(entry_id, value), entry=entry_id)
    if not number.is_integer() or not 1 <= number <= MAX_EXPONENT:
        raise ParamViolation(
            '{}: n must be an integer between 1 and {}, got {!r}'.format(entry_id, MAX_EXPONENT, value),
            entry=entry_id
        )
    return int(number)

def check_real(name, value, entry_id):
    if isinstance(value, bool):
        raise ParamViolation('{}: {} must be a real, got {!r}'.format(entry_id, name, value), entry=entry_id)
    try:
        number = float(value)
    except (TypeError, ValueError):
        raise ParamViolation('{}: {} must be a real, got {!r}'.format(entry_id, name, value), entry=entry_id)
    if not math.isfinite(number):
        raise ParamViolation('{}: {} must be finite'.format(entry_id, name), entry=entry_id)
    return number

def scaled(k):
    return Mul(Constant(k), T)

class CatalogEntry(object):
    '''Base class for table entries

    Attributes:
        entries: every registered entry instance, in table order
        id: the symbolic tag, ``B01`` to ``H03``
        params: names of the parameters the formula uses
        shape: the function in the expression language, for humans
    '''
    entries = []

    id = None
    params = ()
    shape = None

    @classmethod
    def register(cls, subcl):
        '''decorator adding an instance of ``subcl`` to the catalog

        Example:

            .. code-block:: python

                @CatalogEntry.register
                class Sine(CatalogEntry):
                    id = 'T01'
        '''
        cls.entries.append(subcl())
        return subcl

    def check_params(self, params):
        '''Pick and validate the parameters this entry needs

        Arguments:
            params: dict that may carry ``k``, ``c`` and ``n``; unused keys
                are ignored

        Returns:
            dict with only this entry's parameters, ``n`` as an int

        Raises:
            ParamViolation: a parameter is missing or violates a constraint
        '''
        params = params or {}
        rv = {}
        for name in self.params:
            if params.get(name) is None:
                raise ParamViolation(
                    '{} needs parameter {}'.format(self.id, name), entry=self.id
                )
            if name == 'n':
                rv[name] = check_order(params[name], self.id)
            else:
                rv[name] = check_real(name, params[name], self.id)
        self.check_constraints(rv)
        return rv

    def check_constraints(self, params):
        pass

    def value(self, t, p):
        raise NotImplementedError

    def derivative(self, t, p):
        '''Classical derivative, the graininess-to-zero limit'''
        raise NotImplementedError

    def delta(self, t, mu, p):
        '''Closed form for nonzero ``mu``; negative ``mu`` gives the nabla form'''
        raise NotImplementedError

    def template(self, p):
        raise NotImplementedError

    def in_domain(self, t, p):
        return True

    def in_shift_domain(self, x, p):
        return self.in_domain(x, p)

    def admissible(self, t, mu, p):
        '''Whether the closed form may be evaluated at ``(t, mu)``'''
        return self.in_domain(t, p) and self.in_shift_domain(t + mu, p)

    def build(self, params):
        '''Canonical expression tree of the entry's function'''
        return canonicalize(self.template(self.check_params(params)))

    def as_function(self, params):
        p = self.check_params(params)
        return RealFunction(
            lambda t: self.value(t, p),
            classical_derivative=lambda t: self.derivative(t, p),
            name=self.id
        )

    def __repr__(self):
        return '<CatalogEntry {} {}>'.format(self.id, self.shape)

@CatalogEntry.register
class ConstantEntry(CatalogEntry):
    id, params, shape = 'B01', ('k',), 'k'

    def value(self, t, p):
        return p['k']

    def derivative(self, t, p):
        return 0.0

    def delta(self, t, mu, p):
        return 0.0

    def template(self, p):
        return Constant(p['k'])

@CatalogEntry.register
class Monomial(CatalogEntry):
    id, params, shape = 'B02', ('n',), 't^n'

    def value(self, t, p):
        return t ** p['n']

    def derivative(self, t, p):
        return p['n'] * t ** (p['n'] - 1)

    def delta(self, t, mu, p):
        return power_difference_quotient(t, mu, p['n'])

    def template(self, p):
        return PowInt(T, p['n'])

@CatalogEntry.register
class Exponential(CatalogEntry):
    id, params, shape = 'B03', ('k',), 'k^t'

    def check_constraints(self, p):
        if p['k'] <= 0:
            raise ParamViolation('B03 needs k > 0, got {!r}'.format(p['k']), entry=self.id)

    def value(self, t, p):
        return p['k'] ** t

    def derivative(self, t, p):
        return math.log(p['k']) * p['k'] ** t

    def delta(self, t, mu, p):
        return p['k'] ** t * math.expm1(mu * math.log(p['k'])) / mu

    def template(self, p):
        return ConstPow(Constant(p['k']), T)

@CatalogEntry.register
class ShiftedMonomial(CatalogEntry):
    id, params, shape = 'B04', ('k', 'n'), '(t + k)^n'

    def value(self, t, p):
        return (t + p['k']) ** p['n']

    def derivative(self, t, p):
        return p['n'] * (t + p['k']) ** (p['n'] - 1)

    def delta(self, t, mu, p):
        return power_difference_quotient(t + p['k'], mu, p['n'])

    def template(self, p):
        return PowInt(Add(T, Constant(p['k'])), p['n'])

@CatalogEntry.register
class SquareRoot(CatalogEntry):
    id, params, shape = 'R01', (), 'sqrt(t)'

    def in_domain(self, t, p):
        return t > 0

    def in_shift_domain(self, x, p):
        return x >= 0

    def value(self, t, p):
        return math.sqrt(t)

    def derivative(self, t, p):
        return 1 / (2 * math.sqrt(t))

    def delta(self, t, mu, p):
        return 1 / (math.sqrt(t + mu) + math.sqrt(t))

    def template(self, p):
        return Call('sqrt', T)

@CatalogEntry.register
class RootOfPolynomial(CatalogEntry):
    id, params, shape = 'R02', ('k', 'n'), 'sqrt(k + t^n)'

    def in_domain(self, t, p):
        return p['k'] + t ** p['n'] > 0

    def in_shift_domain(self, x, p):
        return p['k'] + x ** p['n'] >= 0

    def value(self, t, p):
        return math.sqrt(p['k'] + t ** p['n'])

    def derivative(self, t, p):
        n = p['n']
        return n * t ** (n - 1) / (2 * math.sqrt(p['k'] + t ** n))

    def delta(self, t, mu, p):
        k, n = p['k'], p['n']
        after = math.sqrt(k + shifted_power(t, mu, n))
        before = math.sqrt(k + t ** n)
        return power_difference_quotient(t, mu, n) / (after + before)

    def template(self, p):
        return Call('sqrt', Add(Constant(p['k']), PowInt(T, p['n'])))

@CatalogEntry.register
class MonomialTimesRoot(CatalogEntry):
    id, params, shape = 'R03', ('k', 'c', 'n'), 't^n*sqrt(k + c*t)'

    def in_domain(self, t, p):
        return p['k'] + p['c'] * t > 0

    def in_shift_domain(self, x, p):
        return p['k'] + p['c'] * x >= 0

    def value(self, t, p):
        return t ** p['n'] * math.sqrt(p['k'] + p['c'] * t)

    def derivative(self, t, p):
        k, c, n = p['k'], p['c'], p['n']
        root = math.sqrt(k + c * t)
        return n * t ** (n - 1) * root + t ** n * c / (2 * root)

    def delta(self, t, mu, p):
        # (t+mu)^n goes through the binomial sum; the root difference is
        # rewritten with its conjugate
        k, c, n = p['k'], p['c'], p['n']
        after = math.sqrt(k + c * (t + mu))
        before = math.sqrt(k + c * t)
        return (
            shifted_power(t, mu, n) * c / (after + before) +
            before * power_difference_quotient(t, mu, n)
        )

    def template(self, p):
        return Mul(
            PowInt(T, p['n']),
            Call('sqrt', Add(Constant(p['k']), scaled(p['c'])))
        )

@CatalogEntry.register
class LogOfMonomial(CatalogEntry):
    id, params, shape = 'L01', ('n',), 'ln(t^n)'

    def in_domain(self, t, p):
        return t != 0 and (t > 0 or p['n'] % 2 == 0)

    def admissible(self, t, mu, p):
        return self.in_domain(t, p) and t * (t + mu) > 0

    def value(self, t, p):
        return math.log(t ** p['n'])

    def derivative(self, t, p):
        return p['n'] / t

    def delta(self, t, mu, p):
        return p['n'] * log1p_ratio(mu / t, mu)

    def template(self, p):
        return Call('ln', PowInt(T, p['n']))

@CatalogEntry.register
class LogOfLinear(CatalogEntry):
    id, params, shape = 'L02', ('k', 'c'), 'ln(k*t + c)'

    def in_domain(self, t, p):
        return p['k'] * t + p['c'] > 0

    def value(self, t, p):
        return math.log(p['k'] * t + p['c'])

    def derivative(self, t, p):
        return p['k'] / (p['k'] * t + p['c'])

    def delta(self, t, mu, p):
        k, c = p['k'], p['c']
        return log1p_ratio(k * mu / (k * t + c), mu)

    def template(self, p):
        return Call('ln', Add(scaled(p['k']), Constant(p['c'])))

@CatalogEntry.register
class NaturalExponential(CatalogEntry):
    id, params, shape = 'E01', ('k',), 'exp(k*t)'

    def value(self, t, p):
        return math.exp(p['k'] * t)

    def derivative(self, t, p):
        return p['k'] * math.exp(p['k'] * t)

    def delta(self, t, mu, p):
        return expm1_ratio(p['k'], mu) * math.exp(p['k'] * t)

    def template(self, p):
        return Call('exp', scaled(p['k']))

@CatalogEntry.register
class MonomialTimesExponential(CatalogEntry):
    id, params, shape = 'E02', ('k', 'n'), 't^n*exp(k*t)'

    def value(self, t, p):
        return t ** p['n'] * math.exp(p['k'] * t)

    def derivative(self, t, p):
        k, n = p['k'], p['n']
        return (n * t ** (n - 1) + k * t ** n) * math.exp(k * t)

    def delta(self, t, mu, p):
        k, n = p['k'], p['n']
        return (
            shifted_power(t, mu, n) * expm1_ratio(k, mu) +
            power_difference_quotient(t, mu, n)
        ) * math.exp(k * t)

    def template(self, p):
        return Mul(PowInt(T, p['n']), Call('exp', scaled(p['k'])))

@CatalogEntry.register
class Sine(CatalogEntry):
    id, params, shape = 'T01', (), 'sin(t)'

    def value(self, t, p):
        return math.sin(t)

    def derivative(self, t, p):
        return math.cos(t)

    def delta(self, t, mu, p):
        return sin_shift_ratio(t, 1.0, mu)

    def template(self, p):
        return Call('sin', T)

@CatalogEntry.register
class Cosine(CatalogEntry):
    id, params, shape = 'T02', (), 'cos(t)'

    def value(self, t, p):
        return math.cos(t)

    def derivative(self, t, p):
        return -math.sin(t)

    def delta(self, t, mu, p):
        return cos_shift_ratio(t, 1.0, mu)

    def template(self, p):
        return Call('cos', T)

@CatalogEntry.register
class TimeSine(CatalogEntry):
    id, params, shape = 'TM01', ('k',), 't*sin(k*t)'

    def value(self, t, p):
        return t * math.sin(p['k'] * t)

    def derivative(self, t, p):
        k = p['k']
        return math.sin(k * t) + k * t * math.cos(k * t)

    def delta(self, t, mu, p):
        k = p['k']
        return shifted_sin(t, k, mu) + t * sin_shift_ratio(t, k, mu)

    def template(self, p):
        return Mul(T, Call('sin', scaled(p['k'])))

@CatalogEntry.register
class TimeCosine(CatalogEntry):
    id, params, shape = 'TM02', ('k',), 't*cos(k*t)'

    def value(self, t, p):
        return t * math.cos(p['k'] * t)

    def derivative(self, t, p):
        k = p['k']
        return math.cos(k * t) - k * t * math.sin(k * t)

    def delta(self, t, mu, p):
        k = p['k']
        return shifted_cos(t, k, mu) + t * cos_shift_ratio(t, k, mu)

    def template(self, p):
        return Mul(T, Call('cos', scaled(p['k'])))

@CatalogEntry.register
class ExponentialSine(CatalogEntry):
    id, params, shape = 'TE01', ('k', 'c'), 'exp(k*t)*sin(c*t)'

    def value(self, t, p):
        return math.exp(p['k'] * t) * math.sin(p['c'] * t)

    def derivative(self, t, p):
        k, c = p['k'], p['c']
        return math.exp(k * t) * (k * math.sin(c * t) + c * math.cos(c * t))

    def delta(self, t, mu, p):
        k, c = p['k'], p['c']
        return (
            shifted_sin(t, c, mu) * expm1_ratio(k, mu) + sin_shift_ratio(t, c, mu)
        ) * math.exp(k * t)

    def template(self, p):
        return Mul(Call('exp', scaled(p['k'])), Call('sin', scaled(p['c'])))

@CatalogEntry.register
class ExponentialCosine(CatalogEntry):
    id, params, shape = 'TE02', ('k', 'c'), 'exp(k*t)*cos(c*t)'

    def value(self, t, p):
        return math.exp(p['k'] * t) * math.cos(p['c'] * t)

    def derivative(self, t, p):
        k, c = p['k'], p['c']
        return math.exp(k * t) * (k * math.cos(c * t) - c * math.sin(c * t))

    def delta(self, t, mu, p):
        k, c = p['k'], p['c']
        return (
            shifted_cos(t, c, mu) * expm1_ratio(k, mu) + cos_shift_ratio(t, c, mu)
        ) * math.exp(k * t)

    def template(self, p):
        return Mul(Call('exp', scaled(p['k'])), Call('cos', scaled(p['c'])))

@CatalogEntry.register
class HyperbolicSine(CatalogEntry):
    id, params, shape = 'H01', ('k',), 'sinh(k*t)'

    def value(self, t, p):
        return math.sinh(p['k'] * t)

    def derivative(self, t, p):
        return p['k'] * math.cosh(p['k'] * t)

    def delta(self, t, mu, p):
        return sinh_shift_ratio(t, p['k'], mu)

    def template(self, p):
        return Call('sinh', scaled(p['k']))

@CatalogEntry.register
class HyperbolicCosine(CatalogEntry):
    id, params, shape = 'H02', ('k',), 'cosh(k*t)'

    def value(self, t, p):
        return math.cosh(p['k'] * t)

    def derivative(self, t, p):
        return p['k'] * math.sinh(p['k'] * t)

    def delta(self, t, mu, p):
        return cosh_shift_ratio(t, p['k'], mu)

    def template(self, p):
        return Call('cosh', scaled(p['k']))

@CatalogEntry.register
class HyperbolicProduct(CatalogEntry):
    id, params, shape = 'H03', ('k',), 'sinh(k*t)*cosh(k*t)'

    def value(self, t, p):
        return math.sinh(p['k'] * t) * math.cosh(p['k'] * t)

    def derivative(self, t, p):
        return p['k'] * math.cosh(2 * p['k'] * t)

    def delta(self, t, mu, p):
        return sinh_shift_ratio(t, 2 * p['k'], mu) / 2

    def template(self, p):
        return Mul(Call('sinh', scaled(p['k'])), Call('cosh', scaled(p['k'])))
