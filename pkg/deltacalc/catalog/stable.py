# -*- coding: utf-8 -*-
'''Cancellation-free building blocks for the closed-form delta derivatives.

Each helper returns a difference quotient ``(g(x + mu) - g(x)) / mu`` in a
form whose rounding error does not grow as ``mu`` shrinks. ``mu`` may be
negative, which is how nabla derivatives reuse them.
'''

import math

def binomial(n, k):
    '''``n choose k`` by multiplicative recurrence, exact in integers
    '''
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    rv = 1
    for i in range(1, k + 1):
        rv = rv * (n - k + i) // i
    return rv

def power_difference_quotient(x, mu, n):
    '''``sum_{j=0}^{n-1} binom(n, j) mu**(n-1-j) x**j``

    Equals ``((x + mu)**n - x**n) / mu`` and tends to ``n x**(n-1)``;
    accumulated by Horner's rule in ``x``.
    '''
    acc = 0.0
    for j in range(n - 1, -1, -1):
        acc = acc * x + binomial(n, j) * mu ** (n - 1 - j)
    return acc

def shifted_power(x, mu, n):
    '''``(x + mu)**n`` as the binomial sum ``sum_i binom(n, i) mu**(n-i) x**i``
    '''
    acc = 0.0
    for i in range(n, -1, -1):
        acc = acc * x + binomial(n, i) * mu ** (n - i)
    return acc

def expm1_ratio(a, mu):
    '''``(exp(a*mu) - 1) / mu``'''
    return math.expm1(a * mu) / mu

def log1p_ratio(ratio, mu):
    '''``ln(1 + ratio) / mu`` for the logarithm entries'''
    return math.log1p(ratio) / mu

def cos_ratio(a, mu):
    '''``(cos(a*mu) - 1) / mu`` through ``-2 sin(a*mu/2)**2 / mu``
    '''
    half = math.sin(a * mu / 2)
    return -2 * half * half / mu

def sin_ratio(a, mu):
    '''``sin(a*mu) / mu``'''
    return math.sin(a * mu) / mu

def sin_shift_ratio(x, a, mu):
    '''``(sin(a*(x + mu)) - sin(a*x)) / mu``
    '''
    return math.sin(a * x) * cos_ratio(a, mu) + math.cos(a * x) * sin_ratio(a, mu)

def cos_shift_ratio(x, a, mu):
    '''``(cos(a*(x + mu)) - cos(a*x)) / mu``
    '''
    return math.cos(a * x) * cos_ratio(a, mu) - math.sin(a * x) * sin_ratio(a, mu)

def shifted_sin(x, a, mu):
    '''``sin(a*(x + mu))`` by the addition formula'''
    return math.sin(a * x) * math.cos(a * mu) + math.cos(a * x) * math.sin(a * mu)

def shifted_cos(x, a, mu):
    '''``cos(a*(x + mu))`` by the addition formula'''
    return math.cos(a * x) * math.cos(a * mu) - math.sin(a * x) * math.sin(a * mu)

def exp_shift_ratio(x, a, mu):
    '''``(exp(a*(x + mu)) - exp(a*x)) / mu``'''
    return math.exp(a * x) * expm1_ratio(a, mu)

def sinh_shift_ratio(x, a, mu):
    '''``(sinh(a*(x + mu)) - sinh(a*x)) / mu``
    '''
    return (exp_shift_ratio(x, a, mu) - exp_shift_ratio(x, -a, mu)) / 2

def cosh_shift_ratio(x, a, mu):
    '''``(cosh(a*(x + mu)) - cosh(a*x)) / mu``
    '''
    return (exp_shift_ratio(x, a, mu) + exp_shift_ratio(x, -a, mu)) / 2
