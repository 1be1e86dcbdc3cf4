# -*- coding: utf-8 -*-
'''Exceptions raised by the time scale calculus engine.

Every error carries a short stable ``code`` that the command line prints in
place of a numeric result, plus a ``details`` dict for logging.
'''

class DeltaCalcError(Exception):
    '''Base class for all engine errors

    Arguments:
        message: human readable description

    Keyword Arguments:
        **details: extra context (point, scale, entry id, ...) kept for logs
    '''
    code = 'error'

    def __init__(self, message='', **details):
        super(DeltaCalcError, self).__init__(message)
        self.message = message
        self.details = details

    def __str__(self):
        return '{}: {}'.format(self.code, self.message)

class PointNotInScale(DeltaCalcError):
    code = 'point-not-in-scale'

class NotInKappa(DeltaCalcError):
    '''The derivative is not uniquely defined at a maximal left-scattered point
    '''
    code = 'not-in-kappa'

class NonFiniteValue(DeltaCalcError):
    code = 'non-finite-value'

class EmptyWindow(DeltaCalcError):
    code = 'empty-window'

class QuadratureNoConvergence(DeltaCalcError):
    code = 'quadrature-no-convergence'

class NotDifferentiable(DeltaCalcError):
    code = 'not-differentiable'

class DomainViolation(DeltaCalcError):
    code = 'domain-violation'

class ParamViolation(DeltaCalcError):
    code = 'param-violation'

class BadScaleSpec(DeltaCalcError):
    code = 'bad-scale-spec'

class ExpressionSyntaxError(DeltaCalcError):
    '''Raised by the expression parser

    Arguments:
        message: what went wrong
        offset: byte offset into the source text
        expected: set of token descriptions that would have been accepted
    '''
    code = 'syntax-error'

    def __init__(self, message, offset=0, expected=()):
        super(ExpressionSyntaxError, self).__init__(
            message, offset=offset, expected=sorted(expected)
        )
        self.offset = offset
        self.expected = frozenset(expected)

    def __str__(self):
        rv = '{}: {} at offset {}'.format(self.code, self.message, self.offset)
        if self.expected:
            rv += ' (expected one of: {})'.format(', '.join(sorted(self.expected)))
        return rv

class DepthExceeded(DeltaCalcError):
    code = 'depth-exceeded'

class UnsupportedNode(DeltaCalcError):
    code = 'unsupported-node'

class ToleranceBreach(DeltaCalcError):
    code = 'tolerance-breach'
