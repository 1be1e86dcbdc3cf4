# -*- coding: utf-8 -*-
'''Recursive descent parser for the expression language.

Grammar, loosest binding first::

    sum     := product (('+' | '-') product)*
    product := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('^' unary)?
    atom    := NUMBER | 't' | FUNCTION '(' sum ')' | '(' sum ')'

``^`` is right associative and binds tighter than unary minus, so ``-t^2``
is ``-(t^2)``. Exponents must be integer constants with ``|n| <= 60``,
except on a positive constant base where any exponent is allowed
(``2^t``).
'''

import math
import re

from deltacalc.exceptions import ExpressionSyntaxError, DepthExceeded
from deltacalc.expression.canonical import canonicalize
from deltacalc.expression.nodes import (
    Constant, Var, Add, Sub, Mul, Div, PowInt, ConstPow, Call,
    FUNCTIONS, MAX_EXPONENT, MAX_DEPTH, VARIABLE, tree_depth, is_integral
)

MAX_LENGTH = 4096

TOKEN = re.compile(r'''
    (?P<space>\s+)
  | (?P<number>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()])
''', re.VERBOSE)

OPERAND = frozenset(['number', VARIABLE, 'function', '(', '-'])
AFTER_OPERAND = frozenset(['+', '-', '*', '/', '^', ')', 'end of input'])

class Token(object):
    __slots__ = ('kind', 'text', 'offset')

    def __init__(self, kind, text, offset):
        self.kind = kind
        self.text = text
        self.offset = offset

    def __repr__(self):
        return '<Token {} {!r} @{}>'.format(self.kind, self.text, self.offset)

def tokenize(text):
    '''Split source text into tokens

    Offsets are byte offsets into the UTF-8 encoding of ``text``.

    Raises:
        ExpressionSyntaxError: on a character no token starts with
    '''
    tokens = []
    position = 0
    while position < len(text):
        match = TOKEN.match(text, position)
        if not match:
            raise ExpressionSyntaxError(
                'unexpected character {!r}'.format(text[position]),
                offset=byte_offset(text, position), expected=OPERAND | AFTER_OPERAND
            )
        kind = match.lastgroup
        if kind != 'space':
            tokens.append(Token(kind, match.group(), byte_offset(text, position)))
        position = match.end()
    tokens.append(Token('end', '', byte_offset(text, len(text))))
    return tokens

def byte_offset(text, position):
    return len(text[:position].encode('utf-8'))

class Parser(object):
    '''Parse one expression

    Arguments:
        text: the source, 1 to 4096 characters
    '''
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0
        self.depth = 0

    @property
    def current(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.current
        self.index += 1
        return token

    def error(self, message, expected, token=None):
        token = token or self.current
        return ExpressionSyntaxError(message, offset=token.offset, expected=expected)

    def describe(self, token):
        return 'end of input' if token.kind == 'end' else repr(token.text)

    def enter(self):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise DepthExceeded(
                'expression nests deeper than {} levels'.format(MAX_DEPTH),
                offset=self.current.offset
            )

    def leave(self):
        self.depth -= 1

    def parse(self):
        expr = self.sum()
        if self.current.kind != 'end':
            raise self.error(
                'unexpected {}'.format(self.describe(self.current)), AFTER_OPERAND
            )
        return expr

    def sum(self):
        expr = self.product()
        while self.current.kind == 'op' and self.current.text in '+-':
            op = self.advance().text
            right = self.product()
            expr = Add(expr, right) if op == '+' else Sub(expr, right)
        return expr

    def product(self):
        expr = self.unary()
        while self.current.kind == 'op' and self.current.text in '*/':
            op = self.advance()
            right = self.unary()
            if op.text == '*':
                expr = Mul(expr, right)
            else:
                self.check_divisor(right, op)
                expr = Div(expr, right)
        return expr

    def check_depth(self, expr, token):
        '''Reject ``expr`` before anything recursive walks it'''
        if tree_depth(expr) > MAX_DEPTH:
            raise DepthExceeded(
                'expression tree is deeper than {} levels'.format(MAX_DEPTH),
                offset=token.offset
            )

    def check_divisor(self, divisor, op):
        self.check_depth(divisor, op)
        folded = canonicalize(divisor)
        if isinstance(folded, Constant) and folded.value == 0:
            raise ExpressionSyntaxError(
                'division by a constant that folds to zero',
                offset=op.offset, expected=()
            )

    def unary(self):
        self.enter()
        try:
            if self.current.kind == 'op' and self.current.text == '-':
                self.advance()
                operand = self.unary()
                if isinstance(operand, Constant):
                    return Constant(-operand.value)
                return Mul(Constant(-1.0), operand)
            return self.power()
        finally:
            self.leave()

    def power(self):
        base = self.atom()
        if not (self.current.kind == 'op' and self.current.text == '^'):
            return base
        caret = self.advance()
        exponent = self.unary()
        return self.build_power(base, exponent, caret)

    def build_power(self, base, exponent, caret):
        self.check_depth(exponent, caret)
        folded = canonicalize(exponent)
        if isinstance(folded, Constant) and is_integral(folded.value) \
                and abs(folded.value) <= MAX_EXPONENT:
            return PowInt(base, int(folded.value))
        if isinstance(base, Constant) and base.value > 0:
            return ConstPow(base, exponent)
        raise ExpressionSyntaxError(
            'exponent must be an integer constant between -{0} and {0} '
            'unless the base is a positive constant'.format(MAX_EXPONENT),
            offset=caret.offset, expected=['integer exponent']
        )

    def atom(self):
        token = self.current
        if token.kind == 'number':
            self.advance()
            value = float(token.text)
            if not math.isfinite(value):
                raise self.error('number {} is out of range'.format(token.text), (), token)
            return Constant(value)
        if token.kind == 'name':
            self.advance()
            if token.text == VARIABLE:
                return Var()
            if token.text in FUNCTIONS:
                return self.call(token)
            raise self.error(
                'unknown name {!r}'.format(token.text), [VARIABLE, 'function'], token
            )
        if token.kind == 'op' and token.text == '(':
            self.advance()
            self.enter()
            try:
                expr = self.sum()
            finally:
                self.leave()
            self.expect(')')
            return expr
        raise self.error('unexpected {}'.format(self.describe(token)), OPERAND)

    def call(self, name):
        if not (self.current.kind == 'op' and self.current.text == '('):
            raise self.error(
                'function {} needs parentheses around its argument'.format(name.text), ['(']
            )
        self.advance()
        self.enter()
        try:
            arg = self.sum()
        finally:
            self.leave()
        self.expect(')')
        return Call(name.text, arg)

    def expect(self, text):
        if not (self.current.kind == 'op' and self.current.text == text):
            raise self.error(
                'expected {!r}, found {}'.format(text, self.describe(self.current)), [text]
            )
        return self.advance()

def parse(text):
    '''Parse source text into an expression tree

    Arguments:
        text: nonempty source of at most 4096 characters

    Returns:
        The (uncanonicalized) :py:class:`~deltacalc.expression.nodes.Expr`

    Raises:
        ExpressionSyntaxError: with the byte offset and the set of tokens that
            would have been accepted there
        DepthExceeded: if the tree is deeper than 64 levels
    '''
    if not isinstance(text, str) or not text.strip():
        raise ExpressionSyntaxError('expression is empty', offset=0, expected=OPERAND)
    if len(text) > MAX_LENGTH:
        raise ExpressionSyntaxError(
            'expression is longer than {} characters'.format(MAX_LENGTH),
            offset=byte_offset(text, MAX_LENGTH)
        )
    expr = Parser(text).parse()
    if tree_depth(expr) > MAX_DEPTH:
        raise DepthExceeded('expression tree is deeper than {} levels'.format(MAX_DEPTH))
    return expr
