# -*- coding: utf-8 -*-
'''Expression tree nodes.

All nodes are frozen dataclasses, so trees compare structurally, hash and
can be shared between threads.
'''

from dataclasses import dataclass

FUNCTIONS = ('sqrt', 'ln', 'exp', 'sin', 'cos', 'sinh', 'cosh')
MAX_EXPONENT = 60
MAX_DEPTH = 64
VARIABLE = 't'

class Expr(object):
    '''Base class for expression nodes'''
    __slots__ = ()

    def children(self):
        return ()

@dataclass(frozen=True)
class Constant(Expr):
    value: float

    def __post_init__(self):
        # -0.0 and 0.0 must compare and render the same
        object.__setattr__(self, 'value', float(self.value) + 0.0)

@dataclass(frozen=True)
class Var(Expr):
    name: str = VARIABLE

@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr

    def children(self):
        return (self.left, self.right)

@dataclass(frozen=True)
class Sub(Expr):
    left: Expr
    right: Expr

    def children(self):
        return (self.left, self.right)

@dataclass(frozen=True)
class Mul(Expr):
    left: Expr
    right: Expr

    def children(self):
        return (self.left, self.right)

@dataclass(frozen=True)
class Div(Expr):
    left: Expr
    right: Expr

    def children(self):
        return (self.left, self.right)

@dataclass(frozen=True)
class PowInt(Expr):
    '''``base ** exponent`` for an integer exponent, ``|exponent| <= 60``
    '''
    base: Expr
    exponent: int

    def children(self):
        return (self.base,)

@dataclass(frozen=True)
class ConstPow(Expr):
    '''``k ** exponent`` for a positive constant base ``k``

    Evaluated as ``exp(exponent * ln k)``.
    '''
    base: Constant
    exponent: Expr

    def children(self):
        return (self.base, self.exponent)

@dataclass(frozen=True)
class Call(Expr):
    fn: str
    arg: Expr

    def children(self):
        return (self.arg,)

def tree_depth(expr):
    '''Depth of a tree, a leaf has depth 1

    Walks the tree with an explicit stack so very long chains from the
    parser cannot hit the recursion limit.
    '''
    deepest = 0
    stack = [(expr, 1)]
    while stack:
        node, depth = stack.pop()
        deepest = max(deepest, depth)
        stack.extend((child, depth + 1) for child in node.children())
    return deepest

def is_integral(value):
    return float(value).is_integer()
