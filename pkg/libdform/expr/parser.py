# -*- coding: utf-8 -*-
# A small expression language for scalar functions of (x, y):
#
#   expr   := term (('+'|'-') term)*
#   term   := unary (('*'|'/') unary)*
#   unary  := '-' unary | factor
#   factor := atom ('^' integer)?
#   atom   := number | 'x' | 'y' | '(' expr ')' | ident '(' expr ')'
#
# '^' binds tighter than unary minus: -x^2 is -(x^2).

import re
from dataclasses import dataclass

import numpy as np

from libdform.utils import ParseError, UnknownIdentifierError, NumericError
from .dual import Dual

VARIABLES = ('x', 'y')
FUNCTIONS = {
    'sin': (np.sin, Dual.sin),
    'cos': (np.cos, Dual.cos),
    'exp': (np.exp, Dual.exp),
    'sqrt': (np.sqrt, Dual.sqrt),
}
ATOM_START = frozenset(['number', 'x', 'y', '(', '-', 'function'])


class Expr(object):
    """Base of the expression tree; nodes are frozen dataclasses.

    An Expr is a C^1 scalar function of points in the plane:

        >>> f = parse('x^2 + y')
        >>> f(np.array([[1., 2.]]))
        array([3.])
        >>> f.gradient(np.array([[1., 2.]]))
        array([[2., 1.]])
    """

    def _eval(self, env):
        raise NotImplementedError

    def _evaluate(self, points, dual):
        points = np.asarray(points, dtype=np.float64)
        single = points.ndim == 1
        points = np.atleast_2d(points)
        if points.shape[-1] != 2:
            raise ValueError('points must have shape (N, 2), but got {}'.format(points.shape))
        if dual:
            env = {'x': Dual.variable(points[:, 0], 0), 'y': Dual.variable(points[:, 1], 1)}
        else:
            env = {'x': points[:, 0], 'y': points[:, 1]}
        env['_shape'] = points.shape[:1]
        with np.errstate(all='ignore'):
            out = self._eval(env)
        if dual:
            val = np.broadcast_to(out.val, env['_shape'])
            grad = np.broadcast_to(out.grad, env['_shape'] + (2,))
            out = grad
            check = np.concatenate([val, grad.ravel()])
        else:
            out = np.broadcast_to(np.asarray(out, dtype=np.float64), env['_shape']).copy()
            check = out
        if not np.all(np.isfinite(check)):
            raise NumericError('"{}" is not finite at {} sample points'.format(
                self, int(np.sum(~np.isfinite(check)))))
        return out[0] if single else np.array(out)

    def __call__(self, points):
        """Values at points (N, 2) -> (N,), or a single point (2,) -> scalar"""
        return self._evaluate(points, dual=False)

    def gradient(self, points):
        """Gradients at points (N, 2) -> (N, 2), by dual-number evaluation"""
        return self._evaluate(points, dual=True)

    def diff(self, name):
        """Partial derivative with respect to variable `name`, as a new tree"""
        raise NotImplementedError

    def variables(self):
        raise NotImplementedError

    def __add__(self, other):
        other = _operand(other)
        return NotImplemented if other is None else add(self, other)

    def __radd__(self, other):
        other = _operand(other)
        return NotImplemented if other is None else add(other, self)

    def __sub__(self, other):
        other = _operand(other)
        return NotImplemented if other is None else sub(self, other)

    def __rsub__(self, other):
        other = _operand(other)
        return NotImplemented if other is None else sub(other, self)

    def __mul__(self, other):
        other = _operand(other)
        return NotImplemented if other is None else mul(self, other)

    def __rmul__(self, other):
        other = _operand(other)
        return NotImplemented if other is None else mul(other, self)

    def __truediv__(self, other):
        other = _operand(other)
        return NotImplemented if other is None else div(self, other)

    def __neg__(self):
        return neg(self)


@dataclass(frozen=True, eq=True)
class Num(Expr):
    value: float

    def _eval(self, env):
        if isinstance(env['x'], Dual):
            return Dual(np.full(env['_shape'], self.value), np.zeros(env['_shape'] + (2,)))
        return np.full(env['_shape'], self.value)

    def diff(self, name):
        return ZERO

    def variables(self):
        return frozenset()

    def __str__(self):
        # negative literals only come from the algebra, never from parse
        if self.value < 0:
            return '(-{!r})'.format(-float(self.value))
        return repr(float(self.value))


@dataclass(frozen=True, eq=True)
class Var(Expr):
    name: str

    def _eval(self, env):
        return env[self.name]

    def diff(self, name):
        return ONE if name == self.name else ZERO

    def variables(self):
        return frozenset([self.name])

    def __str__(self):
        return self.name


@dataclass(frozen=True, eq=True)
class Neg(Expr):
    operand: Expr

    def _eval(self, env):
        return -self.operand._eval(env)

    def diff(self, name):
        return neg(self.operand.diff(name))

    def variables(self):
        return self.operand.variables()

    def __str__(self):
        return '(-{})'.format(self.operand)


@dataclass(frozen=True, eq=True)
class BinOp(Expr):
    op: str
    left: Expr
    right: Expr

    def _eval(self, env):
        a, b = self.left._eval(env), self.right._eval(env)
        if self.op == '+':
            return a + b
        if self.op == '-':
            return a - b
        if self.op == '*':
            return a * b
        return a / b

    def diff(self, name):
        a, b = self.left, self.right
        da, db = a.diff(name), b.diff(name)
        if self.op == '+':
            return add(da, db)
        if self.op == '-':
            return sub(da, db)
        if self.op == '*':
            return add(mul(da, b), mul(a, db))
        return div(sub(mul(da, b), mul(a, db)), Pow(b, 2))

    def variables(self):
        return self.left.variables() | self.right.variables()

    def __str__(self):
        return '({} {} {})'.format(self.left, self.op, self.right)


@dataclass(frozen=True, eq=True)
class Pow(Expr):
    base: Expr
    exponent: int

    def _eval(self, env):
        return self.base._eval(env) ** self.exponent

    def diff(self, name):
        n = self.exponent
        if n == 0:
            return ZERO
        lowered = ONE if n == 1 else (self.base if n == 2 else Pow(self.base, n - 1))
        return mul(mul(Num(float(n)), lowered), self.base.diff(name))

    def variables(self):
        return self.base.variables()

    def __str__(self):
        return '({}^{})'.format(self.base, self.exponent)


@dataclass(frozen=True, eq=True)
class Call(Expr):
    func: str
    arg: Expr

    def _eval(self, env):
        value = self.arg._eval(env)
        plain, dual = FUNCTIONS[self.func]
        return dual(value) if isinstance(value, Dual) else plain(value)

    def diff(self, name):
        inner = self.arg.diff(name)
        if self.func == 'sin':
            outer = Call('cos', self.arg)
        elif self.func == 'cos':
            outer = Neg(Call('sin', self.arg))
        elif self.func == 'exp':
            outer = self
        else:
            return div(inner, mul(Num(2.), self))
        return mul(outer, inner)

    def variables(self):
        return self.arg.variables()

    def __str__(self):
        return '{}({})'.format(self.func, self.arg)


ZERO = Num(0.)
ONE = Num(1.)


def _is(e, value):
    return isinstance(e, Num) and e.value == value


def add(a, b):
    if _is(a, 0.):
        return b
    if _is(b, 0.):
        return a
    return BinOp('+', a, b)


def sub(a, b):
    if _is(b, 0.):
        return a
    if _is(a, 0.):
        return neg(b)
    return BinOp('-', a, b)


def mul(a, b):
    if _is(a, 0.) or _is(b, 0.):
        return ZERO
    if _is(a, 1.):
        return b
    if _is(b, 1.):
        return a
    return BinOp('*', a, b)


def div(a, b):
    if _is(a, 0.):
        return ZERO
    if _is(b, 1.):
        return a
    return BinOp('/', a, b)


def neg(a):
    if _is(a, 0.):
        return ZERO
    if isinstance(a, Neg):
        return a.operand
    return Neg(a)


TOKEN_RE = re.compile(r'\s*(?:'
                      r'(?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)'
                      r'|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)'
                      r'|(?P<op>[-+*/^()])'
                      r')')


class Token(object):
    __slots__ = ('kind', 'text', 'offset')

    def __init__(self, kind, text, offset):
        self.kind = kind
        self.text = text
        self.offset = offset

    def __repr__(self):
        return 'Token({}, {!r}, {})'.format(self.kind, self.text, self.offset)


def tokenize(source):
    """Split source into tokens; offsets are byte offsets into the utf-8 text"""
    tokens = []
    pos = 0
    while True:
        while pos < len(source) and source[pos].isspace():
            pos += 1
        offset = len(source[:pos].encode('utf-8'))
        if pos >= len(source):
            tokens.append(Token('end', '', offset))
            return tokens
        match = TOKEN_RE.match(source, pos)
        if match is None or match.end() == pos:
            raise ParseError('unexpected character {!r}'.format(source[pos]), offset,
                             ['number', 'identifier', 'operator'])
        kind = match.lastgroup
        text = match.group(kind)
        tokens.append(Token(text if kind == 'op' else kind, text,
                            len(source[:match.start(kind)].encode('utf-8'))))
        pos = match.end()


class Parser(object):
    """Recursive-descent parser over the token list"""

    def __init__(self, source):
        self.source = source
        self.tokens = tokenize(source)
        self.pos = 0

    @property
    def current(self):
        return self.tokens[self.pos]

    def advance(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, kind, expected=None):
        if self.current.kind != kind:
            raise ParseError('unexpected {}'.format(self._describe(self.current)),
                             self.current.offset, expected or [kind])
        return self.advance()

    @staticmethod
    def _describe(token):
        return 'end of input' if token.kind == 'end' else 'token {!r}'.format(token.text)

    def parse(self):
        node = self.expr()
        if self.current.kind != 'end':
            raise ParseError('unexpected {}'.format(self._describe(self.current)),
                             self.current.offset, ['+', '-', '*', '/', '^', 'end of input'])
        return node

    def expr(self):
        node = self.term()
        while self.current.kind in ('+', '-'):
            op = self.advance().kind
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.current.kind in ('*', '/'):
            op = self.advance().kind
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        if self.current.kind == '-':
            self.advance()
            return Neg(self.unary())
        return self.factor()

    def factor(self):
        node = self.atom()
        if self.current.kind == '^':
            self.advance()
            token = self.expect('number', ['integer'])
            if not token.text.isdigit():
                raise ParseError('exponent {!r} is not an integer literal'.format(token.text),
                                 token.offset, ['integer'])
            node = Pow(node, int(token.text))
        return node

    def atom(self):
        token = self.current
        if token.kind == 'number':
            self.advance()
            return Num(float(token.text))
        if token.kind == '(':
            self.advance()
            node = self.expr()
            self.expect(')')
            return node
        if token.kind == 'ident':
            self.advance()
            if token.text in VARIABLES:
                return Var(token.text)
            if token.text in FUNCTIONS:
                self.expect('(')
                node = Call(token.text, self.expr())
                self.expect(')')
                return node
            raise UnknownIdentifierError('unknown identifier {!r}'.format(token.text),
                                         token.offset, list(VARIABLES) + sorted(FUNCTIONS))
        raise ParseError('unexpected {}'.format(self._describe(token)), token.offset, ATOM_START)


def parse(source):
    """Parse source text into an Expr"""
    return Parser(source).parse()


def as_expr(obj):
    """Expr, source text or a real number -> Expr"""
    if isinstance(obj, Expr):
        return obj
    if isinstance(obj, str):
        return parse(obj)
    if isinstance(obj, (int, float, np.integer, np.floating)) and not isinstance(obj, bool):
        return Num(float(obj))
    raise TypeError('cannot turn {} into an expression'.format(type(obj)))


def _operand(obj):
    # numbers and Exprs only; source text is parsed explicitly via parse()
    if isinstance(obj, Expr):
        return obj
    if isinstance(obj, (int, float, np.integer, np.floating)) and not isinstance(obj, bool):
        return Num(float(obj))
    return None
