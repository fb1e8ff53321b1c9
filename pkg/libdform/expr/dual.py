# -*- coding: utf-8 -*-
# Vectorized forward-mode dual numbers: a value array plus its gradient with
# respect to the plane coordinates (x, y).

import numpy as np


class Dual(object):
    """val + grad . eps

    Parameters
    ----------
    val: ndarray (N,)
    grad: ndarray (N, d)
    """
    __slots__ = ('val', 'grad')
    # ndarray <op> Dual must fall back to the reflected Dual operators
    __array_ufunc__ = None

    def __init__(self, val, grad):
        self.val = np.asarray(val, dtype=np.float64)
        self.grad = np.asarray(grad, dtype=np.float64)

    @classmethod
    def variable(cls, values, index, dim=2):
        values = np.asarray(values, dtype=np.float64)
        grad = np.zeros(values.shape + (dim,))
        grad[..., index] = 1.
        return cls(values, grad)

    def _lift(self, other):
        if isinstance(other, Dual):
            return other
        other = np.asarray(other, dtype=np.float64)
        return Dual(np.broadcast_to(other, self.val.shape), np.zeros_like(self.grad))

    def __add__(self, other):
        other = self._lift(other)
        return Dual(self.val + other.val, self.grad + other.grad)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        return Dual(self.val - other.val, self.grad - other.grad)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return Dual(-self.val, -self.grad)

    def __mul__(self, other):
        other = self._lift(other)
        return Dual(self.val * other.val,
                    self.val[..., None] * other.grad + other.val[..., None] * self.grad)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        val = self.val / other.val
        grad = (self.grad - val[..., None] * other.grad) / other.val[..., None]
        return Dual(val, grad)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, n):
        if not isinstance(n, (int, np.integer)):
            raise TypeError('only integer powers are supported, but got {}'.format(type(n)))
        if n == 0:
            return Dual(np.ones_like(self.val), np.zeros_like(self.grad))
        return Dual(self.val ** n, (n * self.val ** (n - 1))[..., None] * self.grad)

    def sin(self):
        return Dual(np.sin(self.val), np.cos(self.val)[..., None] * self.grad)

    def cos(self):
        return Dual(np.cos(self.val), -np.sin(self.val)[..., None] * self.grad)

    def exp(self):
        e = np.exp(self.val)
        return Dual(e, e[..., None] * self.grad)

    def sqrt(self):
        s = np.sqrt(self.val)
        return Dual(s, (0.5 / s)[..., None] * self.grad)

    def __repr__(self):
        return 'Dual({} + {} eps)'.format(self.val, self.grad)
