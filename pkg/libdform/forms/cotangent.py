# -*- coding: utf-8 -*-
# Cotangent spaces of a closed set K in R^2, realized as orthogonal projections,
# the algebra Omega = C^1 + 1-forms and L^2 inner products of forms.

import logging

import numpy as np

from libdform.expr import as_expr, ZERO
from libdform.utils import DomainError

logger = logging.getLogger(__name__)

AMBIENT_DIM = 2
RANK_TOL = 1e-10
CONSTRAINT_TOL = 1e-9
QUADRATURE_TOL = 1e-6


def _as_points(points):
    points = np.atleast_2d(np.asarray(points, dtype=np.float64))
    if points.shape[-1] != AMBIENT_DIM:
        raise DomainError('points must have shape (N, {}), but got {}'.format(AMBIENT_DIM, points.shape))
    return points


class ConstraintSet(object):
    """Finitely many C^1 functions vanishing on K (generators of the ideal I_K).

    An empty set means K = U and every projection is the identity.
    """

    def __init__(self, functions=()):
        self.functions = tuple(as_expr(f) for f in functions)

    def __len__(self):
        return len(self.functions)

    def values(self, points):
        """(N, c) constraint values"""
        points = _as_points(points)
        if not self.functions:
            return np.zeros((points.shape[0], 0))
        return np.stack([g(points) for g in self.functions], axis=-1)

    def gradients(self, points):
        """(N, c, 2) constraint gradients"""
        points = _as_points(points)
        if not self.functions:
            return np.zeros((points.shape[0], 0, AMBIENT_DIM))
        return np.stack([g.gradient(points) for g in self.functions], axis=1)

    def residual(self, points):
        values = self.values(points)
        return float(np.abs(values).max()) if values.size else 0.

    def check(self, points, tol=CONSTRAINT_TOL):
        """Raise DomainError if some point is not on K"""
        res = self.residual(points)
        if res > tol:
            raise DomainError('sample points are off the constraint set (residual {:.3e} > {:.1e})'.format(
                res, tol))

    def __repr__(self):
        return 'ConstraintSet([{}])'.format(', '.join(str(g) for g in self.functions))


class TangentProjection(object):
    """P_p: the orthogonal projector of R^2 onto T_pK"""

    def __init__(self, point, matrix):
        self.point = np.asarray(point, dtype=np.float64)
        self.matrix = np.asarray(matrix, dtype=np.float64)

    @property
    def rank(self):
        return int(round(np.trace(self.matrix)))

    def __call__(self, vectors):
        return np.asarray(vectors) @ self.matrix.T

    def __repr__(self):
        return 'TangentProjection(point={}, rank={})'.format(self.point.tolist(), self.rank)


def projection_matrices(constraints, points, rank_tol=RANK_TOL):
    """Stacked projectors (N, 2, 2) onto the null space of the constraint gradients.

    The row space of each gradient matrix is orthonormalized by an SVD and
    singular values below `rank_tol` count as zero.
    """
    points = _as_points(points)
    eye = np.broadcast_to(np.eye(AMBIENT_DIM), (points.shape[0], AMBIENT_DIM, AMBIENT_DIM))
    if len(constraints) == 0:
        return eye.copy()
    grads = constraints.gradients(points)
    _, s, vt = np.linalg.svd(grads, full_matrices=True)
    k = s.shape[-1]
    keep = (s > rank_tol).astype(np.float64)
    normals = vt[:, :k, :]
    return eye - np.einsum('nki,nk,nkj->nij', normals, keep, normals)


def tangent_projection(constraints, point, rank_tol=RANK_TOL):
    """P_p for a single point p"""
    point = np.asarray(point, dtype=np.float64).reshape(AMBIENT_DIM)
    return TangentProjection(point, projection_matrices(constraints, point[None], rank_tol)[0])


class Form1(object):
    """omega = w_x dx + w_y dy with expression coefficients.

    Example:
        >>> omega = Form1('x', 0)
        >>> omega(np.array([[2., 3.]]))
        array([[2., 0.]])
    """

    def __init__(self, wx, wy):
        self.coefficients = (as_expr(wx), as_expr(wy))

    @property
    def wx(self):
        return self.coefficients[0]

    @property
    def wy(self):
        return self.coefficients[1]

    def __call__(self, points):
        """Coefficient vectors at points, (N, 2)"""
        points = _as_points(points)
        return np.stack([c(points) for c in self.coefficients], axis=-1)

    def __add__(self, other):
        return Form1(self.wx + other.wx, self.wy + other.wy)

    def __sub__(self, other):
        return Form1(self.wx - other.wx, self.wy - other.wy)

    def __neg__(self):
        return Form1(-self.wx, -self.wy)

    def __mul__(self, f):
        """f * omega for a scalar expression (or number) f"""
        f = as_expr(f)
        return Form1(f * self.wx, f * self.wy)

    __rmul__ = __mul__

    def __str__(self):
        return '{} dx + {} dy'.format(self.wx, self.wy)

    def __repr__(self):
        return 'Form1({!r}, {!r})'.format(str(self.wx), str(self.wy))

    def to_dict(self):
        return {'wx': str(self.wx), 'wy': str(self.wy)}


def exact_form(f):
    """dF = dF/dx dx + dF/dy dy"""
    f = as_expr(f)
    return Form1(f.diff('x'), f.diff('y'))


class OmegaElement(object):
    """(f, omega) in Omega = C^1 + Omega^1 with the product
    (f1, w1)(f2, w2) = (f1 f2, f1 w2 + f2 w1)."""

    def __init__(self, f, form=None):
        self.f = as_expr(f)
        self.form = form if form is not None else Form1(ZERO, ZERO)

    def __mul__(self, other):
        return omega_product(self, other)

    def __add__(self, other):
        return OmegaElement(self.f + other.f, self.form + other.form)

    def __repr__(self):
        return 'OmegaElement({}, {})'.format(self.f, self.form)


def omega_product(e1, e2):
    return OmegaElement(e1.f * e2.f, e1.f * e2.form + e2.f * e1.form)


def restrict_form(form, projection):
    """rho_p(omega) = P_p omega(p), the restriction to the fiber T*_pK"""
    return projection.matrix @ form(projection.point[None])[0]


def quotient_norm(form, projection):
    """|[omega]| in T*_pK = |P_p omega(p)|"""
    return float(np.linalg.norm(restrict_form(form, projection)))


def omega_norm(element, sample, constraints=None):
    """Grid supremum of |f| + sum_i |d_i f| plus grid supremum of |omega|.

    The supremum is taken over `sample` only, so the value is a lower bound
    of the norm over the whole domain. With `constraints` the fiber norm is
    the quotient norm.
    """
    sample = _as_points(sample)
    if sample.shape[0] == 0:
        raise DomainError('omega_norm needs a nonempty sample')
    c1 = np.abs(element.f(sample)) + np.abs(element.f.gradient(sample)).sum(axis=1)
    vectors = element.form(sample)
    if constraints is not None:
        vectors = np.einsum('nij,nj->ni', projection_matrices(constraints, sample), vectors)
    return float(c1.max() + np.linalg.norm(vectors, axis=1).max())


class QuadratureMeasure(object):
    """Points of K with nonnegative weights, a discretized measure mu"""

    def __init__(self, points, weights):
        self.points = _as_points(points)
        self.weights = np.asarray(weights, dtype=np.float64).reshape(-1)
        if self.weights.shape[0] != self.points.shape[0]:
            raise DomainError('{} weights for {} points'.format(self.weights.shape[0], self.points.shape[0]))
        if np.any(self.weights < 0):
            raise DomainError('quadrature weights must be nonnegative')

    def __len__(self):
        return self.points.shape[0]

    @property
    def total_mass(self):
        return float(self.weights.sum())

    def check_on(self, constraints, tol=QUADRATURE_TOL):
        constraints.check(self.points, tol)
        return self


def _sample_form(form, q):
    if isinstance(form, Form1):
        return form(q.points)
    values = np.asarray(form, dtype=np.float64)
    if values.shape != (len(q), AMBIENT_DIM):
        raise DomainError('form values of shape {} do not match {} quadrature points'.format(
            values.shape, len(q)))
    return values


def _projections_for(projections, q):
    if projections is None:
        return None
    if isinstance(projections, ConstraintSet):
        return projection_matrices(projections, q.points)
    if isinstance(projections, TangentProjection):
        projections = projections.matrix
    projections = np.asarray(projections, dtype=np.float64)
    if projections.shape == (AMBIENT_DIM, AMBIENT_DIM):
        return np.broadcast_to(projections, (len(q), AMBIENT_DIM, AMBIENT_DIM))
    if projections.shape != (len(q), AMBIENT_DIM, AMBIENT_DIM):
        raise DomainError('{} projections for {} quadrature points'.format(projections.shape[0], len(q)))
    return projections


def l2_inner(omega, eta, projections, q):
    """<omega, eta> = sum_k w_k <P_k omega(p_k), P_k eta(p_k)>.

    Parameters
    ----------
    omega, eta: Form1 or ndarray (N, 2)
        forms, or their coefficient vectors at the quadrature points
    projections: None, (2, 2), (N, 2, 2) or ConstraintSet
        None is the identity
    q: QuadratureMeasure
    """
    a, b = _sample_form(omega, q), _sample_form(eta, q)
    proj = _projections_for(projections, q)
    if proj is not None:
        a = np.einsum('nij,nj->ni', proj, a)
        b = np.einsum('nij,nj->ni', proj, b)
    return float(np.dot(q.weights, (a * b).sum(axis=1)))


def circle_constraints():
    """K = unit circle, I_K generated by x^2 + y^2 - 1"""
    return ConstraintSet(['x^2 + y^2 - 1'])


def circle_quadrature(n):
    """n equispaced points on the unit circle with arc-length weights 2 pi / n"""
    if n < 1:
        raise DomainError('circle quadrature needs at least one point')
    theta = 2 * np.pi * np.arange(n) / n
    return QuadratureMeasure(np.c_[np.cos(theta), np.sin(theta)], np.full(n, 2 * np.pi / n))
