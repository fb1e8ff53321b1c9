# -*- coding: utf-8 -*-
# From C^1 forms on the harmonic gasket to the Dirichlet-form Hilbert module H:
# the map pi, its adjoint pi*, the seminorm |.|_Z and the energy identities.

import logging
from functools import lru_cache

import numpy as np

from libdform.energy import gamma_matrices, z_field, kusuoka_table, graph_energy, \
    build_chart, compose, cell_frames
from libdform.expr import as_expr
from libdform.gasket import check_level, MAX_LEVEL
from libdform.utils import DomainError
from .cotangent import Form1, QuadratureMeasure, l2_inner, exact_form

logger = logging.getLogger(__name__)


def _check_coefficients(level, coefficients, width):
    coefficients = np.asarray(coefficients, dtype=np.float64)
    if coefficients.shape != (3 ** level, width):
        raise DomainError('a level-{} field needs shape ({}, {}), but got {}'.format(
            level, 3 ** level, width, coefficients.shape))
    return coefficients


class SimpleTensorField(object):
    """sum_i phi^i (x) omega_i with omega_i constant on each level-m cell.

    Attributes
    ----------
    level: int
    coefficients: ndarray (3^m, 2)
        coefficients[w] = (omega_1(w), omega_2(w))
    """

    def __init__(self, level, coefficients, max_level=MAX_LEVEL):
        self.level = check_level(level, max_level)
        self.coefficients = _check_coefficients(level, coefficients, 2)

    @classmethod
    def constant(cls, level, c1, c2, max_level=MAX_LEVEL):
        return cls(level, np.tile([c1, c2], (3 ** level, 1)).astype(np.float64), max_level)

    @classmethod
    def zeros(cls, level, max_level=MAX_LEVEL):
        return cls(level, np.zeros((3 ** level, 2)), max_level)

    def act(self, phi):
        """Module action phi (b (x) c) = b (x) (phi c) for a cell-wise constant phi"""
        phi = np.broadcast_to(np.asarray(phi, dtype=np.float64), (3 ** self.level,))
        return SimpleTensorField(self.level, phi[:, None] * self.coefficients, self.level)

    def __add__(self, other):
        _same_level(self, other)
        return SimpleTensorField(self.level, self.coefficients + other.coefficients, self.level)

    def __mul__(self, scale):
        return SimpleTensorField(self.level, scale * self.coefficients, self.level)

    __rmul__ = __mul__

    def to_dict(self):
        return {'level': self.level, 'coefficients': self.coefficients.tolist()}


class CellwiseForm(object):
    """A 1-form with one coefficient vector per level-m cell (the range of pi*)"""

    def __init__(self, level, coefficients, max_level=MAX_LEVEL):
        self.level = check_level(level, max_level)
        self.coefficients = _check_coefficients(level, coefficients, 2)

    def at_level(self, k):
        """Coefficients repeated onto the level-k cells, k >= level"""
        if k < self.level:
            raise DomainError('cannot sample a level-{} form on level {}'.format(self.level, k))
        return np.repeat(self.coefficients, 3 ** (k - self.level), axis=0)

    def to_dict(self):
        return {'level': self.level, 'coefficients': self.coefficients.tolist()}


def _same_level(u, v):
    if u.level != v.level:
        raise DomainError('fields live on levels {} and {}'.format(u.level, v.level))


@lru_cache(maxsize=None)
def _representatives(m):
    reps = cell_frames(m, m).mean(axis=1)
    reps.flags.writeable = False
    return reps


def cell_representatives(m, max_level=MAX_LEVEL):
    """Barycenters of the Phi-image triangles of the level-m cells, (3^m, 2)"""
    return _representatives(check_level(m, max_level))


def sample_form(form, m, max_level=MAX_LEVEL):
    """Coefficients of a Form1 at the cell representatives, or of a CellwiseForm on level m"""
    if isinstance(form, CellwiseForm):
        return form.at_level(m)
    if not isinstance(form, Form1):
        raise TypeError('expected Form1 or CellwiseForm, but got {}'.format(type(form)))
    return form(cell_representatives(m, max_level))


def kusuoka_quadrature(m, max_level=MAX_LEVEL):
    """Cell representatives weighted by nu(K_w)"""
    return QuadratureMeasure(cell_representatives(m, max_level), kusuoka_table(m, max_level).entries)


def h_inner(u, v):
    """<u, v>_H = sum_w sum_ij u_i(w) v_j(w) Gamma(phi^i, phi^j)(K_w)"""
    _same_level(u, v)
    gamma = gamma_matrices(u.level, u.level)
    return float(np.einsum('wi,wij,wj->', u.coefficients, gamma, v.coefficients))


def pi_map(form, m, max_level=MAX_LEVEL):
    """pi(omega) = sum_i phi^i (x) (omega_i o Phi), sampled cell by cell"""
    return SimpleTensorField(m, sample_form(form, m, max_level), max_level)


def z_seminorm(form, m, max_level=MAX_LEVEL):
    """|omega|_Z^2 = sum_w nu(K_w) omega(p_w)^T Z(w) omega(p_w) (the squared seminorm)"""
    field = z_field(m, max_level=max_level)
    c = sample_form(form, m, max_level)
    return float(np.dot(field.nu.entries, np.einsum('wi,wij,wj->w', c, field.matrices, c)))


def pi_star(u):
    """pi* u: eta_j(w) = sum_i Z(w)^{ij} u_i(w)"""
    field = z_field(u.level, max_level=u.level)
    return CellwiseForm(u.level, np.einsum('wij,wi->wj', field.matrices, u.coefficients), u.level)


def adjointness_residual(form, u, refine=2, max_level=MAX_LEVEL):
    """|<pi omega, u>_H - <omega, pi* u>_{L^2(nu)}|.

    The L^2 side integrates omega on the quadrature `refine` levels below u,
    with pi* u constant on each level-m cell.
    """
    m = u.level
    lhs = h_inner(pi_map(form, m, m), u)
    fine = check_level(m + refine, max_level)
    q = kusuoka_quadrature(fine, max_level)
    rhs = l2_inner(sample_form(form, fine, max_level), pi_star(u).at_level(fine), None, q)
    return abs(lhs - rhs)


def assemble_tensor(g, f, m, max_level=MAX_LEVEL):
    """sum_i phi^i (x) g d_iF(Phi) for a cell-wise constant g"""
    return pi_map(exact_form(f), m, max_level).act(g)


def weighted_z_energy(g, f, m, max_level=MAX_LEVEL):
    """sum_w g(w)^2 dF(p_w)^T Z(w) dF(p_w) nu(K_w)"""
    field = z_field(m, max_level=max_level)
    grad = as_expr(f).gradient(cell_representatives(m, max_level))
    g = np.broadcast_to(np.asarray(g, dtype=np.float64), (3 ** m,))
    return float(np.dot(g ** 2 * field.nu.entries, np.einsum('wi,wij,wj->w', grad, field.matrices, grad)))


def energy_identity_report(f, m, max_level=MAX_LEVEL):
    """Compare |dF|_Z^2 with the graph energy of F o Phi on V_m"""
    f = as_expr(f)
    seminorm2 = z_seminorm(exact_form(f), m, max_level)
    energy = graph_energy(compose(f, build_chart(m, max_level)), m, max_level)
    gap = abs(seminorm2 - energy) / abs(energy) if energy != 0 else abs(seminorm2)
    logger.info('energy identity at level %d: seminorm^2 %.12g, graph energy %.12g, gap %.3e',
                m, seminorm2, energy, gap)
    return {'level': m, 'seminorm2': seminorm2, 'graph_energy': energy, 'relative_gap': gap}
