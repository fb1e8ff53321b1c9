# -*- coding: utf-8 -*-
# Resistance form on the Sierpinski gasket: base energy, renormalized graph
# energies and harmonic extension.

import logging
from fractions import Fraction

import numpy as np

from libdform.gasket import build_level_graph, check_level, check_address, \
    address_index, Vertex, MAX_LEVEL
from libdform.utils import DomainError

logger = logging.getLogger(__name__)

# 1/5-2/5 rule, kept exact
TWO_FIFTHS = Fraction(2, 5)
ONE_FIFTH = Fraction(1, 5)
RENORMALIZATION = Fraction(5, 3)

# positions of the level-1 values returned by harmonic_extend:
# 0,1,2 corners q0,q1,q2; 3,4,5 midpoints opposite corner 0,1,2
CHILD_SLOTS = np.array([[0, 5, 4],
                        [5, 1, 3],
                        [4, 3, 2]])


def as_triple(u):
    """Validate boundary data: (..., 3) finite reals"""
    u = np.asarray(u, dtype=np.float64)
    if u.shape[-1] != 3:
        raise DomainError('boundary data must have 3 corner values, but got shape {}'.format(u.shape))
    if not np.all(np.isfinite(u)):
        raise DomainError('boundary data must be finite')
    return u


def base_energy(u, v):
    """B0(u, v) = sum_{i<j} (u_i - u_j)(v_i - v_j).

    Works on (..., 3) stacks of triples and returns (...) energies.
    """
    u, v = as_triple(u), as_triple(v)
    du = u[..., [0, 0, 1]] - u[..., [1, 2, 2]]
    dv = v[..., [0, 0, 1]] - v[..., [1, 2, 2]]
    return (du * dv).sum(axis=-1)


def harmonic_extend(u):
    """Harmonic extension of corner values to the six level-1 vertices.

    The midpoint opposite corner k takes (2u_i + 2u_j + u_k)/5.

    Parameters
    ----------
    u: array_like (..., 3)
        corner values (u0, u1, u2); Fraction entries stay exact

    Returns
    -------
    values: ndarray (..., 6)
        (u0, u1, u2, opposite-0, opposite-1, opposite-2)
    """
    if all(isinstance(c, Fraction) for c in np.ravel(np.asarray(u, dtype=object))):
        u0, u1, u2 = u
        mids = [TWO_FIFTHS * (a + b) + ONE_FIFTH * c
                for a, b, c in ((u1, u2, u0), (u0, u2, u1), (u0, u1, u2))]
        return np.array([u0, u1, u2] + mids, dtype=object)
    u = as_triple(u)
    two, one = float(TWO_FIFTHS), float(ONE_FIFTH)
    u0, u1, u2 = u[..., 0], u[..., 1], u[..., 2]
    return np.stack([u0, u1, u2,
                     two * (u1 + u2) + one * u0,
                     two * (u0 + u2) + one * u1,
                     two * (u0 + u1) + one * u2], axis=-1)


def refine_triples(triples):
    """(N, 3) cell boundary triples -> (3N, 3) triples of the children, in address order"""
    values = harmonic_extend(triples)
    return values[:, CHILD_SLOTS].reshape(-1, 3)


class PiecewiseHarmonic(object):
    """Harmonic function sampled on all level-m vertices.

    Attributes
    ----------
    level: int
    values: ndarray (V,)
        indexed like `build_level_graph(level)` vertices
    boundary: ndarray (3,)
    """

    def __init__(self, level, values, boundary, graph=None):
        self.level = level
        self.graph = graph if graph is not None else build_level_graph(level)
        self.values = np.asarray(values, dtype=np.float64)
        self.boundary = as_triple(boundary)
        if self.values.shape != (self.graph.n_vertices,):
            raise DomainError('expected {} vertex values, but got {}'.format(
                self.graph.n_vertices, self.values.shape))
        self.values.flags.writeable = False

    def __call__(self, vertex):
        if not isinstance(vertex, Vertex):
            raise TypeError('vertex should be a Vertex, but got {}'.format(type(vertex)))
        return float(self.values[self.graph.index_of(vertex)])

    def on_cells(self, k):
        """Boundary triples of all level-k cells (address order), k <= level"""
        return self.values[self.graph.cell_corner_indices(k)]

    def cell_triple(self, w):
        w = check_address(w)
        if len(w) > self.level:
            raise DomainError('cell "{}" is finer than level {}'.format(w, self.level))
        return self.on_cells(len(w))[address_index(w)]

    def residual(self):
        """Largest deviation from the 1/5-2/5 rule over every cell of every level"""
        res = 0.
        for k in range(self.level):
            expected = refine_triples(self.on_cells(k))
            res = max(res, float(np.abs(expected - self.on_cells(k + 1)).max()))
        return res


def extend_to_level(u, m, max_level=MAX_LEVEL):
    """The harmonic function on V_m with boundary values u.

    Cell triples are pushed down level by level (vectorized over cells), then
    scattered onto vertices; shared vertices receive identical values.
    """
    m = check_level(m, max_level)
    u = as_triple(u)
    graph = build_level_graph(m, max_level)
    triples = u[None, :]
    for _ in range(m):
        triples = refine_triples(triples)
    values = np.empty(graph.n_vertices)
    values[graph.cells.ravel()] = triples.ravel()
    logger.debug('extended %s to level %d (%d vertices)', u.tolist(), m, graph.n_vertices)
    return PiecewiseHarmonic(m, values, u, graph)


def vertex_values(f, m, max_level=MAX_LEVEL):
    """Coerce f (PiecewiseHarmonic, array, or dict Vertex -> value) to a level-m value array"""
    if isinstance(f, PiecewiseHarmonic):
        if f.level != m:
            raise DomainError('function lives on level {}, not {}'.format(f.level, m))
        return f.values
    graph = build_level_graph(m, max_level)
    if isinstance(f, dict):
        values = np.full(graph.n_vertices, np.nan)
        for vertex, value in f.items():
            values[graph.index_of(vertex)] = value
    else:
        values = np.asarray(f, dtype=np.float64)
        if values.shape != (graph.n_vertices,):
            raise DomainError('expected {} vertex values, but got shape {}'.format(
                graph.n_vertices, values.shape))
    if np.isnan(values).any():
        raise DomainError('missing values at {} level-{} vertices'.format(
            int(np.isnan(values).sum()), m))
    return values


def graph_energy_pair(f, g, m, max_level=MAX_LEVEL):
    """E_m(f, g) = (5/3)^m sum_{edges (p,q)} (f(p)-f(q))(g(p)-g(q))"""
    graph = build_level_graph(m, max_level)
    f, g = vertex_values(f, m, max_level), vertex_values(g, m, max_level)
    df = f[graph.edges[:, 0]] - f[graph.edges[:, 1]]
    dg = g[graph.edges[:, 0]] - g[graph.edges[:, 1]]
    return float(RENORMALIZATION) ** m * float(np.dot(df, dg))


def graph_energy(f, m, max_level=MAX_LEVEL):
    """Renormalized level-m graph energy E_m(f)"""
    return graph_energy_pair(f, f, m, max_level)


def restricted_energy(f, w):
    """Level-m edge energy of f inside cell K_w, |w| <= m.

    For harmonic f this equals (5/3)^|w| B0(f_w, f_w) exactly.
    """
    if not isinstance(f, PiecewiseHarmonic):
        raise TypeError('restricted_energy expects a PiecewiseHarmonic')
    values = f.values
    w = check_address(w)
    m = f.level
    if len(w) > m:
        raise DomainError('cell "{}" is finer than level {}'.format(w, m))
    graph = f.graph
    block = 3 ** (m - len(w))
    start = address_index(w) * block
    edges = graph.edges[3 * start:3 * (start + block)]
    diff = values[edges[:, 0]] - values[edges[:, 1]]
    return float(RENORMALIZATION) ** m * float(np.dot(diff, diff))


def energy_measure_integral(phi, f, m, max_level=MAX_LEVEL):
    """Discrete int phi dGamma(f) = E_m(phi f, f) - E_m(phi, f^2)/2.

    Edgewise this is (5/3)^m sum (phi(p)+phi(q))/2 (f(p)-f(q))^2.
    """
    phi, f = vertex_values(phi, m, max_level), vertex_values(f, m, max_level)
    return graph_energy_pair(phi * f, f, m, max_level) - 0.5 * graph_energy_pair(phi, f * f, m, max_level)
