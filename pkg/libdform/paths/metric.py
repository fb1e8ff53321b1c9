# -*- coding: utf-8 -*-
# Estimates of the intrinsic metric
#
#   rho(x, y) = sup { f(x) - f(y) : dGamma(f)/dnu <= 1 }
#
# over potentials that are affine on every Phi-image cell triangle. On a cell
# with gradient g the constraint reads g^T Z(w) g <= 1, an ellipse. The 'highs'
# method swaps each ellipse for its inscribed and circumscribed regular
# polygons, which gives two linear programs bracketing the discrete value.

import logging
from functools import lru_cache

import numpy as np
from scipy import sparse
from scipy.optimize import linprog

from libdform.energy import build_chart, z_field
from libdform.gasket import build_level_graph, check_level, MAX_LEVEL
from libdform.utils import DomainError, SolverError
from .integration import _as_vertex

logger = logging.getLogger(__name__)

METHODS = ('highs', 'subgradient')
# corner differences (f1 - f0, f2 - f0)
CORNER_DIFF = np.array([[-1., 1., 0.],
                        [-1., 0., 1.]])


class MetricEstimate(object):
    """lower <= rho(x, y) <= upper for the discrete program at `level`"""

    def __init__(self, lower, upper, level, method='highs'):
        self.lower = float(lower)
        self.upper = float(upper)
        self.level = int(level)
        self.method = method

    def __repr__(self):
        return 'MetricEstimate(lower={!r}, upper={!r}, level={}, method={})'.format(
            self.lower, self.upper, self.level, self.method)

    def to_dict(self):
        return {'level': self.level, 'lower': self.lower, 'upper': self.upper, 'method': self.method}


@lru_cache(maxsize=None)
def gradient_operator(m, max_level=MAX_LEVEL):
    """Per-cell affine gradient coefficients C (3^m, 2, 3): g_w = C_w f[cells[w]]"""
    chart = build_chart(m, max_level)
    frames = chart.points[chart.graph.cells]
    edges = frames[:, 1:, :] - frames[:, :1, :]
    coeffs = np.linalg.solve(edges, np.broadcast_to(CORNER_DIFF, (frames.shape[0], 2, 3)))
    coeffs.flags.writeable = False
    return coeffs


@lru_cache(maxsize=None)
def _whitened_operator(m):
    """S_w C_w with S_w = diag(sqrt(lambda)) V^T, so that g^T Z g = |S_w g|^2"""
    lam, vec = np.linalg.eigh(z_field(m, max_level=m).matrices)
    s = np.sqrt(np.clip(lam, 0., None))[:, :, None] * np.swapaxes(vec, 1, 2)
    op = s @ gradient_operator(m, m)
    op.flags.writeable = False
    return op


def polygon_normals(facets):
    """Unit normals at angles (2k+1) pi / K; an even K keeps the polygon symmetric
    under both axis flips"""
    if facets < 4 or facets % 2:
        raise DomainError('the polygon needs an even number >= 4 of facets, but got {}'.format(facets))
    theta = (2 * np.arange(facets) + 1) * np.pi / facets
    return np.c_[np.cos(theta), np.sin(theta)]


@lru_cache(maxsize=None)
def _polygon_constraints(m, facets):
    op = _whitened_operator(m)
    graph = build_level_graph(m, m)
    cells = graph.cells
    rows = np.einsum('kd,wdc->wkc', polygon_normals(facets), op)
    n_cells = cells.shape[0]
    row_idx = np.repeat(np.arange(n_cells * facets), 3)
    col_idx = np.broadcast_to(cells[:, None, :], rows.shape).ravel()
    return sparse.csr_matrix((rows.ravel(), (row_idx, col_idx)),
                             shape=(n_cells * facets, graph.n_vertices))


def _solve_lp(a_ub, offset, ix, iy, n, tol, max_iter):
    c = np.zeros(n)
    c[ix], c[iy] = -1., 1.
    a_eq = sparse.csr_matrix(([1.], ([0], [iy])), shape=(1, n))
    res = linprog(c, A_ub=a_ub, b_ub=np.full(a_ub.shape[0], offset), A_eq=a_eq, b_eq=[0.],
                  bounds=(None, None), method='highs',
                  options={'maxiter': max_iter, 'primal_feasibility_tolerance': tol,
                           'dual_feasibility_tolerance': tol})
    if res.status != 0:
        raise SolverError('linear program failed: {}'.format(res.message))
    return -float(res.fun)


def _subgradient(ix, iy, m, max_iter, step, target, near=1e-3):
    """min max_w |S_w C_w f|^2 over potentials with f(x) - f(y) = 1.

    Every iterate is feasible after rescaling, so 1/sqrt(best) is a lower
    bound on rho. The loop stops once that bound reaches `target` or after
    max_iter steps. Cells within `near` of the worst one share the step.

    Returns (lower, iterations)
    """
    chart = build_chart(m, m)
    cells = chart.graph.cells
    op = _whitened_operator(m)
    n = chart.points.shape[0]
    direction = chart.points[ix] - chart.points[iy]
    f = chart.points @ direction / float(direction @ direction)
    pin = np.zeros(n)
    pin[ix], pin[iy] = 1., -1.
    pin /= np.linalg.norm(pin)
    best, it = np.inf, 0
    for it in range(1, max_iter + 1):
        h = np.einsum('wdc,wc->wd', op, f[cells])
        q = (h ** 2).sum(axis=1)
        top = float(q.max())
        best = min(best, top)
        if 1. / np.sqrt(best) >= target:
            break
        active = np.flatnonzero(q >= top * (1 - near))
        grad = np.zeros(n)
        np.add.at(grad, cells[active], 2 * np.einsum('wdc,wd->wc', op[active], h[active]))
        grad -= (grad @ pin) * pin
        norm = np.linalg.norm(grad)
        if norm == 0:
            break
        f = f - step / np.sqrt(it) * grad / norm
    return 1. / np.sqrt(best), it


def intrinsic_distance(x, y, m, method='highs', facets=32, max_iter=20000, step=0.5,
                       tol=1e-8, max_level=MAX_LEVEL):
    """Estimate rho_nu(x, y) between two level-m vertices.

    Parameters
    ----------
    x, y: Vertex or str
        level-m vertices (addresses like "01.2" or q0/q1/q2)
    m: int
    method: str
        'highs': inscribed/circumscribed polygon LPs (lower, upper)
        'subgradient': lower from the projected subgradient scheme, upper
        from the circumscribed polygon LP
    facets: int
        polygon facets; for 'subgradient' the iteration stops once the
        bracket is as tight as the 'highs' one

    Returns
    -------
    estimate: MetricEstimate
    """
    m = check_level(m, max_level)
    if method not in METHODS:
        raise DomainError('unknown metric method "{}", choose from {}'.format(method, METHODS))
    graph = build_level_graph(m, max_level)
    ix, iy = graph.index_of(_as_vertex(x)), graph.index_of(_as_vertex(y))
    if ix == iy:
        return MetricEstimate(0., 0., m, method)
    a_ub = _polygon_constraints(m, facets)
    upper = _solve_lp(a_ub, 1., ix, iy, graph.n_vertices, tol, max_iter)
    ratio = np.cos(np.pi / facets)
    if method == 'subgradient':
        lower, iterations = _subgradient(ix, iy, m, max_iter, step, ratio * upper)
        if lower < ratio * upper:
            logger.warning('subgradient bracket [%.10g, %.10g] still open after %d iterations',
                           lower, upper, iterations)
        else:
            logger.debug('subgradient closed the bracket after %d iterations', iterations)
    else:
        lower = _solve_lp(a_ub, ratio, ix, iy, graph.n_vertices, tol, max_iter)
    logger.debug('rho(%s, %s) at level %d in [%.10g, %.10g]',
                 graph.vertex(ix).label, graph.vertex(iy).label, m, lower, upper)
    return MetricEstimate(lower, upper, m, method)


def intrinsic_lower_bound(x, y, m, **kwargs):
    return intrinsic_distance(x, y, m, **kwargs).lower


def mu_length(path, m=None, **kwargs):
    """sum_i rho(v_{i-1}, v_i) over consecutive path vertices, at level m >= path level"""
    m = path.level if m is None else m
    if m < path.level:
        raise DomainError('metric level {} is coarser than the level-{} path'.format(m, path.level))
    return float(sum(intrinsic_lower_bound(a, b, m, **kwargs)
                     for a, b in zip(path.vertices[:-1], path.vertices[1:])))
