# -*- coding: utf-8 -*-
# Edge-paths in the gasket, line integrals of 1-forms along their Phi-images
# and Euclidean lengths of those images.

import logging
import math

import numpy as np
from scipy.sparse import csgraph

from libdform.gasket import Vertex, build_level_graph, check_level, vertex_from_address, MAX_LEVEL
from libdform.utils import DomainError

logger = logging.getLogger(__name__)

# outer edges by keyword, as (start, end) corners
OUTER_EDGES = {
    'bottom': ('q0', 'q1'),
    'left': ('q0', 'q2'),
    'right': ('q1', 'q2'),
}


def _as_vertex(v):
    return vertex_from_address(v) if isinstance(v, str) else Vertex(*v)


class EdgePath(object):
    """Vertices v_0, ..., v_n of the level-m graph with v_{i-1} ~ v_i.

    Every level-m edge is a line segment contained in the gasket, so an
    EdgePath is a rectifiable curve in K.
    """

    def __init__(self, level, vertices, max_level=MAX_LEVEL):
        self.level = check_level(level, max_level)
        self.vertices = tuple(_as_vertex(v) for v in vertices)
        if not self.vertices:
            raise DomainError('an edge-path needs at least one vertex')
        graph = build_level_graph(self.level, max_level)
        self.indices = np.array([graph.index_of(v) for v in self.vertices], dtype=np.int64)
        for n, (a, b) in enumerate(zip(self.indices[:-1], self.indices[1:])):
            if not graph.adjacent(a, b):
                raise DomainError('{} and {} (steps {}, {}) are not adjacent at level {}'.format(
                    self.vertices[n].label, self.vertices[n + 1].label, n, n + 1, self.level))

    @classmethod
    def from_spec(cls, spec, level=None, max_level=MAX_LEVEL):
        """Path from text: bottom|left|right, or a comma list of vertex addresses.

        Keyword paths are the outer edge at level 0 (refined to `level` if
        given); a comma list lives on `level`, default the finest level of its
        vertices.
        """
        spec = spec.strip()
        if spec in OUTER_EDGES:
            path = cls(0, [vertex_from_address(v) for v in OUTER_EDGES[spec]])
            return refine_path(path, level, max_level) if level else path
        vertices = [vertex_from_address(v) for v in spec.split(',') if v.strip()]
        if not vertices:
            raise DomainError('empty path spec "{}"'.format(spec))
        if level is None:
            level = max(v.k for v in vertices)
        return cls(level, vertices, max_level)

    @property
    def start(self):
        return self.vertices[0]

    @property
    def end(self):
        return self.vertices[-1]

    def __len__(self):
        return len(self.vertices)

    def reversed(self):
        return EdgePath(self.level, self.vertices[::-1], self.level)

    def __add__(self, other):
        """Concatenation; other must start where self ends"""
        if self.level != other.level:
            raise DomainError('cannot join paths of levels {} and {}'.format(self.level, other.level))
        if self.end != other.start:
            raise DomainError('path ends at {} but the next starts at {}'.format(
                self.end.label, other.start.label))
        return EdgePath(self.level, self.vertices + other.vertices[1:], self.level)

    def __eq__(self, other):
        return isinstance(other, EdgePath) and self.level == other.level \
            and self.vertices == other.vertices

    def __repr__(self):
        return 'EdgePath(level={}, {})'.format(self.level, ' -> '.join(v.label for v in self.vertices))

    def to_dict(self):
        return {'level': self.level, 'vertices': [v.label for v in self.vertices]}


def refine_path(path, k, max_level=MAX_LEVEL):
    """Replace every edge by its 2^k collinear sub-edges at level m + k"""
    if k < 0:
        raise DomainError('refinement must be non-negative, but got {}'.format(k))
    if k == 0:
        return path
    fine = check_level(path.level + k, max_level)
    steps = 2 ** k
    lattice = np.array([v.lattice(fine) for v in path.vertices], dtype=np.int64)
    t = np.arange(steps)[None, :, None]
    points = lattice[:-1, None, :] + t * (lattice[1:, None, :] - lattice[:-1, None, :]) // steps
    points = np.r_[points.reshape(-1, 2), lattice[-1:]]
    return EdgePath(fine, [Vertex.from_lattice(a, b, fine) for a, b in points], max_level)


class PathIntegralResult(object):

    def __init__(self, value, refinement_level, estimated_error):
        self.value = float(value)
        self.refinement_level = int(refinement_level)
        self.estimated_error = float(estimated_error)

    def __repr__(self):
        return 'PathIntegralResult(value={!r}, refinement_level={}, estimated_error={:.3e})'.format(
            self.value, self.refinement_level, self.estimated_error)

    def to_dict(self):
        return {'integral': self.value, 'refinement': self.refinement_level,
                'estimated_error': self.estimated_error}


def _image(path, chart, k):
    if chart.level < path.level + k:
        raise DomainError('chart level {} cannot resolve a level-{} path refined {} times'.format(
            chart.level, path.level, k))
    fine = refine_path(path, k, chart.level)
    if chart.level == fine.level:
        return chart.points[fine.indices]
    graph = chart.graph
    return chart.points[[graph.index_of(v) for v in fine.vertices]]


def _midpoint_sum(form, polyline):
    if polyline.shape[0] < 2:
        return 0.
    mids = 0.5 * (polyline[1:] + polyline[:-1])
    # fsum is order independent, so a reversed path gives exactly the negated value
    return math.fsum((form(mids) * np.diff(polyline, axis=0)).sum(axis=1))


def integrate_form(form, path, chart, k=0):
    """Midpoint Riemann sum of omega over the Phi-image of the path refined k times.

    The estimated error is the change against refinement k - 1 (0 for k = 0).
    """
    value = _midpoint_sum(form, _image(path, chart, k))
    error = abs(value - _midpoint_sum(form, _image(path, chart, k - 1))) if k > 0 else 0.
    logger.debug('integral over %d edges at refinement %d: %.15g (+- %.3e)',
                 len(path) - 1, k, value, error)
    return PathIntegralResult(value, k, error)


def euclidean_length(path, chart, k=0):
    """Length of the inscribed polyline Phi(v_0), ..., Phi(v_n) after k refinements"""
    polyline = _image(path, chart, k)
    return float(np.linalg.norm(np.diff(polyline, axis=0), axis=1).sum())


def connecting_path(a, b, level, max_level=MAX_LEVEL):
    """A shortest edge-path from a to b in the level graph"""
    graph = build_level_graph(level, max_level)
    ia, ib = graph.index_of(_as_vertex(a)), graph.index_of(_as_vertex(b))
    _, predecessors = csgraph.shortest_path(graph.adjacency, unweighted=True, indices=ia,
                                            return_predecessors=True)
    chain = [ib]
    while chain[-1] != ia:
        chain.append(predecessors[chain[-1]])
    return EdgePath(level, [graph.vertex(n) for n in reversed(chain)], max_level)


def potential_from_form(form, chart, base='q0', value=0.):
    """g(x) = value + integral of omega along the shortest-path tree from `base`.

    For omega = dF this reconstructs F o Phi - F(Phi(base)) + value at every
    chart vertex (up to quadrature error).
    """
    graph = chart.graph
    root = graph.index_of(_as_vertex(base))
    order, predecessors = csgraph.breadth_first_order(graph.adjacency, root, directed=False,
                                                      return_predecessors=True)
    children = order[1:]
    parents = predecessors[children]
    segments = np.stack([chart.points[parents], chart.points[children]], axis=1)
    mids = segments.mean(axis=1)
    increments = (form(mids) * (segments[:, 1] - segments[:, 0])).sum(axis=1)
    g = np.empty(graph.n_vertices)
    g[root] = value
    step = dict(zip(children.tolist(), increments.tolist()))
    for child, par in zip(children.tolist(), parents.tolist()):
        g[child] = g[par] + step[child]
    return g
