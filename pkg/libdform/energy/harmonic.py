# -*- coding: utf-8 -*-
# Harmonic coordinates Phi = (phi1, phi2) and the harmonic gasket Phi(SG).

import logging
from functools import lru_cache

import numpy as np
import pandas as pd

from libdform.gasket import check_address, check_level, addresses, address_index, Vertex, MAX_LEVEL
from libdform.utils import NumericError
from .dirichlet import harmonic_extend, refine_triples, extend_to_level, CHILD_SLOTS

logger = logging.getLogger(__name__)

SQRT3_2 = np.sqrt(3.) / 2

# boundary values of phi1 (row 0) and phi2 (row 1) at q0, q1, q2:
# Phi(q_i) are the corners of the standard triangle
PHI_BOUNDARY = np.array([[0., 1., 0.5],
                         [0., 0., SQRT3_2]])


def extension_matrices():
    """(A0, A1, A2) with A_i u = boundary triple on sub-cell i of the harmonic extension of u.

    Read off from harmonic_extend on the basis triples.
    """
    values = harmonic_extend(np.eye(3))  # values[c, slot] for u = e_c
    return tuple(values[:, CHILD_SLOTS[i]].T.copy() for i in range(3))


def cell_frame(w):
    """Phi-images of the three corners of K_w, shape (3, 2).

    A_{w_1} is applied first, then A_{w_2}, ...
    """
    w = check_address(w)
    mats = extension_matrices()
    triples = PHI_BOUNDARY.copy()
    for c in w:
        triples = triples @ mats[int(c)].T
    return triples.T


@lru_cache(maxsize=None)
def _cell_frames(m):
    frames = PHI_BOUNDARY.T[None, :, :]
    for _ in range(m):
        frames = np.stack([refine_triples(frames[:, :, d]) for d in range(2)], axis=-1)
    frames.flags.writeable = False
    return frames


def cell_frames(m, max_level=MAX_LEVEL):
    """Frames of all level-m cells in address order, shape (3^m, 3, 2)"""
    return _cell_frames(check_level(m, max_level))


def frames_frame(m, max_level=MAX_LEVEL):
    """Cell frames as a table with columns w, x0, y0, x1, y1, x2, y2"""
    frames = cell_frames(m, max_level).reshape(-1, 6)
    table = pd.DataFrame(frames, columns=['x0', 'y0', 'x1', 'y1', 'x2', 'y2'])
    table.insert(0, 'w', addresses(m))
    return table


class HarmonicChart(object):
    """Phi sampled on the level-m vertices.

    Attributes
    ----------
    level: int
    phi1, phi2: PiecewiseHarmonic
    points: ndarray (V, 2)
        points[v] = (phi1(v), phi2(v))
    """

    def __init__(self, phi1, phi2):
        assert phi1.level == phi2.level
        self.level = phi1.level
        self.graph = phi1.graph
        self.phi1 = phi1
        self.phi2 = phi2
        self.points = np.c_[phi1.values, phi2.values]
        self.points.flags.writeable = False

    def __call__(self, vertex):
        if isinstance(vertex, Vertex):
            vertex = self.graph.index_of(vertex)
        return self.points[vertex]

    def frame(self, w):
        w = check_address(w)
        return self.points[self.graph.cell_corner_indices(len(w))[address_index(w)]]

    def to_dict(self):
        return {'level': self.level,
                'vertices': [{'id': n, 'x': float(x), 'y': float(y),
                              'phi1': float(p1), 'phi2': float(p2)}
                             for n, ((x, y), (p1, p2)) in
                             enumerate(zip(self.graph.points, self.points))]}

    def frames_frame(self):
        return frames_frame(self.level, self.level)

    def harmonic_residual(self):
        return max(self.phi1.residual(), self.phi2.residual())

    def check_harmonic(self, tol):
        """Raise NumericError if a coordinate breaks the 1/5-2/5 rule by more than tol"""
        res = self.harmonic_residual()
        if res > tol:
            raise NumericError('chart at level {} is not harmonic (residual {:.3e} > {:.1e})'.format(
                self.level, res, tol))
        return res


@lru_cache(maxsize=None)
def _build_chart(m):
    # m is already checked against the caller's cap
    chart = HarmonicChart(extend_to_level(PHI_BOUNDARY[0], m, m), extend_to_level(PHI_BOUNDARY[1], m, m))
    logger.debug('harmonic chart at level %d', m)
    return chart


def build_chart(m, max_level=MAX_LEVEL):
    """Phi at every level-m vertex"""
    return _build_chart(check_level(m, max_level))


def compose(F, chart):
    """Values of F o Phi at every chart vertex; F maps (N,2) points to (N,) values"""
    return np.asarray(F(chart.points), dtype=np.float64).reshape(-1)
