# -*- coding: utf-8 -*-
# Level-m approximating graphs of the standard Sierpinski gasket.

import logging
from collections import namedtuple
from functools import lru_cache

import numpy as np
from scipy import sparse

from libdform.utils import DomainError, ResourceLimitError
from .address import check_address, address_digits, address_index, addresses

logger = logging.getLogger(__name__)

MAX_LEVEL = 12
SQRT3_2 = np.sqrt(3.) / 2

# corners q0=(0,0), q1=(1,0), q2=(1/2, sqrt(3)/2) in the lattice basis
# e1=(1,0), e2=(1/2, sqrt(3)/2); F_i(x) = (x + q_i)/2 is linear in that basis too
CORNERS = np.array([[0, 0], [1, 0], [0, 1]], dtype=np.int64)
CELL_EDGES = np.array([[0, 1], [0, 2], [1, 2]])


class Vertex(namedtuple('Vertex', ['i', 'j', 'k'])):
    """A gasket vertex i*e1/2^k + j*e2/2^k with k as small as possible.

    The reduced form makes one vertex a single id across all levels.
    """
    __slots__ = ()

    @classmethod
    def from_lattice(cls, a, b, level):
        a, b, level = int(a), int(b), int(level)
        while level > 0 and a % 2 == 0 and b % 2 == 0:
            a, b, level = a // 2, b // 2, level - 1
        return cls(a, b, level)

    @property
    def point(self):
        scale = 2. ** self.k
        return np.array([(self.i + self.j / 2.) / scale, SQRT3_2 * self.j / scale])

    def lattice(self, level):
        """Lattice coordinates at scale 2^level"""
        if self.k > level:
            raise DomainError('vertex {} is not a level-{} vertex'.format(self.label, level))
        shift = 2 ** (level - self.k)
        return self.i * shift, self.j * shift

    @property
    def label(self):
        return '{}_{}_{}'.format(self.i, self.j, self.k)


def lattice_to_points(lattice, level):
    """(n,2) integer lattice coordinates at scale 2^level -> (n,2) points in R^2"""
    lattice = np.asarray(lattice, dtype=np.float64)
    scale = 2. ** level
    return np.c_[(lattice[:, 0] + lattice[:, 1] / 2.) / scale, SQRT3_2 * lattice[:, 1] / scale]


def corner_lattice(m, digits=None):
    """Corners of every level-m cell at scale 2^m, shape (3^m, 3, 2).

    Corner i of K_w is F_{w_1} o ... o F_{w_m}(q_i).
    """
    if digits is None:
        digits = address_digits(m)
    base = np.zeros((digits.shape[0], 2), dtype=np.int64)
    for k in range(digits.shape[1]):
        base = 2 * base + CORNERS[digits[:, k]]
    return base[:, None, :] + CORNERS[None, :, :]


def vertex_from_address(text):
    """Parse a vertex address.

    "w.i" names corner i of cell K_w (eg "01.2", ".0"); "q0", "q1", "q2"
    are the outer corners.
    """
    text = text.strip()
    if text in ('q0', 'q1', 'q2'):
        text = '.' + text[1]
    if text.count('.') != 1:
        raise DomainError('vertex address "{}" must look like "w.i" or q0/q1/q2'.format(text))
    w, corner = text.split('.')
    w = check_address(w)
    if corner not in ('0', '1', '2'):
        raise DomainError('corner index of "{}" must be 0, 1 or 2'.format(text))
    lattice = corner_lattice(len(w), address_digits(len(w))[address_index(w)][None, :])
    a, b = lattice[0, int(corner)]
    return Vertex.from_lattice(a, b, len(w))


class LevelGraph(object):
    """Vertices, edges and cells of the level-m gasket graph.

    Arrays are read-only after construction; instances are shared through the
    `build_level_graph` cache.

    Attributes
    ----------
    level: int
    lattice: ndarray (V, 2)
        integer vertex coordinates at scale 2^level, sorted lexicographically;
        the row number is the vertex index
    points: ndarray (V, 2)
        standard gasket coordinates
    cells: ndarray (3^level, 3)
        corner indices of each cell, cells in address order
    edges: ndarray (3^(level+1), 2)
        three edges per cell, in cell order
    """

    def __init__(self, level, lattice, cells):
        self.level = level
        self.lattice = lattice
        self.cells = cells
        self.points = lattice_to_points(lattice, level)
        self.edges = np.sort(cells[:, CELL_EDGES].reshape(-1, 2), axis=1)
        self._scale = 2 ** level + 1
        self._keys = lattice[:, 0] * self._scale + lattice[:, 1]
        for arr in (self.lattice, self.cells, self.points, self.edges, self._keys):
            arr.flags.writeable = False
        self._adjacency = None
        self._cell_index = None

    @property
    def n_vertices(self):
        return self.lattice.shape[0]

    @property
    def n_edges(self):
        return self.edges.shape[0]

    @property
    def n_cells(self):
        return self.cells.shape[0]

    def vertex(self, index):
        a, b = self.lattice[index]
        return Vertex.from_lattice(a, b, self.level)

    @property
    def vertex_ids(self):
        return [self.vertex(n) for n in range(self.n_vertices)]

    def indices_of_lattice(self, lattice):
        """(n,2) lattice coordinates at this level's scale -> (n,) vertex indices"""
        lattice = np.atleast_2d(np.asarray(lattice, dtype=np.int64))
        keys = lattice[:, 0] * self._scale + lattice[:, 1]
        idx = np.searchsorted(self._keys, keys)
        idx = np.clip(idx, 0, self.n_vertices - 1)
        if not np.array_equal(self._keys[idx], keys):
            raise DomainError('some points are not level-{} vertices'.format(self.level))
        return idx

    def index_of(self, vertex):
        """Index of a Vertex (or a "w.i" vertex address) in this graph"""
        if isinstance(vertex, str):
            vertex = vertex_from_address(vertex)
        return int(self.indices_of_lattice([vertex.lattice(self.level)])[0])

    def cell_corner_indices(self, k):
        """Vertex indices of the corners of every level-k cell, k <= level"""
        if not 0 <= k <= self.level:
            raise DomainError('cells of level {} are not resolved by a level-{} graph'.format(
                k, self.level))
        if k == self.level:
            return self.cells
        corners = corner_lattice(k) * 2 ** (self.level - k)
        return self.indices_of_lattice(corners.reshape(-1, 2)).reshape(-1, 3)

    def cell_boundary(self, w):
        """The three corners of K_w, corner i being F_w(q_i)"""
        w = check_address(w)
        if len(w) > self.level:
            raise DomainError('cell "{}" is finer than the level-{} graph'.format(w, self.level))
        shift = 2 ** (self.level - len(w))
        corners = corner_lattice(len(w), address_digits(len(w))[address_index(w)][None, :])[0]
        self.indices_of_lattice(corners * shift)
        return tuple(Vertex.from_lattice(a, b, len(w)) for a, b in corners)

    @property
    def cell_index(self):
        """Address -> triple of vertex indices"""
        if self._cell_index is None:
            self._cell_index = {w: tuple(int(v) for v in c)
                                for w, c in zip(addresses(self.level), self.cells)}
        return self._cell_index

    @property
    def adjacency(self):
        if self._adjacency is None:
            n = self.n_vertices
            data = np.ones(2 * self.n_edges, dtype=np.int8)
            rows = np.r_[self.edges[:, 0], self.edges[:, 1]]
            cols = np.r_[self.edges[:, 1], self.edges[:, 0]]
            self._adjacency = sparse.csr_matrix((data, (rows, cols)), shape=(n, n))
        return self._adjacency

    def adjacent(self, a, b):
        """Whether vertex indices a and b share a level-m edge"""
        return bool(self.adjacency[a, b])

    def to_dict(self):
        return {'level': self.level,
                'vertices': [{'id': n, 'x': float(x), 'y': float(y)}
                             for n, (x, y) in enumerate(self.points)],
                'edges': self.edges.tolist(),
                'cells': {w: list(c) for w, c in self.cell_index.items()}}


@lru_cache(maxsize=None)
def _build_level_graph(m):
    corners = corner_lattice(m)
    lattice, inverse = np.unique(corners.reshape(-1, 2), axis=0, return_inverse=True)
    cells = inverse.reshape(-1, 3)
    logger.debug('level %d graph: %d vertices, %d cells', m, lattice.shape[0], cells.shape[0])
    return LevelGraph(m, lattice, cells)


def check_level(m, max_level=MAX_LEVEL):
    if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m < 0:
        raise DomainError('level must be a non-negative integer, but got {}'.format(m))
    if m > max_level:
        raise ResourceLimitError('level {} exceeds max level {}'.format(m, max_level))
    return int(m)


def build_level_graph(m, max_level=MAX_LEVEL):
    """Level-m graph: 3(3^m+1)/2 vertices, 3^(m+1) edges, 3^m cells.

    Parameters
    ----------
    m: int
        0 <= m <= max_level
    max_level: int
        resource cap, default 12

    Returns
    -------
    graph: LevelGraph
    """
    return _build_level_graph(check_level(m, max_level))
