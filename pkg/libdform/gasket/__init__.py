from .address import check_address, subcells, parent, addresses, address_digits, address_index
from .graph import Vertex, LevelGraph, build_level_graph, check_level, vertex_from_address, \
    corner_lattice, lattice_to_points, MAX_LEVEL

__all__ = ['check_address', 'subcells', 'parent', 'addresses', 'address_digits',
           'address_index', 'Vertex', 'LevelGraph', 'build_level_graph', 'check_level',
           'vertex_from_address', 'corner_lattice', 'lattice_to_points', 'MAX_LEVEL']
