from .dirichlet import base_energy, harmonic_extend, refine_triples, PiecewiseHarmonic, \
    extend_to_level, vertex_values, graph_energy, graph_energy_pair, restricted_energy, \
    energy_measure_integral
from .harmonic import PHI_BOUNDARY, extension_matrices, cell_frame, cell_frames, frames_frame, \
    HarmonicChart, build_chart, compose
from .measures import CellMeasureTable, cell_energy_measure, energy_measure_table, \
    gamma_matrices, kusuoka_table, z_matrix, ZField, z_field, c_z_bound, validate_z

__all__ = ['base_energy', 'harmonic_extend', 'refine_triples', 'PiecewiseHarmonic',
           'extend_to_level', 'vertex_values', 'graph_energy', 'graph_energy_pair',
           'restricted_energy', 'energy_measure_integral', 'PHI_BOUNDARY',
           'extension_matrices', 'cell_frame', 'cell_frames', 'frames_frame',
           'HarmonicChart', 'build_chart', 'compose', 'CellMeasureTable',
           'cell_energy_measure', 'energy_measure_table', 'gamma_matrices',
           'kusuoka_table', 'z_matrix', 'ZField', 'z_field', 'c_z_bound', 'validate_z']
