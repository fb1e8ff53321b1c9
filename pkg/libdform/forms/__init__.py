from .cotangent import ConstraintSet, TangentProjection, Form1, OmegaElement, QuadratureMeasure, \
    projection_matrices, tangent_projection, exact_form, omega_product, restrict_form, \
    quotient_norm, omega_norm, l2_inner, circle_constraints, circle_quadrature
from .bridge import SimpleTensorField, CellwiseForm, cell_representatives, sample_form, \
    kusuoka_quadrature, h_inner, pi_map, z_seminorm, pi_star, adjointness_residual, \
    assemble_tensor, weighted_z_energy, energy_identity_report

__all__ = ['ConstraintSet', 'TangentProjection', 'Form1', 'OmegaElement', 'QuadratureMeasure',
           'projection_matrices', 'tangent_projection', 'exact_form', 'omega_product',
           'restrict_form', 'quotient_norm', 'omega_norm', 'l2_inner', 'circle_constraints',
           'circle_quadrature', 'SimpleTensorField', 'CellwiseForm', 'cell_representatives',
           'sample_form', 'kusuoka_quadrature', 'h_inner', 'pi_map', 'z_seminorm', 'pi_star',
           'adjointness_residual', 'assemble_tensor', 'weighted_z_energy',
           'energy_identity_report']
