from .integration import EdgePath, PathIntegralResult, refine_path, integrate_form, \
    euclidean_length, connecting_path, potential_from_form, OUTER_EDGES
from .metric import MetricEstimate, gradient_operator, polygon_normals, intrinsic_distance, \
    intrinsic_lower_bound, mu_length, METHODS

__all__ = ['EdgePath', 'PathIntegralResult', 'refine_path', 'integrate_form',
           'euclidean_length', 'connecting_path', 'potential_from_form', 'OUTER_EDGES',
           'MetricEstimate', 'gradient_operator', 'polygon_normals', 'intrinsic_distance',
           'intrinsic_lower_bound', 'mu_length', 'METHODS']
