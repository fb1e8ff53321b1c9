# -*- coding: utf-8 -*-
# Energy measures Gamma(f, g), the Kusuoka measure nu and the Z-field, all as
# per-cell tables.

import logging

import numpy as np
import pandas as pd

from libdform.gasket import check_address, check_level, addresses, address_index, MAX_LEVEL
from libdform.utils import DomainError, DegenerateCellError, NumericError
from .dirichlet import base_energy, RENORMALIZATION
from .harmonic import cell_frame, cell_frames

logger = logging.getLogger(__name__)

HARMONIC_TOL = 1e-9
PSD_TOL = 1e-12


class CellMeasureTable(object):
    """Nonnegative numbers attached to the level-m cells (address order).

    Example:
        >>> nu = kusuoka_table(1)
        >>> nu['0'], nu[''], nu.total()
        (1.0, 3.0, 3.0)
    """

    def __init__(self, level, entries, name='value'):
        entries = np.asarray(entries, dtype=np.float64)
        if entries.shape != (3 ** level,):
            raise DomainError('a level-{} table needs {} entries, but got {}'.format(
                level, 3 ** level, entries.shape))
        self.level = level
        self.entries = entries
        self.entries.flags.writeable = False
        self.name = name

    def __getitem__(self, w):
        """Entry of K_w; coarser cells are summed from their descendants"""
        w = check_address(w)
        if len(w) > self.level:
            raise DomainError('cell "{}" is finer than the level-{} table'.format(w, self.level))
        return float(self.coarsen(len(w)).entries[address_index(w)])

    def __len__(self):
        return self.entries.shape[0]

    def total(self):
        return float(self.entries.sum())

    def coarsen(self, k):
        """Table on level k <= level, using additivity under refinement"""
        if not 0 <= k <= self.level:
            raise DomainError('cannot coarsen a level-{} table to level {}'.format(self.level, k))
        if k == self.level:
            return self
        return CellMeasureTable(k, self.entries.reshape(3 ** k, -1).sum(axis=1), self.name)

    def to_frame(self):
        return pd.DataFrame({'w': addresses(self.level), self.name: self.entries})

    def to_dict(self):
        return {'level': self.level, 'total': self.total(),
                'cells': dict(zip(addresses(self.level), self.entries.tolist()))}


def _check_harmonic(f, tol):
    res = f.residual()
    if res > tol:
        raise DomainError('function is not harmonic, re-extension residual {:.3e} > {:.1e}'.format(
            res, tol))


def cell_energy_measure(f, g, w, tol=HARMONIC_TOL):
    """Gamma(f, g)(K_w) = (5/3)^|w| B0(f_w, g_w) for harmonic f, g (exact).

    Parameters
    ----------
    f, g: PiecewiseHarmonic
    w: str
        address with |w| <= level of f and g
    tol: float
        largest accepted re-extension residual
    """
    _check_harmonic(f, tol)
    _check_harmonic(g, tol)
    w = check_address(w)
    return float(RENORMALIZATION) ** len(w) * float(base_energy(f.cell_triple(w), g.cell_triple(w)))


def energy_measure_table(f, g, m=None, tol=HARMONIC_TOL):
    """Gamma(f, g)(K_w) for every |w| = m (default: the level of f)"""
    _check_harmonic(f, tol)
    _check_harmonic(g, tol)
    m = f.level if m is None else m
    if m > min(f.level, g.level):
        raise DomainError('level {} is finer than the functions ({}, {})'.format(m, f.level, g.level))
    entries = float(RENORMALIZATION) ** m * base_energy(f.on_cells(m), g.on_cells(m))
    return CellMeasureTable(m, entries, name='gamma')


def _gamma_of_frames(frames, m):
    diff = frames[..., [0, 0, 1], :] - frames[..., [1, 2, 2], :]
    return float(RENORMALIZATION) ** m * np.einsum('...ei,...ej->...ij', diff, diff)


def gamma_matrices(m, max_level=MAX_LEVEL):
    """Gamma(phi^i, phi^j)(K_w) for all |w| = m, shape (3^m, 2, 2)"""
    return _gamma_of_frames(cell_frames(m, max_level), m)


def kusuoka_table(m, max_level=MAX_LEVEL):
    """nu(K_w) = Gamma(phi1)(K_w) + Gamma(phi2)(K_w) for all |w| = m"""
    gamma = gamma_matrices(m, max_level)
    return CellMeasureTable(m, np.trace(gamma, axis1=1, axis2=2), name='nu')


def validate_z(matrices, tol=PSD_TOL):
    """Raise NumericError unless every matrix is symmetric, PSD and of trace 1"""
    matrices = np.asarray(matrices)
    asym = np.abs(matrices - np.swapaxes(matrices, -1, -2)).max()
    if asym > tol:
        raise NumericError('Z is not symmetric (deviation {:.3e})'.format(asym))
    eig_min = np.linalg.eigvalsh(matrices)[..., 0].min()
    if eig_min < -tol:
        raise NumericError('Z is not PSD (eigenvalue {:.3e})'.format(eig_min))
    trace_err = np.abs(np.trace(matrices, axis1=-2, axis2=-1) - 1.).max()
    if trace_err > tol:
        raise NumericError('Z trace deviates from 1 by {:.3e}'.format(trace_err))


def _z_from_gamma(gamma):
    nu = np.trace(gamma, axis1=-2, axis2=-1)
    if np.any(nu <= 0):
        raise DegenerateCellError('{} cells carry no Kusuoka mass'.format(int(np.sum(nu <= 0))))
    return gamma / nu[..., None, None], nu


def z_matrix(w, tol=PSD_TOL):
    """Z(w)_ij = Gamma(phi^i, phi^j)(K_w) / nu(K_w), the cell average of dGamma/dnu"""
    w = check_address(w)
    z, _ = _z_from_gamma(_gamma_of_frames(cell_frame(w), len(w)))
    validate_z(z, tol)
    return z


class ZField(object):
    """Z(w) for all |w| = m together with the nu table.

    Attributes
    ----------
    level: int
    matrices: ndarray (3^m, 2, 2)
    nu: CellMeasureTable
    """

    def __init__(self, level, matrices, nu):
        self.level = level
        self.matrices = matrices
        self.nu = nu
        self.matrices.flags.writeable = False

    def __getitem__(self, w):
        w = check_address(w)
        if len(w) != self.level:
            raise DomainError('cell "{}" is not a level-{} cell'.format(w, self.level))
        return self.matrices[address_index(w)]

    def weighted(self):
        """nu(K_w) Z(w) = Gamma(phi^i, phi^j)(K_w)"""
        return self.nu.entries[:, None, None] * self.matrices

    def martingale_residual(self):
        """max |nu(w) Z(w) - sum_i nu(wi) Z(wi)| against the level above"""
        if self.level == 0:
            return 0.
        coarse = z_field(self.level - 1, max_level=self.level)
        summed = self.weighted().reshape(-1, 3, 2, 2).sum(axis=1)
        return float(np.abs(summed - coarse.weighted()).max())

    def to_frame(self):
        return pd.DataFrame({'w': addresses(self.level),
                             'nu': self.nu.entries,
                             'z11': self.matrices[:, 0, 0],
                             'z12': self.matrices[:, 0, 1],
                             'z22': self.matrices[:, 1, 1]})

    def to_dict(self):
        return {'level': self.level,
                'total_nu': self.nu.total(),
                'max_eigenvalue': float(np.linalg.eigvalsh(self.matrices)[:, -1].max()),
                'cells': [{'w': w, 'nu': float(n), 'z': z.tolist()}
                          for w, n, z in zip(addresses(self.level), self.nu.entries, self.matrices)]}


def z_field(m, tol=PSD_TOL, max_level=MAX_LEVEL):
    """Validated Z-field on the level-m cells"""
    m = check_level(m, max_level)
    z, nu = _z_from_gamma(gamma_matrices(m, max_level))
    validate_z(z, tol)
    logger.debug('Z-field at level %d: %d matrices, nu total %.15g', m, z.shape[0], nu.sum())
    return ZField(m, z, CellMeasureTable(m, nu, name='nu'))


def c_z_bound(m, max_level=MAX_LEVEL):
    """max over |w| = m of the largest eigenvalue of Z(w); never above 1 (trace bound)"""
    z, _ = _z_from_gamma(gamma_matrices(m, max_level))
    return float(np.linalg.eigvalsh(z)[:, -1].max())
