# -*- coding: utf-8 -*-
# Energy measures, Kusuoka measure and the Z-field.

import numpy as np
import pytest

from libdform.energy import cell_energy_measure, energy_measure_table, extend_to_level, \
    gamma_matrices, graph_energy_pair, kusuoka_table, z_matrix, z_field, c_z_bound, \
    validate_z, restricted_energy, PiecewiseHarmonic, PHI_BOUNDARY
from libdform.energy.measures import _z_from_gamma
from libdform.utils import DomainError, DegenerateCellError, NumericError, ResourceLimitError

SQRT3 = np.sqrt(3.)


def test_kusuoka_mass():
    nu = kusuoka_table(1)
    assert nu.entries.tolist() == pytest.approx([1., 1., 1.])
    assert nu[''] == pytest.approx(3.)
    for m in range(9):
        assert kusuoka_table(m).total() == pytest.approx(3., rel=1e-12)
    fine = kusuoka_table(5)
    np.testing.assert_allclose(fine.coarsen(2).entries, kusuoka_table(2).entries, rtol=1e-12)
    assert fine['01'] == pytest.approx(kusuoka_table(2)['01'], rel=1e-12)
    with pytest.raises(DomainError):
        kusuoka_table(1)['00']


def test_kusuoka_from_edge_energies():
    phi1, phi2 = (extend_to_level(row, 8) for row in PHI_BOUNDARY)
    nu = kusuoka_table(2)
    for w in ['0', '1', '2', '01', '22']:
        total = restricted_energy(phi1, w) + restricted_energy(phi2, w)
        assert total == pytest.approx(nu[w], rel=1e-10)
    assert restricted_energy(phi1, '') + restricted_energy(phi2, '') == pytest.approx(3.)


def test_z_values():
    np.testing.assert_allclose(z_matrix(''), np.diag([.5, .5]), atol=1e-15)
    np.testing.assert_allclose(z_matrix('0'), [[.7, SQRT3 / 5], [SQRT3 / 5, .3]], atol=1e-14)
    field = z_field(2)
    np.testing.assert_allclose(field['01'], z_matrix('01'), atol=1e-14)
    with pytest.raises(DomainError):
        field['0']


@pytest.mark.parametrize('m', range(9))
def test_z_field_is_valid(m):
    field = z_field(m)
    validate_z(field.matrices, 1e-12)
    assert field.matrices.shape == (3 ** m, 2, 2)
    np.testing.assert_allclose(field.weighted(), gamma_matrices(m), rtol=1e-12, atol=1e-15)


@pytest.mark.parametrize('m', range(1, 7))
def test_martingale_property(m):
    assert z_field(m).martingale_residual() < 1e-12


def test_c_z_bound():
    assert c_z_bound(0) == pytest.approx(.5)
    assert c_z_bound(1) == pytest.approx(.9)
    assert c_z_bound(3) > .9
    for m in range(7):
        assert c_z_bound(m) <= 1.


def test_cell_energy_measure(rng):
    m = 4
    f = extend_to_level(rng.normal(size=3), m)
    g = extend_to_level(rng.normal(size=3), m)
    table = energy_measure_table(f, g)
    assert table.total() == pytest.approx(graph_energy_pair(f, g, m), rel=1e-10)
    assert table['12'] == pytest.approx(cell_energy_measure(f, g, '12'), rel=1e-10)
    phi1 = extend_to_level(PHI_BOUNDARY[0], m)
    assert cell_energy_measure(phi1, phi1, '') == pytest.approx(1.5)
    assert cell_energy_measure(phi1, phi1, '0') == pytest.approx(.7)


def test_non_harmonic_is_rejected():
    f = extend_to_level([0., 1., 0.], 2)
    values = f.values.copy()
    values[-1] += 1e-3
    bumped = PiecewiseHarmonic(2, values, f.boundary)
    with pytest.raises(DomainError):
        cell_energy_measure(bumped, f, '0')
    with pytest.raises(DomainError):
        energy_measure_table(f, f, m=3)


def test_harmonic_tolerance():
    f = extend_to_level([0., 1., 0.], 2)
    values = f.values.copy()
    values[-1] += 1e-3
    bumped = PiecewiseHarmonic(2, values, f.boundary)
    with pytest.raises(DomainError):
        cell_energy_measure(bumped, f, '0')
    assert np.isfinite(cell_energy_measure(bumped, f, '0', tol=1e-2))
    assert energy_measure_table(bumped, bumped, tol=1e-2).total() > 0.


def test_cauchy_schwarz_per_cell(rng):
    m = 4
    for _ in range(10):
        f = extend_to_level(rng.normal(size=3), m)
        g = extend_to_level(rng.normal(size=3), m)
        fg = energy_measure_table(f, g).entries
        ff = energy_measure_table(f, f).entries
        gg = energy_measure_table(g, g).entries
        assert np.all(fg ** 2 <= ff * gg * (1 + 1e-10) + 1e-15)
    gamma = gamma_matrices(m)
    assert np.all(np.linalg.det(gamma) >= -1e-15)


def test_chain_rule_for_linear_functions():
    m = 4
    gamma = gamma_matrices(m)
    for a, c in [((1., 0.), (0., 1.)), ((2., -1.), (.5, 3.)), ((-.3, .7), (-.3, .7))]:
        f = extend_to_level(np.dot(a, PHI_BOUNDARY), m)
        g = extend_to_level(np.dot(c, PHI_BOUNDARY), m)
        expected = np.einsum('i,wij,j->w', a, gamma, c)
        np.testing.assert_allclose(energy_measure_table(f, g).entries, expected, rtol=1e-10, atol=1e-14)


def test_level_cap_is_honoured():
    with pytest.raises(ResourceLimitError):
        z_field(3, max_level=2)
    with pytest.raises(ResourceLimitError):
        c_z_bound(3, max_level=2)
    assert z_field(3, max_level=3).martingale_residual() < 1e-12
    # past the default cap
    with pytest.raises(ResourceLimitError):
        z_field(13)
    field = z_field(13, max_level=13)
    assert field.nu.total() == pytest.approx(3., rel=1e-10)
    assert c_z_bound(13, max_level=13) <= 1.


def test_degenerate_and_invalid_z():
    with pytest.raises(DegenerateCellError):
        _z_from_gamma(np.zeros((1, 2, 2)))
    with pytest.raises(NumericError):
        validate_z(np.eye(2)[None])
    with pytest.raises(NumericError):
        validate_z(np.array([[[.5, .1], [0., .5]]]))
    with pytest.raises(NumericError):
        validate_z(np.array([[[1.5, 0.], [0., -.5]]]))


def test_exports():
    table = z_field(1).to_frame()
    assert list(table.columns) == ['w', 'nu', 'z11', 'z12', 'z22']
    exported = z_field(1).to_dict()
    assert exported['max_eigenvalue'] == pytest.approx(.9)
    assert exported['total_nu'] == pytest.approx(3.)
    assert kusuoka_table(1).to_dict()['cells']['2'] == pytest.approx(1.)


if __name__ == '__main__':
    print(z_field(1).to_frame())
    for m in range(1, 7):
        print('level {}: c_z = {:.6f}'.format(m, c_z_bound(m)))
