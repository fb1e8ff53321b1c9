# -*- coding: utf-8 -*-
# Intrinsic metric estimates and the comparison of Euclidean lengths of
# Phi-images with mu-lengths.

import numpy as np
import pytest

from libdform.energy import build_chart, c_z_bound, z_field
from libdform.paths import EdgePath, connecting_path, refine_path, euclidean_length, \
    intrinsic_distance, intrinsic_lower_bound, mu_length, gradient_operator, polygon_normals
from libdform.paths.metric import _whitened_operator, _subgradient
from libdform.utils import DomainError


def test_gradient_operator():
    m = 2
    chart = build_chart(m)
    cells = chart.graph.cells
    op = gradient_operator(m)
    grads = np.einsum('wdc,wc->wd', op, chart.points[cells][:, :, 0])
    np.testing.assert_allclose(grads, np.tile([1., 0.], (3 ** m, 1)), atol=1e-12)
    grads = np.einsum('wdc,wc->wd', op, chart.points[cells][:, :, 1])
    np.testing.assert_allclose(grads, np.tile([0., 1.], (3 ** m, 1)), atol=1e-12)
    # |S_w C_w phi1|^2 = Z_11(w)
    h = np.einsum('wdc,wc->wd', _whitened_operator(m), chart.points[cells][:, :, 0])
    np.testing.assert_allclose((h ** 2).sum(axis=1), z_field(m).matrices[:, 0, 0], atol=1e-12)


def test_polygon_normals():
    normals = polygon_normals(8)
    np.testing.assert_allclose(np.linalg.norm(normals, axis=1), 1.)
    np.testing.assert_allclose(normals.sum(axis=0), 0., atol=1e-15)
    for facets in (3, 7, 2):
        with pytest.raises(DomainError):
            polygon_normals(facets)


def test_distance_bracket():
    facets = 32
    est = intrinsic_distance('q0', 'q1', 2, facets=facets)
    assert 0. < est.lower <= est.upper
    assert est.lower == pytest.approx(np.cos(np.pi / facets) * est.upper, rel=1e-6)
    assert est.to_dict()['method'] == 'highs'
    # a finer polygon gives a tighter bracket
    fine = intrinsic_distance('q0', 'q1', 2, facets=128)
    assert fine.upper - fine.lower < est.upper - est.lower
    assert fine.lower >= est.lower * (1 - 1e-6)


def test_distance_properties():
    m = 2
    assert intrinsic_distance('q0', 'q0', m).upper == 0.
    forward = intrinsic_distance('q0', '1.2', m)
    backward = intrinsic_distance('1.2', 'q0', m)
    assert forward.lower == pytest.approx(backward.lower, rel=1e-6)
    # triangle inequality through the midpoint 0.1
    direct = intrinsic_lower_bound('q0', 'q1', m)
    via = intrinsic_distance('q0', '0.1', m).upper + intrinsic_distance('0.1', 'q1', m).upper
    assert direct <= via * (1 + 1e-6)
    # the outer edges are congruent up to the polygon bracket
    a, b = intrinsic_distance('q0', 'q1', m), intrinsic_distance('q1', 'q2', m)
    assert a.lower <= b.upper * (1 + 1e-6) and b.lower <= a.upper * (1 + 1e-6)


def test_distance_exceeds_chord():
    # potentials f = Phi . e / sqrt(c_z) are feasible, so rho >= cos(pi/K) |Phi(x) - Phi(y)| / sqrt(c_z)
    m = 3
    chart = build_chart(m)
    c = c_z_bound(m)
    for x, y in [('q0', 'q1'), ('0.1', '2.1'), ('01.2', '20.1')]:
        chord = np.linalg.norm(chart.points[chart.graph.index_of(x)] -
                               chart.points[chart.graph.index_of(y)])
        assert intrinsic_lower_bound(x, y, m) >= np.cos(np.pi / 32) * chord / np.sqrt(c) * (1 - 1e-6)


def test_subgradient_method():
    for m, (x, y) in [(1, ('q0', 'q1')), (2, ('q0', 'q1')), (2, ('0.1', '2.1'))]:
        bracket = intrinsic_distance(x, y, m)
        est = intrinsic_distance(x, y, m, method='subgradient', max_iter=3000)
        assert est.method == 'subgradient'
        assert est.upper == pytest.approx(bracket.upper, rel=1e-9)
        assert 0. < est.lower <= est.upper
        # the starting potential is the normalized chord direction
        chart = build_chart(m)
        chord = np.linalg.norm(chart.points[chart.graph.index_of(x)] -
                               chart.points[chart.graph.index_of(y)])
        assert est.lower >= chord / np.sqrt(c_z_bound(m)) * (1 - 1e-9)


def test_subgradient_stopping_rule():
    graph = build_chart(1).graph
    ix, iy = graph.index_of('q0'), graph.index_of('q1')
    first, it = _subgradient(ix, iy, 1, 50, .5, target=0.)
    assert it == 1
    best, it = _subgradient(ix, iy, 1, 50, .5, target=np.inf)
    assert it == 50
    # the best iterate is kept, so more steps never lower the bound
    assert best >= first


def test_bad_queries():
    with pytest.raises(DomainError):
        intrinsic_distance('q0', 'q1', 2, method='simplex')
    with pytest.raises(DomainError):
        intrinsic_distance('q0', '012.1', 2)
    with pytest.raises(DomainError):
        intrinsic_distance('q0', 'q1', 2, facets=5)


def _sample_paths():
    paths = [EdgePath.from_spec(side, 3) for side in ('bottom', 'left', 'right')]
    paths.append(EdgePath.from_spec('bottom', 3).reversed())
    paths.append(EdgePath.from_spec('bottom', 2) + EdgePath.from_spec('right', 2))
    for a, b in [('01.2', '21.0'), ('q0', '12.1'), ('000.1', '222.0'), ('11.2', '20.2'), ('02.1', 'q1')]:
        paths.append(connecting_path(a, b, 3))
    return paths


def test_mu_length_additivity():
    first, second = EdgePath.from_spec('bottom', 2), EdgePath.from_spec('right', 2)
    joined = mu_length(first + second)
    assert joined == pytest.approx(mu_length(first) + mu_length(second), rel=1e-12)
    with pytest.raises(DomainError):
        mu_length(first, 1)


def test_euclidean_length_is_bounded_by_mu_length():
    m = 3
    c = c_z_bound(m)
    assert c <= 1 + 1e-12
    chart = build_chart(m)
    for path in _sample_paths():
        if path.level < m:
            path = refine_path(path, m - path.level)
        euclid = euclidean_length(path, chart)
        assert euclid <= c * mu_length(path, m) * 1.05


if __name__ == '__main__':
    for m in range(1, 5):
        print(intrinsic_distance('q0', 'q1', m))
