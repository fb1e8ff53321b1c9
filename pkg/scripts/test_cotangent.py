# -*- coding: utf-8 -*-
# Tangent projections, the algebra of forms and L2 inner products on a
# smooth set (the unit circle).

import numpy as np
import pytest

from libdform.expr import parse
from libdform.forms import ConstraintSet, Form1, OmegaElement, QuadratureMeasure, \
    projection_matrices, tangent_projection, exact_form, omega_product, restrict_form, \
    quotient_norm, omega_norm, l2_inner, circle_constraints, circle_quadrature
from libdform.utils import DomainError


def test_unconstrained_is_identity():
    proj = projection_matrices(ConstraintSet(), np.zeros((4, 2)))
    np.testing.assert_allclose(proj, np.broadcast_to(np.eye(2), (4, 2, 2)))
    assert tangent_projection(ConstraintSet(), [0.3, 0.2]).rank == 2


def test_circle_projections(rng):
    theta = rng.uniform(0, 2 * np.pi, size=20)
    points = np.c_[np.cos(theta), np.sin(theta)]
    proj = projection_matrices(circle_constraints(), points)
    normals = points[:, :, None] * points[:, None, :]
    np.testing.assert_allclose(proj, np.eye(2) - normals, atol=1e-14)
    np.testing.assert_allclose(proj @ proj, proj, atol=1e-14)
    np.testing.assert_allclose(proj, np.swapaxes(proj, 1, 2), atol=1e-14)
    p = tangent_projection(circle_constraints(), [1., 0.])
    assert p.rank == 1
    np.testing.assert_allclose(p([3., 4.]), [0., 4.], atol=1e-15)


def test_rank_of_fibers():
    # a point: both directions die
    assert tangent_projection(ConstraintSet(['x - 1', 'y']), [1., 0.]).rank == 0
    # redundant generators count once
    p = tangent_projection(ConstraintSet(['x', '2*x']), [0., 0.5])
    assert p.rank == 1
    np.testing.assert_allclose(p.matrix, [[0., 0.], [0., 1.]], atol=1e-15)
    # a vanishing gradient does not cut the fiber
    assert tangent_projection(ConstraintSet(['x^2']), [0., 0.]).rank == 2


def test_form_algebra(rng):
    points = rng.uniform(-1, 1, size=(10, 2))
    omega = Form1('x', 0)
    np.testing.assert_allclose(omega(np.array([[2., 3.]])), [[2., 0.]])
    eta = Form1('y^2', 'sin(x)')
    np.testing.assert_allclose((omega + eta)(points), omega(points) + eta(points))
    np.testing.assert_allclose((omega - eta)(points), omega(points) - eta(points))
    np.testing.assert_allclose((-eta)(points), -eta(points))
    f = parse('x*y')
    np.testing.assert_allclose((f * eta)(points), f(points)[:, None] * eta(points))
    np.testing.assert_allclose((2 * eta)(points), 2 * eta(points))
    assert Form1('x', 'y').to_dict() == {'wx': 'x', 'wy': 'y'}


def test_exact_form(rng):
    points = rng.uniform(-1, 1, size=(10, 2))
    f = parse('x^2*y + cos(y)')
    np.testing.assert_allclose(exact_form(f)(points), f.gradient(points), rtol=1e-12, atol=1e-14)


def test_leibniz_rule(rng):
    points = rng.uniform(-1, 1, size=(10, 2))
    f, g = parse('x + y^2'), parse('exp(x)*y')
    product = omega_product(OmegaElement(f, exact_form(f)), OmegaElement(g, exact_form(g)))
    np.testing.assert_allclose(product.f(points), (f * g)(points))
    np.testing.assert_allclose(product.form(points), exact_form(f * g)(points), rtol=1e-12, atol=1e-14)
    total = OmegaElement(f) + OmegaElement(g, Form1(1, 0))
    np.testing.assert_allclose(total.form(points), np.tile([1., 0.], (10, 1)))


def test_quotient_norms():
    p = tangent_projection(circle_constraints(), [1., 0.])
    assert quotient_norm(Form1(1, 0), p) == pytest.approx(0., abs=1e-15)
    assert quotient_norm(Form1(0, 1), p) == pytest.approx(1.)
    np.testing.assert_allclose(restrict_form(Form1('x', 'x'), p), [0., 1.], atol=1e-15)
    # the differential of a generator vanishes in every fiber of K
    dg = exact_form(circle_constraints().functions[0])
    for point in circle_quadrature(12).points:
        assert quotient_norm(dg, tangent_projection(circle_constraints(), point)) < 1e-12


def test_quotient_norm_ignores_the_ideal(rng):
    circle = circle_constraints()
    dg = exact_form(circle.functions[0])
    for _ in range(100):
        theta = rng.uniform(0, 2 * np.pi)
        p = tangent_projection(circle, [np.cos(theta), np.sin(theta)])
        omega = Form1(*rng.normal(size=2))
        shifted = omega + float(rng.normal()) * dg
        assert quotient_norm(shifted, p) == pytest.approx(quotient_norm(omega, p), abs=1e-12)


def _random_element(rng):
    a, b, c, d = rng.uniform(-1, 1, size=4)
    f = parse('x') * a + parse('y') * b + parse('x*y') * c + d
    wx, wy = rng.uniform(-1, 1, size=2)
    return OmegaElement(f, Form1(parse('y') * wx, parse('x') * wy + 1))


def test_omega_norm_is_submultiplicative(rng):
    sample = rng.uniform(-1, 1, size=(20, 2))
    circle = circle_quadrature(20).points
    for _ in range(1000):
        e1, e2 = _random_element(rng), _random_element(rng)
        assert omega_norm(e1 * e2, sample) <= omega_norm(e1, sample) * omega_norm(e2, sample) + 1e-12
        constrained = [omega_norm(e, circle, circle_constraints()) for e in (e1 * e2, e1, e2)]
        assert constrained[0] <= constrained[1] * constrained[2] + 1e-12


def test_omega_norm():
    element = OmegaElement('x', Form1(1, 0))
    assert omega_norm(element, [[1., 0.]]) == pytest.approx(3.)
    assert omega_norm(OmegaElement(0, Form1(1, 0)), [[1., 0.]], circle_constraints()) \
        == pytest.approx(0., abs=1e-15)
    with pytest.raises(DomainError):
        omega_norm(element, np.zeros((0, 2)))


def test_circle_inner_products():
    q = circle_quadrature(64)
    circle = circle_constraints()
    dx, dy = Form1(1, 0), Form1(0, 1)
    assert q.total_mass == pytest.approx(2 * np.pi)
    assert l2_inner(dx, dx, circle, q) == pytest.approx(np.pi, rel=1e-12)
    assert l2_inner(dx, dy, circle, q) == pytest.approx(0., abs=1e-12)
    assert l2_inner(dx, dx, None, q) == pytest.approx(2 * np.pi)
    dg = exact_form(circle.functions[0])
    assert l2_inner(dg, Form1('y', 'x^2'), circle, q) == pytest.approx(0., abs=1e-12)


def test_inner_product_inputs(rng):
    q = circle_quadrature(16)
    proj = projection_matrices(circle_constraints(), q.points)
    omega, eta = Form1('x', 'y^2'), Form1('1', 'x*y')
    expected = l2_inner(omega, eta, circle_constraints(), q)
    assert l2_inner(omega(q.points), eta(q.points), proj, q) == pytest.approx(expected)
    assert l2_inner(omega, eta, np.eye(2), q) == pytest.approx(l2_inner(omega, eta, None, q))
    # Cauchy-Schwarz
    assert abs(expected) <= np.sqrt(l2_inner(omega, omega, proj, q) *
                                    l2_inner(eta, eta, proj, q)) + 1e-12
    with pytest.raises(DomainError):
        l2_inner(np.zeros((3, 2)), eta, None, q)
    with pytest.raises(DomainError):
        l2_inner(omega, eta, np.zeros((3, 2, 2)), q)


def test_quadrature_checks():
    with pytest.raises(DomainError):
        QuadratureMeasure([[0., 0.]], [-1.])
    with pytest.raises(DomainError):
        QuadratureMeasure([[0., 0.], [1., 1.]], [1.])
    with pytest.raises(DomainError):
        QuadratureMeasure([[0.5, 0.]], [1.]).check_on(circle_constraints())
    with pytest.raises(DomainError):
        circle_quadrature(0)
    assert len(circle_quadrature(8).check_on(circle_constraints())) == 8


def test_tolerances():
    circle = circle_constraints()
    near = [[1., 1e-4]]
    with pytest.raises(DomainError):
        circle.check(near)
    circle.check(near, tol=1e-7)
    q = QuadratureMeasure(near, [1.])
    with pytest.raises(DomainError):
        q.check_on(circle, tol=1e-9)
    assert q.check_on(circle) is q
    # x^2 has a small gradient near 0: the rank threshold decides the fiber
    squeezed = ConstraintSet(['x^2'])
    assert tangent_projection(squeezed, [1e-6, 0.]).rank == 1
    assert tangent_projection(squeezed, [1e-6, 0.], rank_tol=1e-3).rank == 2
    np.testing.assert_allclose(projection_matrices(squeezed, [[1e-6, 0.]], rank_tol=1e-3)[0], np.eye(2))


if __name__ == '__main__':
    q = circle_quadrature(64)
    print('<dx, dx> on the circle:', l2_inner(Form1(1, 0), Form1(1, 0), circle_constraints(), q))
