from fractions import Fraction
import math

import numpy as np
import pytest
from hypothesis import given, settings

from cl33.core.exceptions import BadInput, DomainError, ParseError, \
    RingMismatch
from cl33.core.multivector import Multivector
from cl33.fields.calculus import CoordinateVector, apply_D, \
    apply_transverse, calculus_checks, coordinate_field, curl, div, grad, \
    klein_gordon_split, lightcone_candidate, lightcone_residuals, \
    null_points, pi_transform, tau_field, transverse_laplacian
from cl33.fields.field import MultivectorField, coefficient_field, \
    coefficient_parts
from cl33.fields.parser import parse_trigpoly
from cl33.fields.trigpoly import LinearForm, TrigPoly

from conftest import trigpolys

t3 = TrigPoly.variable('t3')
x1 = TrigPoly.variable('x1')
x3 = TrigPoly.variable('x3')


def test_cos_sin_product_to_sum():
    phase = LinearForm({'t3': 1, 'x3': -1})
    c, s = TrigPoly.cos(phase), TrigPoly.sin(phase)
    assert c * c + s * s == 1
    double = LinearForm({'t3': 2, 'x3': -2})
    assert c * s * 2 == TrigPoly.sin(double)


def test_phase_canonical_form():
    phase = LinearForm({'t3': 1})
    assert TrigPoly.cos(-phase) == TrigPoly.cos(phase)
    assert TrigPoly.sin(-phase) == -TrigPoly.sin(phase)
    assert TrigPoly.sin(LinearForm()).is_zero()
    assert TrigPoly.cos(LinearForm()) == 1


def test_differentiate_monomials_and_trig():
    phase = LinearForm({'t3': 2, 'x1': -3})
    f = x1 ** 3 * TrigPoly.cos(phase)
    expected = x1 ** 2 * TrigPoly.cos(phase) * 3 + \
        x1 ** 3 * TrigPoly.sin(phase) * 3
    assert f.differentiate('x1') == expected
    assert f.differentiate('t3') == x1 ** 3 * TrigPoly.sin(phase) * -2
    assert f.differentiate('t1').is_zero()


@settings(max_examples=30, deadline=None)
@given(trigpolys(), trigpolys())
def test_product_rule(f, g):
    for coord in ('t3', 'x2'):
        assert (f * g).differentiate(coord) == \
            f.differentiate(coord) * g + f * g.differentiate(coord)


@settings(max_examples=30, deadline=None)
@given(trigpolys())
def test_mixed_partials_commute(f):
    assert f.differentiate('t1').differentiate('x3') == \
        f.differentiate('x3').differentiate('t1')


@settings(max_examples=30, deadline=None)
@given(trigpolys(), trigpolys())
def test_evaluation_is_a_ring_homomorphism(f, g):
    point = [0.3, -0.7, 1.1, 0.2, -0.4, 0.9]
    assert (f * g).evaluate(point) == pytest.approx(
        f.evaluate(point) * g.evaluate(point), abs=1e-9)
    assert (f + g).evaluate(point) == pytest.approx(
        f.evaluate(point) + g.evaluate(point), abs=1e-9)


def test_evaluate_many_matches_evaluate(points):
    f = x1 * t3 + TrigPoly.sin(LinearForm({'t3': 1, 'x3': -1}), 2)
    values = f.evaluate_many(points)
    assert np.allclose(values, [f.evaluate(p) for p in points])


def test_trigpoly_queries():
    f = t3 ** 2 * x1 + TrigPoly.cos(LinearForm({'t3': 1}))
    assert f.degree() == 3
    assert not f.is_polynomial()
    assert f.free_of(('t1', 't2'))
    assert not f.free_of(('t3',))
    with pytest.raises(DomainError):
        f.constant_value()
    with pytest.raises(RingMismatch):
        f + f.to_double()
    with pytest.raises(BadInput):
        TrigPoly.variable('y1')


def test_parser_reads_trig_and_rationals():
    f = parse_trigpoly('-1/2*t1*sin(t3 - x3) + 3*x1^2 + cos(2*t3 + 1/3)')
    t1 = TrigPoly.variable('t1')
    expected = t1 * TrigPoly.sin(LinearForm({'t3': 1, 'x3': -1})) * \
        Fraction(-1, 2) + x1 ** 2 * 3 + \
        TrigPoly.cos(LinearForm({'t3': 2}, Fraction(1, 3)))
    assert f == expected


@pytest.mark.parametrize('text,offset', [
    ('t1 + ', 5),
    ('cos(t1*t2)', 0),
    ('x1 / x2', 3),
    ('t1 $ 2', 3),
    ('q1', 0),
])
def test_parser_reports_byte_offset(text, offset):
    with pytest.raises(ParseError) as exc:
        parse_trigpoly(text)
    assert exc.value.offset == offset


def test_field_arithmetic_and_evaluation():
    F = MultivectorField({'t1': x1, 's1s2': t3})
    G = F * F
    point = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6]
    direct = F.evaluate(point) * F.evaluate(point)
    assert (G.evaluate(point) - direct).is_zero(1e-12)


def test_coefficient_field_parts():
    value = coefficient_field(x1, t3, 2, None)
    parts = coefficient_parts(value)
    assert parts['1'] == x1
    assert parts['i'] == t3
    assert parts['I'] == 2
    assert parts['S'].is_zero()
    with pytest.raises(DomainError):
        coefficient_parts(MultivectorField({'t1': x1}))


def test_dirac_operator_on_coordinates():
    assert apply_D(coordinate_field()) == 6
    assert apply_D(coordinate_field(plus=True)).is_zero()


def test_lightcone_square():
    assert apply_D(lightcone_candidate(2)) == coordinate_field() * 2
    with pytest.raises(DomainError):
        lightcone_candidate(0)


def test_lightcone_cube_at_null_points(rng):
    pts = null_points(4, rng)
    for p in pts:
        assert p.square() == pytest.approx(0.0, abs=1e-12)
    assert len(lightcone_residuals(3, pts)) == 4


def test_klein_gordon_split_example():
    wave, mass = klein_gordon_split(MultivectorField.scalar(t3 ** 2 + x3 ** 2))
    assert wave.is_zero()
    assert mass.is_zero()


def test_transverse_operators():
    tau = tau_field()
    # grad_T tau = 2, grad_T* tau = 0
    assert apply_transverse(tau) == 2
    assert apply_transverse(tau, 'T*').is_zero()
    F = MultivectorField.scalar(TrigPoly.variable('t1', 2) * x1)
    assert transverse_laplacian(F) == MultivectorField.scalar(x1 * 2)


def test_pi_transform_flips_space():
    for name in ('t1', 't2', 't3'):
        assert pi_transform(Multivector.blade(name)) == \
            Multivector.blade(name)
    for name in ('s1', 's2', 's3'):
        assert pi_transform(Multivector.blade(name)) == \
            -Multivector.blade(name)


def test_vector_calculus_identities():
    f = x1 ** 2 * t3 + TrigPoly.cos(LinearForm({'x2': 1, 'x3': 1}))
    F = MultivectorField.scalar(f)
    assert all(c.is_zero() for c in curl(grad(F)))
    V = (F, MultivectorField.scalar(x3 * x1), MultivectorField.scalar(t3))
    assert div(curl(V)).is_zero()


def test_coordinate_vector_square():
    p = CoordinateVector((1, 2, 3), (3, 2, 1))
    assert p.square() == 0
    assert p.multivector() * p.multivector() == 0
    with pytest.raises(BadInput):
        CoordinateVector((1, 2), (1, 2, 3))


def test_calculus_checks_pass():
    checks = calculus_checks(seed=7)
    assert all(c.passed for c in checks), [c.name for c in checks
                                           if not c.passed]
    names = {c.name for c in checks}
    assert {'dirac.X', 'lightcone.n2', 'klein_gordon.split',
            'pi_transform'} <= names


def test_cube_on_lightcone_is_small():
    residual = max(lightcone_residuals(1, [CoordinateVector(
        (0.0, 0.0, 1.0), (0.0, 0.0, 1.0))]))
    assert residual == pytest.approx(0.0, abs=1e-12)
    assert math.isfinite(residual)
