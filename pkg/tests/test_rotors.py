import math

import numpy as np
import pytest
from hypothesis import given, settings

from cl33.core.constants import PSEUDO_I, PSEUDO_S, TRANSVERSE_I, generator
from cl33.core.exceptions import BadType, DomainError
from cl33.core.multivector import Multivector
from cl33.core.ring import DOUBLE
from cl33.fields.calculus import CoordinateVector
from cl33.manipulators.chirality import chirality_of
from cl33.manipulators.rotors import Rotor, boost_closed_form, \
    boost_coordinates, boost_fields, conjugate_boost, conjugation_rotor, \
    field_rapidity, identity_rotor, lorentz_boost, rotor_exp, sandwich, \
    spatial_rotation, spatial_rotation_closed_form, transverse_rotation, \
    transverse_rotation_closed_form
from cl33.waves.planewave import PlaneWaveSpec, plane_wave_field

from conftest import multivectors, rapidities, rotor_angles


def double(name):
    return generator(name).to_double()


@settings(max_examples=30, deadline=None)
@given(rotor_angles)
def test_spatial_rotation_matches_closed_form(theta):
    image = sandwich(spatial_rotation(theta), double('s1') * 2.0 +
                     double('s2') * -0.5)
    q1, q2 = spatial_rotation_closed_form(2.0, -0.5, theta)
    assert image.coefficient('s1') == pytest.approx(q1, abs=1e-12)
    assert image.coefficient('s2') == pytest.approx(q2, abs=1e-12)
    assert image.coefficient('s3') == pytest.approx(0.0, abs=1e-12)


@settings(max_examples=30, deadline=None)
@given(rotor_angles)
def test_transverse_rotation_fixes_time_and_space(theta):
    rotor = transverse_rotation(theta)
    image = sandwich(rotor, double('t1'))
    c1, c2 = transverse_rotation_closed_form(1.0, 0.0, theta)
    assert image.coefficient('t1') == pytest.approx(c1, abs=1e-12)
    assert image.coefficient('t2') == pytest.approx(c2, abs=1e-12)
    for name in ('t3', 's1', 's2', 's3'):
        assert (sandwich(rotor, double(name)) - double(name)).is_zero()


@settings(max_examples=30, deadline=None)
@given(rotor_angles, rapidities)
def test_rotors_are_unit(theta, alpha):
    for rotor in (spatial_rotation(theta), transverse_rotation(theta),
                  lorentz_boost(alpha), conjugate_boost(alpha)):
        assert rotor.is_unit(1e-12)


@settings(max_examples=20, deadline=None)
@given(multivectors(), multivectors(), rapidities)
def test_sandwich_respects_products(a, b, alpha):
    rotor = lorentz_boost(alpha, (0.6, 0.0, 0.8))
    left = sandwich(rotor, a * b)
    right = sandwich(rotor, a) * sandwich(rotor, b)
    scale = max(1.0, (a * b).max_abs()) * math.cosh(alpha) ** 2
    assert (left - right).max_abs() <= 1e-11 * scale


def test_conjugation_rotor_is_exact():
    rotor = conjugation_rotor()
    assert rotor.ring == 'rational'
    assert rotor.is_unit()
    for name in ('t1', 't3'):
        assert sandwich(rotor, generator(name)) == generator(name)
    for name in ('t2', 's1', 's2', 's3'):
        assert sandwich(rotor, generator(name)) == -generator(name)
    assert sandwich(rotor, TRANSVERSE_I) == -TRANSVERSE_I
    assert sandwich(rotor, PSEUDO_I) == -PSEUDO_I
    assert sandwich(rotor, PSEUDO_S) == PSEUDO_S


@pytest.mark.parametrize('alpha', [0.3, -1.1])
def test_conjugate_boost_reverses_rapidity(alpha):
    b = (0.0, 0.6, 0.8)
    assert (conjugate_boost(alpha, b).value -
            lorentz_boost(-alpha, b).value).is_zero(1e-12)


def test_boost_coordinates_along_z():
    alpha = 0.4
    image = boost_coordinates(lorentz_boost(alpha),
                              CoordinateVector((0.5, -1.0, 2.0),
                                               (0.1, 0.2, 0.7)))
    c, s = math.cosh(alpha), math.sinh(alpha)
    assert image.t[2] == pytest.approx(c * 2.0 - s * 0.7)
    assert image.x[2] == pytest.approx(c * 0.7 - s * 2.0)
    assert image.t[0] == pytest.approx(0.5)
    assert image.x[0] == pytest.approx(0.1)


def test_boost_of_lightlike_coordinate_scales():
    alpha = 0.7
    image = boost_coordinates(lorentz_boost(alpha), [0, 0, 1.0, 0, 0, -1.0])
    assert image.t[2] - image.x[2] == pytest.approx(
        math.exp(alpha) * 2.0)


def test_boost_inverse_is_identity():
    forward, back = lorentz_boost(0.9), lorentz_boost(-0.9)
    composed = forward.then(back)
    assert (composed.value - Multivector.scalar(1.0, DOUBLE)).is_zero(1e-12)
    assert identity_rotor().is_unit()


def test_field_rapidity_signs():
    alpha = 0.25
    assert field_rapidity(lorentz_boost(alpha), (0, 0, 1)) == \
        pytest.approx(-alpha)
    assert field_rapidity(conjugate_boost(alpha), (0, 0, 1)) == \
        pytest.approx(alpha)


def test_boost_fields_closed_form_agrees():
    spec = PlaneWaveSpec([1, 0, 0], [0, 0, 1])
    F = plane_wave_field(spec)
    sandwiched, closed = boost_fields(lorentz_boost(0.5), F, (0, 0, 1))
    assert (sandwiched - closed).is_zero(1e-12)


def test_boost_closed_form_vectors():
    E, B = boost_closed_form([1, 0, 0], [0, 1, 0], [0, 0, 1], -0.3)
    assert np.allclose(E, [math.exp(-0.3), 0, 0])
    assert np.allclose(B, [0, math.exp(-0.3), 0])


def test_conjugation_turns_right_into_left():
    F = plane_wave_field(PlaneWaveSpec([1, 0, 0], [0, 0, 1]))
    right = chirality_of(F)
    conj = conjugation_rotor()
    flipped = chirality_of(sandwich(conj, F))
    assert right.handedness == 'right'
    assert flipped.handedness == 'left'
    assert flipped.frequency_sign == -right.frequency_sign
    assert chirality_of(sandwich(conj, sandwich(conj, F))).handedness == \
        'right'


def test_rotor_exp_rejects_bad_bivectors():
    with pytest.raises(DomainError):
        rotor_exp(generator('t1'), 0.5)
    with pytest.raises(DomainError):
        rotor_exp(generator('t1') * generator('t2') * 2, 0.5)
    with pytest.raises(DomainError):
        lorentz_boost(0.3, (0, 0, 2))
    with pytest.raises(BadType):
        lorentz_boost(0.3, (0, 1))


def test_rotor_rejects_odd_values():
    with pytest.raises(DomainError):
        Rotor(generator('t1'), generator('t1'))
