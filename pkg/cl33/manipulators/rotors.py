# Example Use:
# from cl33.manipulators.rotors import lorentz_boost, sandwich
# from cl33.core.constants import generator

# boost = lorentz_boost(0.3, (0, 0, 1))
# print(sandwich(boost, generator('t3')))

import numbers

import numpy as np

from ..core.config import get_tolerance
from ..core.constants import PHI_S, generator
from ..core.exceptions import BadInput, DomainError, handler, \
    typeChecker, typeCheckerArray
from ..core.multivector import Multivector
from ..core.ring import DOUBLE, RATIONAL
from ..derivations.sta import bivector_field
from ..fields.calculus import CoordinateVector, cross
from ..fields.field import MultivectorField
from .chirality import read_bivector_fields

SPATIAL = ('s1', 's2', 's3')


class Rotor:
    def __init__(self, value, inverse, name='rotor', bivector=None,
                 half_angle=None):
        """
            Initialization - an even versor with its inverse

            :param value: even Multivector R
            :param inverse: even Multivector with R R^-1 = 1
            :param name: label used in reports
            :param bivector: generating bivector, when built by rotor_exp
            :param half_angle: half angle of the exponential, when known
        """
        typeChecker(type(self).__name__, value, Multivector, 'value')
        typeChecker(type(self).__name__, inverse, Multivector, 'inverse')
        if not value.odd().is_zero() or not inverse.odd().is_zero():
            handler(type(self).__name__, 'rotor {} has odd grades'.format(
                name))
            raise DomainError('a rotor must be even')
        self.value = value
        self.inverse = inverse
        self.name = name
        self.bivector = bivector
        self.half_angle = half_angle

    @property
    def ring(self):
        return self.value.ring

    def unit_residual(self):
        """
            Max-abs of R R^-1 - 1 and R^-1 R - 1
        """
        one = Multivector.scalar(1, self.ring)
        return max((self.value * self.inverse - one).max_abs(),
                   (self.inverse * self.value - one).max_abs())

    def is_unit(self, tol=None):
        tol = get_tolerance() if tol is None else tol
        if self.ring == RATIONAL:
            return self.unit_residual() == 0
        return self.unit_residual() <= tol

    def then(self, other):
        """
            Composition: apply self, then other
        """
        return Rotor(other.value * self.value, self.inverse * other.inverse,
                     '{}*{}'.format(other.name, self.name))

    def reversed(self):
        return Rotor(self.inverse, self.value, '{}^-1'.format(self.name))

    def __repr__(self):
        return 'Rotor({!r}, {})'.format(self.name, self.ring)


def rotor_exp(bivector, half_angle, name='rotor'):
    """
        exp(half_angle * bivector) for a bivector with square +1 or -1

        :param bivector: grade-2 Multivector whose square is +-1
        :param half_angle: real half angle
        :returns: Rotor in the double ring
        :raises DomainError: not a bivector, or its square is not +-1
    """
    typeChecker('rotor_exp', bivector, Multivector, 'bivector')
    if not isinstance(half_angle, numbers.Real) or \
            isinstance(half_angle, bool):
        handler('rotor_exp', '{} is not a real angle'.format(half_angle))
        raise BadInput('the half angle must be a real number')
    B = bivector.to_double()
    if B.is_zero() or B.grades() != [2]:
        handler('rotor_exp', 'grades {} are not a bivector'.format(B.grades()))
        raise DomainError('rotor_exp needs a grade-2 multivector')
    square = B * B
    tol = get_tolerance()
    value = square.scalar_part()
    if (square - Multivector.scalar(value, DOUBLE)).max_abs() > tol or \
            abs(abs(value) - 1) > 1e-9:
        handler('rotor_exp', 'bivector square {} is not +-1'.format(square))
        raise DomainError('rotor_exp needs a bivector with square +1 or -1')
    h = float(half_angle)
    if value < 0:
        c, s = np.cos(h), np.sin(h)
    else:
        c, s = np.cosh(h), np.sinh(h)
    one = Multivector.scalar(float(c), DOUBLE)
    return Rotor(one + B * float(s), one - B * float(s), name, B, h)


def sandwich(rotor, A):
    """
        R A R^-1 for a Multivector or a MultivectorField; exact operands are
            converted to the double ring when the rotor is inexact
    """
    typeChecker('sandwich', rotor, Rotor, 'rotor')
    if isinstance(A, Rotor):
        return Rotor(sandwich(rotor, A.value), sandwich(rotor, A.inverse),
                     '{}({})'.format(rotor.name, A.name))
    if not isinstance(A, (Multivector, MultivectorField)):
        handler('sandwich', '{!r} is not a multivector'.format(A))
        raise BadInput('sandwich needs a Multivector or MultivectorField')
    R, R_inv = rotor.value, rotor.inverse
    if A.ring != rotor.ring:
        if rotor.ring == DOUBLE:
            A = A.to_double()
        else:
            R, R_inv = R.to_double(), R_inv.to_double()
    return R * A * R_inv


def identity_rotor():
    one = Multivector.scalar(1)
    return Rotor(one, one, 'identity')


def spatial_rotation(theta, plane=('s1', 's2')):
    """
        Rotation by theta in a spatial plane, exp(theta/2 gamma_a gamma_b)
    """
    bivector = generator(plane[0]) * generator(plane[1])
    return rotor_exp(bivector, theta / 2, 'spatial_rotation')


def spatial_rotation_closed_form(P1, P2, theta):
    """
        Component form of spatial_rotation on P1 gamma_s1 + P2 gamma_s2
    """
    c, s = np.cos(theta), np.sin(theta)
    return P1 * c - P2 * s, P2 * c + P1 * s


def transverse_rotation(theta):
    """
        Rotation by theta in the (t1, t2) plane; gamma_t3 and every spatial
            generator are fixed
    """
    bivector = generator('t1') * generator('t2')
    return rotor_exp(bivector, -theta / 2, 'transverse_rotation')


def transverse_rotation_closed_form(a1, a2, theta):
    """
        Component form of transverse_rotation on a1 gamma_t1 + a2 gamma_t2
    """
    c, s = np.cos(theta), np.sin(theta)
    return a1 * c - a2 * s, a2 * c + a1 * s


def conjugation_rotor():
    """
        Exact R_c = gamma_t2 phi_s with inverse phi_s gamma_t2. Fixes gamma_t1
            and gamma_t3, negates gamma_t2 and every gamma_sn
    """
    t2 = generator('t2')
    return Rotor(t2 * PHI_S, PHI_S * t2, 'conjugation')


def _direction(b):
    typeCheckerArray('lorentz_boost', b, numbers.Real, 'direction', 3)
    b = np.asarray(b, dtype=float)
    if abs(float(np.linalg.norm(b)) - 1) > 1e-9:
        handler('lorentz_boost', 'direction {} has norm {}'.format(
            list(b), float(np.linalg.norm(b))))
        raise DomainError('the boost direction must be a unit vector')
    return b


def boost_bivector(b):
    """
        gamma_t3 (b . gamma_s)
    """
    b = _direction(b)
    t3 = generator('t3').to_double()
    out = Multivector({}, DOUBLE)
    for value, name in zip(b, SPATIAL):
        out = out + t3 * generator(name).to_double() * float(value)
    return out


def lorentz_boost(alpha, b=(0, 0, 1)):
    """
        R_L = exp(alpha/2 gamma_t3 (b . gamma_s))

        :param alpha: rapidity
        :param b: unit spatial direction
        :raises DomainError: |b| differs from 1 by more than 1e-9
    """
    return rotor_exp(boost_bivector(b), alpha / 2, 'lorentz_boost')


def conjugate_boost(alpha, b=(0, 0, 1)):
    """
        R_c R_L R_c^-1, the boost on the opposite branch; its bivector is
            the negated boost bivector
    """
    boost = lorentz_boost(alpha, b)
    out = sandwich(conjugation_rotor(), boost)
    out.name = 'conjugate_boost'
    out.bivector = -boost.bivector
    out.half_angle = boost.half_angle
    return out


def field_rapidity(rotor, k_hat):
    """
        Rapidity seen by bivector fields travelling along k_hat:
            2 h <bivector e_k>_0 with e_k = (k_hat . gamma_s) gamma_t3
    """
    if rotor.bivector is None:
        handler('field_rapidity', 'rotor {} has no generator'.format(
            rotor.name))
        raise DomainError('field_rapidity needs a rotor built by rotor_exp')
    t3 = generator('t3').to_double()
    e_k = Multivector({}, DOUBLE)
    for value, name in zip(k_hat, SPATIAL):
        e_k = e_k + generator(name).to_double() * t3 * float(value)
    return 2 * rotor.half_angle * (rotor.bivector * e_k).scalar_part()


def boost_closed_form(E, B, k_hat, rapidity):
    """
        Closed form of a boost along k_hat on E and B:
            E -> cosh E - sinh (k_hat x B), B -> cosh B + sinh (k_hat x E)

        :param E: three numbers (or arrays)
        :param B: three numbers (or arrays)
        :param k_hat: unit direction
        :param rapidity: field rapidity, see field_rapidity
        :returns: (E', B') as numpy arrays
    """
    E, B, k = (np.asarray(v, dtype=float) for v in (E, B, k_hat))
    c, s = np.cosh(rapidity), np.sinh(rapidity)
    return c * E - s * np.cross(k, B, axis=0), \
        c * B + s * np.cross(k, E, axis=0)


def boost_coordinates(rotor, point):
    """
        Transforms a coordinate point by R X R^-1

        :param point: CoordinateVector or six numbers
        :returns: CoordinateVector (double)
    """
    if not isinstance(point, CoordinateVector):
        typeCheckerArray('boost_coordinates', point, numbers.Real, 'point', 6)
        point = CoordinateVector(point[:3], point[3:])
    image = sandwich(rotor, point.multivector().to_double())
    return CoordinateVector([float(image.coefficient(1 << n))
                             for n in range(3)],
                            [float(image.coefficient(1 << (n + 3)))
                             for n in range(3)])


def boost_fields(rotor, F, k_hat):
    """
        Boosts a plane-wave bivector field two ways: the sandwich R F R^-1
            and the closed form on its E and B at the field rapidity

        :param rotor: boost rotor built by lorentz_boost or conjugate_boost
        :param F: MultivectorField of the e_n family
        :param k_hat: propagation direction, parallel to the boost
        :returns: (sandwiched field, closed-form field)
    """
    typeChecker('boost_fields', F, MultivectorField, 'field')
    F = F.to_double()
    E, B = read_bivector_fields(F)
    rapidity = field_rapidity(rotor, k_hat)
    c, s = float(np.cosh(rapidity)), float(np.sinh(rapidity))
    k = [float(v) for v in k_hat]
    E_boosted = [c * e - s * kb for e, kb in zip(E, cross(k, B))]
    B_boosted = [c * b + s * ke for b, ke in zip(B, cross(k, E))]
    return sandwich(rotor, F), bivector_field(E_boosted, B_boosted, DOUBLE)
