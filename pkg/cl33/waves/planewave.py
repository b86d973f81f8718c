"""
    Bivector plane waves

        F = i s |k| {A + h I (k_hat x A)} exp(-i s (|k| t3 - k.x))

    with h = +1 for right-handed and h = -1 for left-handed waves, i the
    transverse-time bivector and exp(-i s p) = cos p - i s sin p.
"""
from fractions import Fraction
import math
import numbers

import numpy as np

from ..core.constants import PSEUDO_I
from ..core.exceptions import BadInput, DomainError, handler, \
    categoryChecker, typeCheckerArray
from ..core.report import measure
from ..core.ring import DOUBLE, RATIONAL
from ..derivations.maxwell import MaxwellFields, check_maxwell
from ..fields.calculus import cross, dot
from ..fields.field import MultivectorField, coefficient_field
from ..fields.trigpoly import LinearForm, TrigPoly
from ..manipulators.chirality import bivector_units, read_bivector_fields
from ..manipulators.rotors import boost_coordinates, conjugate_boost, \
    lorentz_boost, sandwich

HANDEDNESS = ('right', 'left')


def _exact_sqrt(value):
    """
        Square root of a non-negative Fraction when it is rational, else None
    """
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def _complex_pair(value):
    if isinstance(value, (tuple, list)) and len(value) == 2:
        return value[0], value[1]
    if isinstance(value, complex):
        return value.real, value.imag
    if isinstance(value, numbers.Real) and not isinstance(value, bool):
        return value, 0
    handler('PlaneWaveSpec', '{!r} is not a complex amplitude'.format(value))
    raise BadInput('amplitudes are numbers, complex numbers or (re, im) '
                   'pairs')


class PlaneWaveSpec:
    def __init__(self, amplitude, k, handedness='right', frequency_sign=None):
        """
            Initialization - one plane-wave normal mode

            :param amplitude: three complex amplitudes (complex, real or
                (re, im) pairs; the imaginary unit is the bivector i)
            :param k: wave vector, three real numbers
            :param handedness: right or left
            :param frequency_sign: +1 or -1; defaults to +1 for right and
                -1 for left
            :raises DomainError: |k| = 0 or A.k != 0 within 1e-9
        """
        typeCheckerArray(type(self).__name__, k, numbers.Real, 'k', 3)
        categoryChecker(type(self).__name__, handedness, HANDEDNESS,
                        'handedness')
        if len(amplitude) != 3:
            raise BadInput('amplitude needs three components')
        self.handedness = handedness
        self.h = 1 if handedness == 'right' else -1
        self.s = self.h if frequency_sign is None else frequency_sign
        categoryChecker(type(self).__name__, self.s, (1, -1),
                        'frequency_sign')
        pairs = [_complex_pair(a) for a in amplitude]
        exact = all(not isinstance(v, float) for v in k) and \
            all(not isinstance(v, float) for pair in pairs for v in pair)
        norm = None
        if exact:
            k = [Fraction(v) for v in k]
            norm = _exact_sqrt(sum(v * v for v in k))
        if norm is None:
            exact = False
            k = [float(v) for v in k]
            norm = float(np.sqrt(sum(v * v for v in k)))
        if norm == 0:
            handler(type(self).__name__, 'k = {}'.format(k))
            raise DomainError('a plane wave needs |k| > 0')
        self.ring = RATIONAL if exact else DOUBLE
        convert = Fraction if exact else float
        self.re = [convert(p[0]) for p in pairs]
        self.im = [convert(p[1]) for p in pairs]
        self.k = k
        self.norm = norm
        for part in (self.re, self.im):
            if abs(float(sum(a * b for a, b in zip(part, k)))) > \
                    1e-9 * float(norm):
                handler(type(self).__name__, 'amplitude {} is not normal to '
                        'k = {}'.format(part, k))
                raise DomainError('the amplitude must be normal to k')

    @property
    def k_hat(self):
        return [v / self.norm for v in self.k]

    @property
    def frequency(self):
        return float(self.norm) / (2 * np.pi)

    def phase(self):
        """
            |k| t3 - k.x
        """
        return LinearForm([0, 0, self.norm] + [-v for v in self.k], 0,
                          self.ring)

    def get_dict(self):
        return {'amplitude': [[float(a), float(b)] for a, b in
                              zip(self.re, self.im)],
                'k': [float(v) for v in self.k],
                'handedness': self.handedness,
                'frequency_sign': self.s}


def plane_wave_fields(spec):
    """
        E and B of a plane wave (B = h k_hat x E)

        :returns: (E, B) as tuples of span{1, i} fields
    """
    ring = spec.ring
    phase = spec.phase()
    # i s |k| (cos p - i s sin p) = |k| sin p + i s |k| cos p
    carrier = coefficient_field(TrigPoly.sin(phase, spec.norm),
                                TrigPoly.cos(phase, spec.norm * spec.s),
                                ring=ring)
    A = [coefficient_field(a, b, ring=ring) for a, b in zip(spec.re,
                                                          spec.im)]
    E = tuple(carrier * a for a in A)
    k_hat = spec.k_hat
    B = tuple(spec.h * v for v in cross(k_hat, E))
    return E, B


def plane_wave_field(spec):
    """
        The bivector field sum_n e_n (E_n + I B_n) of a plane wave
    """
    E, B = plane_wave_fields(spec)
    I = PSEUDO_I if spec.ring == RATIONAL else PSEUDO_I.to_double()
    F = MultivectorField.zero(spec.ring)
    for unit, e, b in zip(bivector_units(spec.ring), E, B):
        F = F + unit * (e + I * b)
    return F


def check_plane_wave(field, k_hat, handedness='right', points=None,
                     tol=None):
    """
        Orthogonality E.B, transversality k_hat x E - B and Maxwell's
            equations for a plane-wave field; left-handed waves are read
            with B -> -B

        :param field: plane-wave MultivectorField
        :param k_hat: propagation direction
        :param handedness: right or left
        :param points: optional sample points for sampled Maxwell residuals
        :returns: list of Check entries
    """
    categoryChecker('check_plane_wave', handedness, HANDEDNESS, 'handedness')
    E, B = read_bivector_fields(field)
    if handedness == 'left':
        B = tuple(-b for b in B)
    checks = [
        measure('orthogonality', dot(E, B), tol),
        measure('transversality', [c - b for c, b in
                                   zip(cross(k_hat, E), B)], tol),
    ]
    fields = MaxwellFields.from_components(E=E, B=B, ring=field.ring)
    checks += check_maxwell(fields, points, tol)
    return checks


def boost_rotors(alpha, k_hat=(0, 0, 1)):
    """
        Field rotors of a boost along k_hat: R_L for right-handed waves and
            the conjugate R_Lc for left-handed ones
    """
    return {'right': lorentz_boost(alpha, k_hat),
            'left': conjugate_boost(alpha, k_hat)}


def boost_plane_wave(spec, alpha):
    """
        A plane wave seen from a frame boosted along k_hat by rapidity alpha:
            same amplitude, wave vector scaled by exp(-alpha)

        :returns: PlaneWaveSpec
    """
    scale = float(np.exp(-alpha))
    return PlaneWaveSpec([complex(float(a), float(b)) for a, b in
                          zip(spec.re, spec.im)],
                         [float(v) * scale for v in spec.k],
                         spec.handedness, spec.s)


def boost_covariance(spec, alpha, points, tol=None):
    """
        Compares R F(x) R^-1 with the boosted wave evaluated at the boosted
            coordinates R_L x R_L^-1

        :param spec: PlaneWaveSpec propagating along s3
        :param alpha: rapidity
        :param points: iterable of six-coordinate points
        :returns: Check
    """
    if [float(v) for v in spec.k_hat] != [0.0, 0.0, 1.0]:
        raise DomainError('boost covariance is checked for waves along s3')
    rotor = boost_rotors(alpha)[spec.handedness]
    coordinates = lorentz_boost(alpha)
    transformed = sandwich(rotor, plane_wave_field(spec).to_double())
    boosted = plane_wave_field(boost_plane_wave(spec, alpha)).to_double()
    worst = 0.0
    for point in points:
        image = boost_coordinates(coordinates, list(point))
        worst = max(worst, (transformed.evaluate(point) -
                            boosted.evaluate(image.point)).max_abs())
    return measure('boost_covariance', worst, tol)
