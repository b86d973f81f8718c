import numpy as np

from ..core.config import get_tolerance
from ..core.constants import COEFFICIENT_MASKS, PSEUDO_I, generator
from ..core.exceptions import DomainError, handler, typeChecker
from ..core.multivector import inverse
from ..core.ring import RATIONAL
from ..fields.field import MultivectorField, complex_part, pseudo_part

SAMPLE_PHASES = (0.0, np.pi / 4, np.pi / 2, 3 * np.pi / 4)
HANDEDNESS = ('right', 'left')


def bivector_units(ring=RATIONAL):
    """
        e_n = gamma_sn gamma_t3
    """
    t3 = generator('t3')
    units = [generator(s) * t3 for s in ('s1', 's2', 's3')]
    return units if ring == RATIONAL else [u.to_double() for u in units]


def _family_masks():
    masks = set()
    for unit in bivector_units():
        (mask,) = unit.terms.keys()
        masks.update(mask ^ c for c in COEFFICIENT_MASKS)
    return masks


def read_bivector_fields(F):
    """
        Reads F = sum_n e_n (E_n + I B_n) back into E and B, each entry a
            span{1, i} field

        :returns: (E, B) as tuples of three MultivectorFields
    """
    typeChecker('read_bivector_fields', F, MultivectorField, 'field')
    I = PSEUDO_I if F.ring == RATIONAL else PSEUDO_I.to_double()
    E, B = [], []
    for unit in bivector_units(F.ring):
        value = inverse(unit) * F
        E.append(complex_part(value))
        B.append(-I * pseudo_part(value))
    return tuple(E), tuple(B)


def as_complex(value, point):
    """
        Evaluates a span{1, i} field at a point as a Python complex
    """
    mv = value.evaluate(point)
    return complex(mv.coefficient(0), mv.coefficient(COEFFICIENT_MASKS[1]))


def wave_phase(F, tol=None):
    """
        The single phase of a plane-wave field

        :returns: LinearForm with a positive t3 coefficient
        :raises DomainError: F is not a single plane wave of the e_n family
    """
    tol = get_tolerance() if tol is None else tol
    F = F.prune(tol)
    stray = set(F.masks()) - _family_masks()
    if stray:
        handler('chirality_of', 'blades {} are outside the e_n family'
                .format(sorted(stray)))
        raise DomainError('not a bivector plane-wave field')
    phases = set()
    for value in F.components.values():
        for exponents, kind, phase in value.terms:
            if kind == '1' or any(exponents):
                raise DomainError('plane-wave components must be pure '
                                  'cos/sin of one phase')
            phases.add(phase)
    if len(phases) != 1:
        handler('chirality_of', 'found {} phases'.format(len(phases)))
        raise DomainError('a plane wave carries exactly one phase')
    (phase,) = phases
    coefficients = phase.coefficients
    if coefficients[0] or coefficients[1] or not coefficients[2] > 0:
        raise DomainError('the phase must advance with t3 and be free of '
                          't1, t2')
    return phase


def propagation_direction(phase):
    """
        k_hat from a phase w t3 - k.x
    """
    k = -np.array([float(c) for c in phase.coefficients[3:]])
    norm = float(np.linalg.norm(k))
    if norm == 0:
        raise DomainError('the phase has no spatial dependence')
    return k / norm


class ChiralityVerdict:
    def __init__(self, handedness, orientation, frequency_sign, k_hat,
                 samples=None):
        """
            Initialization - handedness of a plane wave

            :param handedness: right or left
            :param orientation: summed (Re E x Re B).k_hat over the sample
                phases
            :param frequency_sign: +1 for exp(-i w t3), -1 for exp(+i w t3)
            :param k_hat: propagation direction
            :param samples: per-phase orientation values
        """
        self.handedness = handedness
        self.orientation = float(orientation)
        self.frequency_sign = int(frequency_sign)
        self.k_hat = [float(v) for v in k_hat]
        self.samples = [float(v) for v in samples or []]

    @property
    def sign(self):
        return 1 if self.handedness == 'right' else -1

    def get_dict(self):
        return {'handedness': self.handedness,
                'orientation': self.orientation,
                'frequency_sign': self.frequency_sign,
                'k_hat': self.k_hat, 'samples': self.samples}


def chirality_of(F, tol=None):
    """
        Handedness of a single plane-wave bivector field: the sign of
            (Re E x Re B).k_hat at several phases, and the frequency sign

        :raises DomainError: F is not a single plane wave
    """
    typeChecker('chirality_of', F, MultivectorField, 'field')
    tol = get_tolerance() if tol is None else tol
    phase = wave_phase(F, tol)
    k_hat = propagation_direction(phase)
    omega = float(phase.coefficients[2])
    shift = float(phase.constant)
    E, B = read_bivector_fields(F.to_double())
    samples = []
    for target in SAMPLE_PHASES:
        point = (0.0, 0.0, (target - shift) / omega, 0.0, 0.0, 0.0)
        re_E = np.array([as_complex(e, point).real for e in E])
        re_B = np.array([as_complex(b, point).real for b in B])
        samples.append(float(np.cross(re_E, re_B) @ k_hat))
    orientation = sum(samples)
    if abs(orientation) <= tol:
        raise DomainError('the field has no measurable orientation')
    point = (0.0, 0.0, -shift / omega, 0.0, 0.0, 0.0)
    index = int(np.argmax([abs(as_complex(e, point)) for e in E]))
    value = as_complex(E[index], point)
    if abs(value) <= tol:
        raise DomainError('the electric field vanishes at the sample point')
    rate = as_complex(E[index].differentiate('t3'), point) / value
    frequency_sign = -int(np.sign(rate.imag))
    return ChiralityVerdict('right' if orientation > 0 else 'left',
                            orientation, frequency_sign, k_hat, samples)
