"""
    Counter-chiral resonant wave packets.

    A right-handed wave at f_N and a left-handed wave at f_g with matched
    amplitudes k_N A = -k_g A_c = A1 superpose to a packet on u = t3 - x3 in
    [0, tau0] whose B vanishes at both edges and whose |E| peaks there when
    f_g = 1/(2 tau0) and f_N = (N + 1/2) 2 f_g.
"""
import math
import numbers

import numpy as np

from ..core.config import get_tolerance
from ..core.constants import COEFFICIENT_MASKS
from ..core.exceptions import BadInput, DomainError, NonResonant, \
    Undersampled, handler, typeChecker, typeCheckerArray
from ..core.report import Check, measure
from ..manipulators.chirality import read_bivector_fields
from ..manipulators.rotors import field_rapidity, sandwich
from .planewave import PlaneWaveSpec, boost_rotors, plane_wave_field

RESONANCE_TOLERANCE = 1e-12
MIN_SAMPLES = 1024
SAMPLES_PER_PERIOD = 64
MIN_SAMPLES_PER_PERIOD = 16


class PacketSpec:
    def __init__(self, f_g, N, tau0, polarization=(1, 0, 0), amplitude=1.0,
                 f_N=None, allow_detuned=False):
        """
            Initialization - a counter-chiral packet travelling along s3

            :param f_g: left-handed (ground) frequency, > 0
            :param N: rung of the ladder, >= 0
            :param tau0: packet length in u, > 0
            :param polarization: unit vector normal to s3
            :param amplitude: A1
            :param f_N: right-handed frequency; defaults to (N + 1/2) 2 f_g
            :param allow_detuned: accept f_g != 1/(2 tau0) or a detuned f_N
            :raises DomainError: invalid parameters, or a detuned packet
                without allow_detuned
        """
        name = type(self).__name__
        typeChecker(name, N, int, 'N')
        for value, label in ((f_g, 'f_g'), (tau0, 'tau0')):
            typeChecker(name, value, numbers.Real, label)
            if not value > 0:
                handler(name, '{} = {} is not positive'.format(label, value))
                raise DomainError('{} must be positive'.format(label))
        if N < 0:
            raise DomainError('N must be non-negative')
        typeCheckerArray(name, list(polarization), numbers.Real,
                         'polarization', 3)
        p = np.asarray(polarization, dtype=float)
        if abs(float(np.linalg.norm(p)) - 1) > 1e-9 or abs(p[2]) > 1e-9:
            handler(name, 'polarization {} is not a unit vector normal to '
                    's3'.format(list(p)))
            raise DomainError('the polarization must be a unit transverse '
                              'vector')
        self.f_g = float(f_g)
        self.N = N
        self.tau0 = float(tau0)
        self.polarization = [float(v) for v in p]
        self.amplitude = float(amplitude)
        self.f_N = (N + 0.5) * 2 * self.f_g if f_N is None else float(f_N)
        self.allow_detuned = allow_detuned
        if not self.is_resonant and not allow_detuned:
            handler(name, 'f_g = {}, f_N = {}, tau0 = {} is detuned'.format(
                self.f_g, self.f_N, self.tau0))
            raise DomainError('packet is not resonant; pass allow_detuned')

    @property
    def f0(self):
        return 2 * self.f_g

    @property
    def is_resonant(self):
        tol = RESONANCE_TOLERANCE
        ground = abs(self.f_g * 2 * self.tau0 - 1) <= tol
        rung = abs(self.f_N - (self.N + 0.5) * self.f0) <= \
            tol * max(1.0, self.f_N)
        return ground and rung

    def boosted(self, alpha):
        """
            The same packet in a frame boosted along s3: tau0 -> e^a tau0,
                frequencies and amplitude -> e^-a
        """
        scale = math.exp(alpha)
        return PacketSpec(self.f_g / scale, self.N, self.tau0 * scale,
                          self.polarization, self.amplitude / scale,
                          self.f_N / scale, self.allow_detuned)

    def get_dict(self):
        return {'f_g': self.f_g, 'N': self.N, 'tau0': self.tau0,
                'f_N': self.f_N, 'polarization': self.polarization,
                'amplitude': self.amplitude, 'resonant': self.is_resonant}


class SampledField:
    def __init__(self, u, E, B):
        """
            Initialization - complex E and B sampled over u

            :param u: (n,) array of u values
            :param E: (n, 3) complex array
            :param B: (n, 3) complex array
        """
        self.u = np.asarray(u, dtype=float)
        self.E = np.asarray(E, dtype=complex)
        self.B = np.asarray(B, dtype=complex)
        if self.E.shape != (len(self.u), 3) or self.B.shape != self.E.shape:
            raise BadInput('E and B need one 3-vector per sample')

    def __len__(self):
        return len(self.u)

    def magnitudes(self):
        """
            :returns: (|E|, |B|) per sample
        """
        return np.linalg.norm(self.E, axis=1), np.linalg.norm(self.B, axis=1)

    def rows(self):
        """
            u, then Re/Im of E1..E3, then Re/Im of B1..B3
        """
        for n, u in enumerate(self.u):
            row = [float(u)]
            for vector in (self.E[n], self.B[n]):
                for value in vector:
                    row += [float(value.real), float(value.imag)]
            yield row


class NodeCount:
    def __init__(self, ok, nodes, fraction, edge_residual):
        """
            Initialization - outcome of a simple packet node count

            :param ok: True when (f_N - f_g) tau0 is an integer
            :param nodes: nearest integer
            :param fraction: fractional part of (f_N - f_g) tau0
            :param edge_residual: |superposition| at u = tau0
        """
        self.ok = ok
        self.nodes = nodes
        self.fraction = fraction
        self.edge_residual = edge_residual

    def get_dict(self):
        return {'ok': self.ok, 'nodes': self.nodes,
                'fraction': self.fraction,
                'edge_residual': self.edge_residual}


def simple_packet_nodes(f_N, f_g, tau0, tol=None):
    """
        Two same-handed waves exp(-2 pi i f u) at f_N and f_g vanish together
            at u = 0 and u = tau0 iff (f_N - f_g) tau0 is an integer

        :returns: NodeCount
    """
    for value, label in ((f_N, 'f_N'), (f_g, 'f_g'), (tau0, 'tau0')):
        if not value > 0:
            raise DomainError('{} must be positive'.format(label))
    tol = get_tolerance() if tol is None else tol
    count = (f_N - f_g) * tau0
    nodes = int(round(count))
    edge = abs(np.exp(-2j * np.pi * f_N * tau0) -
               np.exp(-2j * np.pi * f_g * tau0))
    ok = abs(count - nodes) <= tol * max(1.0, abs(count))
    return NodeCount(ok, nodes, float(count - math.floor(count)),
                     float(edge))


def eigenfrequency_ladder(tau0, N_max):
    """
        f_N = (N + 1/2) f0 with f0 = 2 f_g = 1/tau0, for N = 0..N_max
    """
    typeChecker('eigenfrequency_ladder', N_max, int, 'N_max')
    if not tau0 > 0 or N_max < 0:
        raise DomainError('tau0 must be positive and N_max non-negative')
    f0 = 1.0 / tau0
    return [(N + 0.5) * f0 for N in range(N_max + 1)]


def packet_energy_quantum(spec):
    """
        (f_N - f_g)/f0, the transferable energy in units of h f0

        :raises NonResonant: the packet is detuned
    """
    if not spec.is_resonant:
        handler('packet_energy_quantum', 'spec {} is not resonant'.format(
            spec.get_dict()))
        raise NonResonant('energy quantum of a detuned packet')
    return (spec.f_N - spec.f_g) / spec.f0


def default_samples(spec):
    return max(MIN_SAMPLES,
               math.ceil(SAMPLES_PER_PERIOD * spec.f_N * spec.tau0) + 1)


def packet_components(spec):
    """
        The right- and left-handed plane-wave specs of a packet
    """
    k_N = 2 * np.pi * spec.f_N
    k_g = 2 * np.pi * spec.f_g
    A1, p = spec.amplitude, spec.polarization
    right = PlaneWaveSpec([A1 * v / k_N for v in p], [0.0, 0.0, k_N],
                          'right')
    left = PlaneWaveSpec([-A1 * v / k_g for v in p], [0.0, 0.0, k_g],
                         'left')
    return right, left


def complex_samples(value, points):
    """
        Evaluates a span{1, i} field at many points as complex numbers
    """
    values = value.evaluate_many(points)
    zero = np.zeros(len(points))
    return values.get(0, zero) + 1j * values.get(COEFFICIENT_MASKS[1], zero)


def sample_fields(fields, u):
    """
        Samples bivector fields at t3 = u, x = 0 and returns the summed
            SampledField
    """
    points = np.zeros((len(u), 6))
    points[:, 2] = u
    E = np.zeros((len(u), 3), dtype=complex)
    B = np.zeros((len(u), 3), dtype=complex)
    for field in fields:
        e_parts, b_parts = read_bivector_fields(field)
        for n in range(3):
            E[:, n] += complex_samples(e_parts[n], points)
            B[:, n] += complex_samples(b_parts[n], points)
    return SampledField(u, E, B)


def _grid(spec, samples):
    samples = default_samples(spec) if samples is None else samples
    if (samples - 1) < MIN_SAMPLES_PER_PERIOD * spec.f_N * spec.tau0:
        handler('resonant_packet', '{} samples for {} periods'.format(
            samples, spec.f_N * spec.tau0))
        raise Undersampled('fewer than {} samples per period'.format(
            MIN_SAMPLES_PER_PERIOD))
    return np.linspace(0.0, spec.tau0, samples)


def refined_peak(u, values):
    """
        Parabolic refinement of the sampled maximum

        :returns: (u_peak, value_peak)
    """
    index = int(np.argmax(values))
    if 0 < index < len(values) - 1:
        y0, y1, y2 = values[index - 1], values[index], values[index + 1]
        denominator = y0 - 2 * y1 + y2
        if denominator != 0:
            shift = 0.5 * (y0 - y2) / denominator
            step = u[1] - u[0]
            return float(u[index] + shift * step), \
                float(y1 - 0.25 * (y0 - y2) * shift)
    return float(u[index]), float(values[index])


def edge_checks(sampled, resonant=True):
    """
        B vanishes at both edges relative to its maximum; |E| at the edges
            equals its maximum within 1e-9
    """
    E_abs, B_abs = sampled.magnitudes()
    B_max = float(np.max(B_abs)) or 1.0
    E_max = float(np.max(E_abs)) or 1.0
    checks = [
        measure('edge_B.start', float(B_abs[0]) / B_max, RESONANCE_TOLERANCE),
        measure('edge_B.end', float(B_abs[-1]) / B_max, RESONANCE_TOLERANCE),
        measure('edge_E.start', abs(float(E_abs[0]) - E_max) / E_max, 1e-9),
        measure('edge_E.end', abs(float(E_abs[-1]) - E_max) / E_max, 1e-9),
    ]
    if not resonant:
        for check in checks:
            check.status = 'info'
            check.detail = 'non-resonant packet'
    peak_u, peak = refined_peak(sampled.u, E_abs)
    checks.append(Check.info('peak_E', detail={'u': peak_u, 'value': peak,
                                               'max_B': float(np.max(B_abs))}))
    return checks


def resonant_packet(spec, samples=None):
    """
        Samples the counter-chiral packet over u in [0, tau0]

        :param spec: PacketSpec
        :param samples: grid size; defaults to max(1024, 64 f_N tau0 + 1)
        :returns: (SampledField, list of Check entries)
        :raises Undersampled: fewer than 16 samples per shortest period
    """
    typeChecker('resonant_packet', spec, PacketSpec, 'spec')
    u = _grid(spec, samples)
    right, left = packet_components(spec)
    sampled = sample_fields([plane_wave_field(right), plane_wave_field(left)],
                            u)
    checks = edge_checks(sampled, spec.is_resonant)
    if not spec.is_resonant:
        checks.append(Check.info('resonance', detail=spec.get_dict()))
    else:
        ladder = eigenfrequency_ladder(spec.tau0, spec.N)[-1]
        checks.append(measure('ladder_entry',
                              abs(math.cos(2 * math.pi * ladder * spec.tau0)
                                  + 1), RESONANCE_TOLERANCE))
        quantum = packet_energy_quantum(spec)
        checks.append(measure('energy_quantum', quantum - spec.N,
                              RESONANCE_TOLERANCE, detail=quantum))
    if spec.N == 0:
        checks.append(Check.info('degenerate_rung', detail='f_N equals f_g'))
    return sampled, checks


def boost_packet(spec, alpha, samples=None, tol=1e-10):
    """
        Boosts a packet along s3: the right-handed part with R_L, the
            left-handed part with the conjugate rotor, and compares against
            the packet built directly in the boosted frame

        :returns: (boosted PacketSpec, SampledField, list of Check entries)
    """
    typeChecker('boost_packet', spec, PacketSpec, 'spec')
    boosted = spec.boosted(alpha)
    u_boosted = _grid(boosted, samples)
    rotors = boost_rotors(alpha)
    right, left = packet_components(spec)
    transformed = [sandwich(rotors['right'], plane_wave_field(right)),
                   sandwich(rotors['left'], plane_wave_field(left))]
    sampled = sample_fields(transformed, u_boosted * math.exp(-alpha))
    sampled = SampledField(u_boosted, sampled.E, sampled.B)
    direct, _ = resonant_packet(boosted, len(u_boosted))
    scale = float(np.max(np.abs(direct.E))) or 1.0
    checks = [measure('boost_covariance',
                      float(np.max(np.abs(sampled.E - direct.E)) +
                            np.max(np.abs(sampled.B - direct.B))) / scale,
                      tol)]
    E_abs, B_abs = sampled.magnitudes()
    B_max = float(np.max(B_abs)) or 1.0
    checks.append(measure('boosted_edge_B',
                          max(float(B_abs[0]), float(B_abs[-1])) / B_max, tol))
    checks.append(measure('invariant_integer',
                          (boosted.f_N - boosted.f_g) * boosted.tau0 -
                          (spec.f_N - spec.f_g) * spec.tau0,
                          RESONANCE_TOLERANCE * max(1, spec.N)))
    checks.append(Check.info('field_rapidity', detail={
        'right': field_rapidity(rotors['right'], (0, 0, 1)),
        'left': field_rapidity(rotors['left'], (0, 0, 1))}))
    return boosted, sampled, checks
