"""
    Contour integrals in the transverse-time plane tau = t1 + i t2.

    argument_integral counts zeros minus poles inside a circle with the
    logarithmic derivative; xi_integral integrates -log(q)/(2 pi i) with a
    continuously tracked branch.
"""
import numbers

import numpy as np

from ..core.exceptions import DomainError, NonConvergence, Undersampled, \
    handler, typeChecker
from .qparser import RationalFunctionSpec

MIN_SAMPLES = 64
DEFAULT_SAMPLES = 4096
WINDING_TOLERANCE = 1e-6
CLEARANCE = 1e-6
SUBSTEPS = 8


class ContourSpec:
    def __init__(self, center=0j, radius=1.0, samples=DEFAULT_SAMPLES):
        """
            Initialization - a circle |tau - center| = radius

            :param center: complex center
            :param radius: radius, > 0
            :param samples: quadrature points, >= 64
        """
        name = type(self).__name__
        typeChecker(name, center, numbers.Number, 'center')
        typeChecker(name, radius, numbers.Real, 'radius')
        typeChecker(name, samples, int, 'samples')
        if not radius > 0:
            handler(name, 'radius {} is not positive'.format(radius))
            raise DomainError('the contour radius must be positive')
        if samples < MIN_SAMPLES:
            handler(name, '{} samples'.format(samples))
            raise DomainError('contours need at least {} samples'.format(
                MIN_SAMPLES))
        self.center = complex(center)
        self.radius = float(radius)
        self.samples = samples

    def inside(self, point):
        return abs(point - self.center) < self.radius

    def conjugate(self):
        return ContourSpec(self.center.conjugate(), self.radius, self.samples)

    def angles(self, closed=False):
        count = self.samples + 1 if closed else self.samples
        return 2 * np.pi * np.arange(count) / self.samples

    def get_dict(self):
        return {'center': [self.center.real, self.center.imag],
                'radius': self.radius, 'samples': self.samples}


class ChargeReport:
    def __init__(self, P, N, value, residual, orientation=1):
        """
            Initialization - charge count inside a contour

            :param P: poles inside (positive charge)
            :param N: zeros inside (negative charge)
            :param value: (1/2 pi i) times the contour integral of q'/q
            :param residual: distance of value from the nearest integer
            :param orientation: +1 counter-clockwise, -1 clockwise
        """
        self.P = P
        self.N = N
        self.value = complex(value)
        self.residual = float(residual)
        self.orientation = orientation

    @property
    def net(self):
        return self.P - self.N

    @property
    def winding(self):
        return int(round(self.value.real))

    def get_dict(self):
        return {'P': self.P, 'N': self.N, 'net': self.net,
                'winding': self.winding,
                'value': [self.value.real, self.value.imag],
                'residual': self.residual, 'orientation': self.orientation}


def check_clearance(q, contour):
    """
        :raises DomainError: a zero or pole lies within radius * 1e-6 of the
            contour path
    """
    for point in q.zeros + q.poles:
        gap = abs(abs(point - contour.center) - contour.radius)
        if gap <= CLEARANCE * contour.radius:
            handler('contour', '{} lies on the contour'.format(point))
            raise DomainError('a zero or pole lies on the contour')


def argument_integral(q, contour, orientation=1):
    """
        (1/2 pi i) times the contour integral of q'/q by the uniform-angle
            trapezoid rule

        :param q: RationalFunctionSpec
        :param contour: ContourSpec
        :param orientation: +1 counter-clockwise, -1 clockwise
        :returns: ChargeReport; the rounded value equals zeros minus poles
            inside (times orientation)
        :raises NonConvergence: the value is further than 1e-6 from an
            integer
    """
    typeChecker('argument_integral', q, RationalFunctionSpec, 'q')
    typeChecker('argument_integral', contour, ContourSpec, 'contour')
    check_clearance(q, contour)
    theta = contour.angles()
    step = contour.radius * np.exp(1j * theta)
    tau = contour.center + step
    integrand = q.log_derivative(tau) * 1j * step
    value = orientation * np.sum(integrand) * (2 * np.pi / contour.samples)
    value = value / (2j * np.pi)
    residual = abs(value - round(value.real))
    if residual > WINDING_TOLERANCE:
        handler('argument_integral', 'residual {} with {} samples'.format(
            residual, contour.samples))
        raise NonConvergence('argument integral did not converge; use more '
                             'samples')
    P = sum(1 for p in q.poles if contour.inside(p))
    N = sum(1 for z in q.zeros if contour.inside(z))
    return ChargeReport(P, N, value, residual, orientation)


def conjugate_charge(q, contour):
    """
        Counting on the conjugated data tau -> tau*; the induced orientation
            is clockwise and the charge labels exchange, so the net charge
            negates

        :returns: ChargeReport
    """
    report = argument_integral(q.conjugate(), contour.conjugate(), -1)
    return ChargeReport(report.N, report.P, report.value, report.residual,
                        report.orientation)


class XiIntegral:
    def __init__(self, value, winding, closed_form, samples):
        """
            Initialization - the log-integral and its branch bookkeeping

            :param value: -1/(2 pi i) times the contour integral of log q
            :param winding: accumulated phase of q over the contour / 2 pi
            :param closed_form: exact value for the tracked branch
            :param samples: quadrature points used
        """
        self.value = complex(value)
        self.winding = winding
        self.closed_form = complex(closed_form)
        self.samples = samples

    @property
    def residual(self):
        return abs(self.value - self.closed_form)

    def get_dict(self):
        return {'value': [self.value.real, self.value.imag],
                'winding': self.winding,
                'closed_form': [self.closed_form.real,
                                self.closed_form.imag],
                'residual': self.residual, 'samples': self.samples}


def tracked_log(q, contour):
    """
        log q at the closed contour samples, the imaginary part carried
            continuously from the principal value at the first sample

        :raises Undersampled: the phase of q jumps by more than pi between
            adjacent samples
    """
    count = contour.samples * SUBSTEPS
    fine = contour.center + contour.radius * np.exp(
        2j * np.pi * np.arange(count + 1) / count)
    values = q.evaluate(fine)
    jumps = np.angle(values[1:] / values[:-1]).reshape(
        contour.samples, SUBSTEPS).sum(axis=1)
    worst = float(np.max(np.abs(jumps)))
    if worst > np.pi:
        handler('xi_integral', 'phase jump {} exceeds pi'.format(worst))
        raise Undersampled('increase the contour samples')
    values = values[::SUBSTEPS]
    phase = np.angle(values[0]) + np.concatenate(([0.0], np.cumsum(jumps)))
    return np.log(np.abs(values)) + 1j * phase


def xi_integral(q, contour):
    """
        -1/(2 pi i) times the contour integral of log q, the branch starting
            at the principal value at tau = center + radius

        :returns: XiIntegral
        :raises Undersampled: the contour is too coarse to track the branch
    """
    typeChecker('xi_integral', q, RationalFunctionSpec, 'q')
    typeChecker('xi_integral', contour, ContourSpec, 'contour')
    check_clearance(q, contour)
    theta = contour.angles(closed=True)
    h = 2 * np.pi / contour.samples
    step = contour.radius * np.exp(1j * theta)
    tau = contour.center + step
    log_q = tracked_log(q, contour)
    dtau = 1j * step
    g = log_q * dtau
    trapezoid = h * (np.sum(g) - 0.5 * (g[0] + g[-1]))
    slope = q.log_derivative(tau[[0, -1]]) * dtau[[0, -1]] ** 2 - \
        log_q[[0, -1]] * step[[0, -1]]
    integral = trapezoid - h * h / 12 * (slope[1] - slope[0])
    winding = int(round((log_q[-1].imag - log_q[0].imag) / (2 * np.pi)))
    return XiIntegral(-integral / (2j * np.pi), winding,
                      xi_closed_form(q, contour), contour.samples)


def xi_closed_form(q, contour):
    """
        -[tau_start (N - P) - sum(zeros inside) + sum(poles inside)] with
            tau_start = center + radius
    """
    start = contour.center + contour.radius
    zeros = [z for z in q.zeros if contour.inside(z)]
    poles = [p for p in q.poles if contour.inside(p)]
    return -(start * (len(zeros) - len(poles)) - sum(zeros) + sum(poles))
