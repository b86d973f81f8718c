"""
    Differential operators on multivector fields.

    D = sum_m gamma_tm d_tm - sum_n gamma_sn d_xn, with every basis blade
    acting from the left. The transverse operators use the bivector
    i = gamma_t1 gamma_t2, also from the left.
"""
from fractions import Fraction

from ..core.constants import PI_T, TRANSVERSE_I, generator
from ..core.exceptions import BadInput, DomainError, handler, \
    categoryChecker, typeChecker
from ..core.config import make_rng
from ..core.multivector import Multivector, reverse
from ..core.report import Check, measure
from ..core.ring import RATIONAL, DOUBLE
from .field import MultivectorField
from .trigpoly import TrigPoly, coordinate_index

TEMPORAL = ('t1', 't2', 't3')
SPATIAL = ('x1', 'x2', 'x3')
TRANSVERSE = 'T'
TRANSVERSE_CONJUGATE = 'T*'


class CoordinateVector:
    def __init__(self, t=(0, 0, 0), x=(0, 0, 0)):
        """
            Initialization - a point (t1, t2, t3, x1, x2, x3)

            :param t: three temporal coordinates
            :param x: three spatial coordinates
        """
        if len(t) != 3 or len(x) != 3:
            handler(type(self).__name__, 'need 3 temporal and 3 spatial '
                    'coordinates')
            raise BadInput('a coordinate vector has 3+3 entries')
        self.t = tuple(Fraction(v) if not isinstance(v, float) else v
                       for v in t)
        self.x = tuple(Fraction(v) if not isinstance(v, float) else v
                       for v in x)

    @property
    def point(self):
        return self.t + self.x

    @property
    def ring(self):
        return RATIONAL if all(not isinstance(v, float)
                               for v in self.point) else DOUBLE

    def multivector(self, plus=False):
        """
            X = gamma_t.t + gamma_s.x, or X+ = gamma_t.t - gamma_s.x
        """
        ring = self.ring
        terms = {}
        for n, value in enumerate(self.t):
            terms[1 << n] = value
        for n, value in enumerate(self.x):
            terms[1 << (n + 3)] = -value if plus else value
        return Multivector(terms, ring)

    def square(self):
        """
            X X = t.t - x.x
        """
        return sum(v * v for v in self.t) - sum(v * v for v in self.x)


def coordinate_field(plus=False):
    """
        X (or X+ when plus is set) as a field over the coordinates
    """
    comps = {}
    for n, coord in enumerate(TEMPORAL):
        comps[1 << n] = TrigPoly.variable(coord)
    for n, coord in enumerate(SPATIAL):
        comps[1 << (n + 3)] = TrigPoly.variable(coord,
                                                coefficient=-1 if plus else 1)
    return MultivectorField(comps)


def tau_field(ring=RATIONAL):
    """
        tau = t1 + i t2 as a field
    """
    return MultivectorField({0: TrigPoly.variable('t1', ring=ring),
                             0b000011: TrigPoly.variable('t2', ring=ring)},
                            ring)


def differentiate(F, coord):
    """
        Exact partial derivative of a field along one coordinate
    """
    typeChecker('differentiate', F, MultivectorField, 'field')
    coordinate_index(coord)
    return F.differentiate(coord)


def _unit(name, ring):
    unit = generator(name)
    return unit if ring == RATIONAL else unit.to_double()


def apply_D(F):
    """
        :returns: sum_m gamma_tm d_tm F - sum_n gamma_sn d_xn F
    """
    typeChecker('apply_D', F, MultivectorField, 'field')
    out = MultivectorField.zero(F.ring)
    for name, coord in zip(('t1', 't2', 't3'), TEMPORAL):
        out = out + _unit(name, F.ring) * F.differentiate(coord)
    for name, coord in zip(('s1', 's2', 's3'), SPATIAL):
        out = out - _unit(name, F.ring) * F.differentiate(coord)
    return out


def apply_transverse(F, which=TRANSVERSE):
    """
        grad_T = d_t1 - i d_t2 or its conjugate d_t1 + i d_t2

        :param F: MultivectorField
        :param which: 'T' or 'T*'
    """
    typeChecker('apply_transverse', F, MultivectorField, 'field')
    categoryChecker('apply_transverse', which,
                    (TRANSVERSE, TRANSVERSE_CONJUGATE), 'which')
    i = TRANSVERSE_I if F.ring == RATIONAL else TRANSVERSE_I.to_double()
    d2 = i * F.differentiate('t2')
    if which == TRANSVERSE:
        return F.differentiate('t1') - d2
    return F.differentiate('t1') + d2


def transverse_laplacian(F):
    """
        grad_T* grad_T F, equal to (d_t1^2 + d_t2^2) F
    """
    return apply_transverse(apply_transverse(F, TRANSVERSE),
                            TRANSVERSE_CONJUGATE)


def wave_operator(F):
    """
        d_t3^2 F - sum_n d_xn^2 F
    """
    out = F.differentiate('t3').differentiate('t3')
    for coord in SPATIAL:
        out = out - F.differentiate(coord).differentiate(coord)
    return out


def klein_gordon_split(F):
    """
        Splits D D F into its 3+1 wave part and the transverse mass part

        :returns: (wave_part, mass_part)
    """
    typeChecker('klein_gordon_split', F, MultivectorField, 'field')
    return wave_operator(F), transverse_laplacian(F)


def pi_transform(A):
    """
        Pi A Pi^-1 with Pi = gamma_t1 gamma_t2 gamma_t3; flips the spatial
            generators and fixes the temporal ones
    """
    pi = PI_T if A.ring == RATIONAL else PI_T.to_double()
    pi_inv = reverse(pi)
    if isinstance(A, MultivectorField):
        return pi * A * pi_inv
    if isinstance(A, Multivector):
        return pi * A * pi_inv
    handler('pi_transform', '{!r} is not a multivector'.format(A))
    raise BadInput('pi_transform needs a Multivector or MultivectorField')


def lightcone_candidate(n):
    """
        (X+)^n as a field

        :param n: power, at least 1
        :raises DomainError: n < 1
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        handler('lightcone_candidate', '{} is not a positive power'.format(n))
        raise DomainError('lightcone candidates need n >= 1')
    base = coordinate_field(plus=True)
    out = base
    for _ in range(n - 1):
        out = out * base
    return out


def lightcone_residuals(n, points):
    """
        Max-abs of D (X+)^n at each of the given points

        :param n: candidate power
        :param points: iterable of CoordinateVector
        :returns: list of floats
    """
    residual = apply_D(lightcone_candidate(n))
    return [residual.evaluate(p.point).max_abs() for p in points]


def null_points(count, rng):
    """
        Random points with t.t = x.x, built from a random unit spatial and
            temporal direction with equal radius
    """
    points = []
    for _ in range(count):
        t = rng.normal(size=3)
        x = rng.normal(size=3)
        radius = float(rng.uniform(0.5, 2.0))
        t = t / float((t @ t) ** 0.5) * radius
        x = x / float((x @ x) ** 0.5) * radius
        points.append(CoordinateVector([float(v) for v in t],
                                       [float(v) for v in x]))
    return points


def grad(f):
    """
        Spatial gradient of a field: (d_x1 f, d_x2 f, d_x3 f)
    """
    return tuple(f.differentiate(c) for c in SPATIAL)


def div(V):
    """
        Spatial divergence of a 3-tuple of fields
    """
    return V[0].differentiate('x1') + V[1].differentiate('x2') + \
        V[2].differentiate('x3')


def curl(V):
    """
        Spatial curl of a 3-tuple of fields
    """
    return (V[2].differentiate('x2') - V[1].differentiate('x3'),
            V[0].differentiate('x3') - V[2].differentiate('x1'),
            V[1].differentiate('x1') - V[0].differentiate('x2'))


def dot(U, V):
    return U[0] * V[0] + U[1] * V[1] + U[2] * V[2]


def cross(U, V):
    return (U[1] * V[2] - U[2] * V[1],
            U[2] * V[0] - U[0] * V[2],
            U[0] * V[1] - U[1] * V[0])


def vsub(U, V):
    return tuple(a - b for a, b in zip(U, V))


def vadd(U, V):
    return tuple(a + b for a, b in zip(U, V))


def vscale(factor, V):
    """
        factor multiplied from the left into each entry
    """
    return tuple(factor * v for v in V)


def dt3(f):
    return f.differentiate('t3')


def random_field(rng, blades=4, terms=2, degree=3):
    """
        A random polynomial field with small integer coefficients
    """
    comps = {}
    for _ in range(blades):
        mask = int(rng.integers(0, 64))
        value = TrigPoly.zero()
        for _ in range(terms):
            exponents = [0] * 6
            for _ in range(int(rng.integers(0, degree + 1))):
                exponents[int(rng.integers(0, 6))] += 1
            value = value + TrigPoly({(tuple(exponents), '1', None):
                                      int(rng.integers(-3, 4))})
        comps[mask] = comps[mask] + value if mask in comps else value
    return MultivectorField(comps)


def calculus_checks(seed=0, draws=3, null_count=8):
    """
        Identities of the differential operators: D X = 6, D X+ = 0, the
            light-cone powers, D D = wave + mass, the transverse
            factorization and the Pi transform
    """
    rng = make_rng(seed)
    X = coordinate_field()
    checks = [
        measure('dirac.X', apply_D(X) - 6),
        measure('dirac.X_plus', apply_D(coordinate_field(plus=True))),
        measure('lightcone.n1', apply_D(lightcone_candidate(1))),
        measure('lightcone.n2', apply_D(lightcone_candidate(2)) - X * 2),
    ]
    residuals = lightcone_residuals(3, null_points(null_count, rng))
    checks.append(Check.info('lightcone.n3', residual=max(residuals),
                             detail='residual 2 X X+ at null points'))
    example = TrigPoly.variable('t3', 2) + TrigPoly.variable('x3', 2)
    wave, mass = klein_gordon_split(MultivectorField.scalar(example))
    checks.append(measure('klein_gordon.example', [wave, mass]))
    dd, factor = [], []
    for _ in range(draws):
        F = random_field(rng)
        wave, mass = klein_gordon_split(F)
        dd.append(apply_D(apply_D(F)) - wave - mass)
        plain = F.differentiate('t1').differentiate('t1') + \
            F.differentiate('t2').differentiate('t2')
        factor.append(transverse_laplacian(F) - plain)
    checks.append(measure('klein_gordon.split', dd))
    checks.append(measure('transverse_factorization', factor))
    flips = []
    for n, name in enumerate(TEMPORAL + SPATIAL):
        unit = Multivector.blade(1 << n)
        expected = unit if n < 3 else -unit
        flips.append(pi_transform(unit) - expected)
    checks.append(measure('pi_transform', flips))
    return checks
