"""
    Command-line front end: python -m cl33 <command> [flags]

    Exit codes: 0 every check passed, 1 a verification failed, 2 usage or
    input error.
"""
import argparse
import logging
import math
import sys

import numpy as np
from tqdm import tqdm

from .charges.contour import ContourSpec, argument_integral, \
    conjugate_charge, xi_integral
from .charges.qparser import parse_q
from .core.axioms import axiom_suite
from .core.blade import METRIC, MetricSignature
from .core.config import make_rng
from .core.constants import PSEUDO_I, PSEUDO_S, TRANSVERSE_I, generator
from .core.exceptions import BadInput, BadType, DomainError, \
    NonConvergence, NonResonant, ParityError, ParseError, RingMismatch, \
    Undersampled, logger
from .core.multivector import Multivector
from .core.report import Check, VerificationReport, measure, prefixed
from .core.ring import DOUBLE
from .derivations.maxwell import bracket_checks, check_field_equations, \
    check_pseudo_duality, derivation_checks, extract_fields
from .derivations.spec import parse_spec_file, primed_copy, random_spec, \
    solution_library
from .derivations.sta import bivector_field, sta_regression
from .exporters import ToCsv, ToTable
from .fields.calculus import CoordinateVector, calculus_checks
from .fields.field import MultivectorField
from .fields.trigpoly import LinearForm, TrigPoly
from .manipulators.chirality import chirality_of
from .manipulators.rotors import boost_closed_form, boost_coordinates, \
    boost_fields, conjugate_boost, conjugation_rotor, field_rapidity, \
    lorentz_boost, sandwich, spatial_rotation, spatial_rotation_closed_form, \
    transverse_rotation, transverse_rotation_closed_form
from .waves.packet import PacketSpec, boost_packet, resonant_packet, \
    simple_packet_nodes
from .waves.planewave import PlaneWaveSpec, boost_covariance, \
    boost_plane_wave, check_plane_wave, plane_wave_field

CORRUPT_SQUARES = (1, 1, 1, -1, -1, 1)
RANDOM_SPECS = 100
INPUT_ERRORS = (BadInput, BadType, DomainError, ParityError, ParseError,
                RingMismatch)
QUADRATURE_ERRORS = (NonConvergence, Undersampled, NonResonant)


def _direction(text):
    try:
        values = [float(v) for v in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError('expected three comma separated '
                                         'numbers')
    if len(values) != 3:
        raise argparse.ArgumentTypeError('expected three components')
    return values


def _complex(text):
    try:
        return complex(text.replace(' ', '').replace('i', 'j'))
    except ValueError:
        raise argparse.ArgumentTypeError('{!r} is not a complex number'
                                         .format(text))


def _global_flags(suppress):
    """
        Flags accepted both before and after the command name

        :param suppress: leave the namespace untouched unless the flag is given
        :returns: a parent parser for argparse
    """
    flags = argparse.ArgumentParser(add_help=False)

    def default(value):
        return argparse.SUPPRESS if suppress else value

    flags.add_argument('--seed', type=int, default=default(0),
                       help='seed for randomized checks')
    flags.add_argument('--json-out', type=str, default=default(None),
                       help='write the JSON report here and print a summary '
                       'table instead')
    flags.add_argument('--verbose', action='store_true',
                       default=default(False),
                       help='debug logging and progress bars')
    return flags


def arg_parse():
    """
        :returns: the argparse parser with one subparser per command
    """
    parser = argparse.ArgumentParser(
        prog='cl33', parents=[_global_flags(False)],
        description='Verification pipelines for the 3+3 geometric algebra: '
        'axioms, the Maxwell derivation, rotors, charges, plane waves and '
        'wave packets.')
    common = [_global_flags(True)]
    sub = parser.add_subparsers(dest='command', required=True)

    axioms = sub.add_parser('axioms', parents=common,
                            help='blade algebra invariants')
    axioms.add_argument('--corrupt-metric', action='store_true',
                        help=argparse.SUPPRESS)

    derive = sub.add_parser('derive-maxwell', parents=common,
                            help="Maxwell's equations from D V = 0")
    derive.add_argument('--spec-file', type=str, default=None,
                        help='odd-field spec as NAME[.part] = expr lines')

    rotors = sub.add_parser('rotors', parents=common,
                            help='rotations, boosts and conjugation')
    rotors.add_argument('--theta', type=float, default=math.pi / 3)
    rotors.add_argument('--alpha', type=float, default=0.3)
    rotors.add_argument('--b', type=_direction, default=[0.0, 0.0, 1.0],
                        help='unit boost direction, e.g. 0,0,1')

    charges = sub.add_parser('charges', parents=common,
                             help='contour charge counting')
    charges.add_argument('--q', type=str, required=True,
                         help='q(t), e.g. "(t-1-2i)*(t+0.5i)/(t-3)"')
    charges.add_argument('--center', type=_complex, default=0j)
    charges.add_argument('--radius', type=float, default=1.0)
    charges.add_argument('--samples', type=int, default=4096)

    planewave = sub.add_parser('planewave', parents=common,
                               help='plane-wave normal modes')
    planewave.add_argument('--alpha', type=float, default=0.3)

    packet = sub.add_parser('wavepacket', parents=common,
                            help='counter-chiral packets')
    packet.add_argument('--fg', type=float, default=None,
                        help='ground frequency; defaults to 1/(2 tau0)')
    packet.add_argument('--fN', type=float, default=None,
                        help='right-handed frequency; defaults to the '
                        'ladder rung')
    packet.add_argument('--N', type=int, default=1)
    packet.add_argument('--tau0', type=float, default=1.0)
    packet.add_argument('--samples', type=int, default=None)
    packet.add_argument('--alpha', type=float, default=0.3)
    packet.add_argument('--csv-out', type=str, default=None)
    packet.add_argument('--allow-detuned', action='store_true')
    return parser


def cmd_axioms(args):
    metric = MetricSignature(CORRUPT_SQUARES) if args.corrupt_metric \
        else METRIC
    report = VerificationReport('axioms', seed=args.seed)
    report.extend(axiom_suite(metric, seed=args.seed))
    report.extend(prefixed('calculus', calculus_checks(args.seed)))
    return report


def cmd_derive_maxwell(args):
    report = VerificationReport('derive-maxwell', seed=args.seed)
    if args.spec_file is not None:
        with open(args.spec_file, 'r') as fio:
            spec = parse_spec_file(fio.read())
        report.extend(prefixed('spec', derivation_checks(spec)))
        return report
    rng = make_rng(args.seed)
    specs = [random_spec(rng) for _ in range(RANDOM_SPECS)]
    identities = {}
    for spec in tqdm(specs, desc='random specs', disable=not args.verbose):
        for check in bracket_checks(spec, solution=False):
            if check.name not in identities or not check.passed:
                identities[check.name] = check
    report.extend(prefixed('random', list(identities.values())))
    library = solution_library()
    for name, spec in library.items():
        report.extend(prefixed(name, derivation_checks(spec)))
    primed = primed_copy(library['plane_wave'])
    f = extract_fields(primed)
    report.extend(prefixed('primed_plane_wave',
                           bracket_checks(primed) + check_pseudo_duality(f) +
                           check_field_equations(f)))
    x1, t3 = TrigPoly.variable('x1'), TrigPoly.variable('t3')
    zero = TrigPoly.zero()
    wave = TrigPoly.cos(LinearForm([0, 0, 1, -1, 0, 0]))
    potentials = {'scalar_gradient': (x1, (zero, zero, zero)),
                  'vector_shear': (zero, (TrigPoly.variable('x2'), zero,
                                          zero)),
                  'transverse_wave': (zero, (zero, zero, wave)),
                  'ramp': (x1 * t3, (zero, zero, zero))}
    for name, (a_t, a_s) in potentials.items():
        report.extend(prefixed('sta.' + name, sta_regression(a_t, a_s)))
    return report


def _rotor_checks(theta, alpha, b, rng):
    checks = []
    spatial = spatial_rotation(theta)
    transverse = transverse_rotation(theta)
    conj = conjugation_rotor()
    boost = lorentz_boost(alpha, b)
    boost_c = conjugate_boost(alpha, b)
    for rotor in (spatial, transverse, conj, boost, boost_c):
        checks.append(measure('unit.' + rotor.name, rotor.unit_residual()))

    P1, P2 = rng.normal(size=2)
    image = sandwich(spatial, Multivector({'s1': float(P1), 's2': float(P2)},
                                          DOUBLE))
    q1, q2 = spatial_rotation_closed_form(P1, P2, theta)
    checks.append(measure('spatial_rotation', [
        image.coefficient('s1') - q1, image.coefficient('s2') - q2,
        image.coefficient('s3')]))
    a1, a2, a3 = rng.normal(size=3)
    image = sandwich(transverse, Multivector(
        {'t1': float(a1), 't2': float(a2), 't3': float(a3)}, DOUBLE))
    c1, c2 = transverse_rotation_closed_form(a1, a2, theta)
    checks.append(measure('transverse_rotation', [
        image.coefficient('t1') - c1, image.coefficient('t2') - c2,
        image.coefficient('t3') - a3]))

    fixed = [sandwich(conj, generator(n)) - generator(n) for n in
             ('t1', 't3')]
    negated = [sandwich(conj, generator(n)) + generator(n) for n in
               ('t2', 's1', 's2', 's3')]
    checks.append(measure('conjugation.generators', fixed + negated))
    checks.append(measure('conjugation.i', sandwich(conj, TRANSVERSE_I) +
                          TRANSVERSE_I))
    checks.append(measure('conjugation.I', sandwich(conj, PSEUDO_I) +
                          PSEUDO_I))
    checks.append(measure('conjugation.S', sandwich(conj, PSEUDO_S) -
                          PSEUDO_S))
    checks.append(measure('conjugate_boost', boost_c.value -
                          lorentz_boost(-alpha, b).value))

    b_vec = np.asarray(b, dtype=float)
    helper = np.array([1.0, 0.0, 0.0]) if abs(b_vec[0]) < 0.9 else \
        np.array([0.0, 1.0, 0.0])
    E = np.cross(b_vec, helper)
    E = E / np.linalg.norm(E)
    B = np.cross(b_vec, E)
    perpendicular = Multivector({'s1': E[0], 's2': E[1], 's3': E[2]}, DOUBLE)
    checks.append(measure('boost.transverse_fixed', [
        sandwich(boost, generator('t1').to_double()) -
        generator('t1').to_double(),
        sandwich(boost, generator('t2').to_double()) -
        generator('t2').to_double(),
        sandwich(boost, perpendicular) - perpendicular]))

    point = CoordinateVector([float(v) for v in rng.normal(size=3)],
                             [float(v) for v in rng.normal(size=3)])
    image = boost_coordinates(boost, point)
    along = float(np.dot(b_vec, point.x))
    expected_t3 = math.cosh(alpha) * point.t[2] - math.sinh(alpha) * along
    expected_along = math.cosh(alpha) * along - math.sinh(alpha) * point.t[2]
    checks.append(measure('boost.coordinates', [
        image.t[2] - expected_t3,
        float(np.dot(b_vec, image.x)) - expected_along,
        image.t[0] - point.t[0], image.t[1] - point.t[1]]))

    F = bivector_field(
        [MultivectorField.scalar(TrigPoly.constant(float(v), DOUBLE))
         for v in E],
        [MultivectorField.scalar(TrigPoly.constant(float(v), DOUBLE))
         for v in B], DOUBLE)
    sandwiched, closed = boost_fields(boost, F, b)
    checks.append(measure('boost.fields', sandwiched - closed))
    rapidity = field_rapidity(boost, b)
    E_closed, _ = boost_closed_form(E, B, b, rapidity)
    checks.append(Check.info('boost.field_rapidity', detail={
        'rapidity': rapidity, 'E': [float(v) for v in E_closed]}))
    back = lorentz_boost(-alpha, b)
    checks.append(measure('boost.inverse', back.then(boost).value -
                          Multivector.scalar(1.0, DOUBLE)))

    products, scalars = [], []
    for _ in range(3):
        A, B_mv, C = (Multivector({int(m): float(v) for m, v in
                                   zip(rng.integers(0, 64, size=4),
                                       rng.normal(size=4))}, DOUBLE)
                      for _ in range(3))
        for rotor in (spatial, boost, boost_c):
            products.append(sandwich(rotor, A * B_mv * C) -
                            sandwich(rotor, A) * sandwich(rotor, B_mv) *
                            sandwich(rotor, C))
            scalars.append(sandwich(rotor, A).scalar_part() -
                           A.scalar_part())
    checks.append(measure('sandwich.product_rule', products))
    checks.append(measure('sandwich.scalar_part', scalars))
    return checks


def cmd_rotors(args):
    report = VerificationReport('rotors', seed=args.seed)
    report.extend(_rotor_checks(args.theta, args.alpha, args.b,
                                make_rng(args.seed)))
    return report


def cmd_charges(args):
    report = VerificationReport('charges')
    q = parse_q(args.q)
    contour = ContourSpec(args.center, args.radius, args.samples)
    charge = argument_integral(q, contour)
    conj = conjugate_charge(q, contour)
    xi = xi_integral(q, contour)
    report.add(Check.info('charge', detail=charge.get_dict()))
    report.add(measure('argument_principle',
                       abs(charge.value - (charge.N - charge.P)), 1e-6))
    report.add(Check.flag('conjugate_negation', conj.net == -charge.net,
                          detail=conj.get_dict()))
    report.add(measure('xi_closed_form', xi.residual, 1e-8,
                       detail=xi.get_dict()))
    if contour.samples // 2 >= 64:
        try:
            coarse = xi_integral(q, ContourSpec(
                contour.center, contour.radius, contour.samples // 2))
        except QUADRATURE_ERRORS as exc:
            logger.info('[charges] - coarse xi rerun skipped: %s', exc)
            report.add(Check.info('xi_convergence', detail=str(exc)))
        else:
            report.add(measure('xi_convergence',
                               abs(coarse.value - xi.value), 1e-8))
    report.add(Check.info('xi_versus_charge', detail={
        'xi': [xi.value.real, xi.value.imag], 'P_minus_N': charge.net,
        'agrees': abs(xi.value - charge.net) <= 1e-6}))
    return report


def cmd_planewave(args):
    report = VerificationReport('planewave', seed=args.seed)
    right = PlaneWaveSpec([1, 0, 0], [0, 0, 1], 'right')
    left = PlaneWaveSpec([1, 0, 0], [0, 0, 1], 'left')
    rng = make_rng(args.seed)
    points = rng.normal(size=(16, 6))
    F_right, F_left = plane_wave_field(right), plane_wave_field(left)
    report.extend(prefixed('right', check_plane_wave(
        F_right, right.k_hat, 'right', points)))
    report.extend(prefixed('left', check_plane_wave(
        F_left, left.k_hat, 'left', points)))
    conj = conjugation_rotor()
    conjugated = sandwich(conj, F_right)
    verdicts = {'right': chirality_of(F_right),
                'left': chirality_of(F_left),
                'conjugated': chirality_of(conjugated),
                'double_conjugated': chirality_of(sandwich(conj, conjugated))}
    report.add(Check.flag('chirality.right',
                          verdicts['right'].handedness == 'right',
                          verdicts['right'].get_dict()))
    report.add(Check.flag('chirality.left',
                          verdicts['left'].handedness == 'left',
                          verdicts['left'].get_dict()))
    report.add(Check.flag('chirality.conjugated',
                          verdicts['conjugated'].handedness == 'left' and
                          verdicts['conjugated'].frequency_sign ==
                          -verdicts['right'].frequency_sign,
                          verdicts['conjugated'].get_dict()))
    report.add(Check.flag('chirality.double_conjugated',
                          verdicts['double_conjugated'].handedness == 'right',
                          verdicts['double_conjugated'].get_dict()))
    report.extend(prefixed('conjugated', check_plane_wave(
        conjugated, right.k_hat, 'left', points)))
    for spec in (right, left):
        boosted = boost_plane_wave(spec, args.alpha)
        prefix = 'boosted_' + spec.handedness
        report.extend(prefixed(prefix, check_plane_wave(
            plane_wave_field(boosted), boosted.k_hat, spec.handedness,
            points)))
        report.add(prefixed(prefix, [boost_covariance(spec, args.alpha,
                                                      points)])[0])
    return report


def cmd_wavepacket(args):
    report = VerificationReport('wavepacket', seed=args.seed)
    f_g = 1 / (2 * args.tau0) if args.fg is None else args.fg
    spec = PacketSpec(f_g, args.N, args.tau0, f_N=args.fN,
                      allow_detuned=args.allow_detuned)
    sampled, checks = resonant_packet(spec, args.samples)
    report.extend(checks)
    nodes = simple_packet_nodes(spec.f_N, spec.f_g, spec.tau0)
    report.add(Check.info('simple_packet_nodes', detail=nodes.get_dict()))
    if spec.is_resonant and spec.N > 0:
        _, _, boost_checks = boost_packet(spec, args.alpha)
        report.extend(prefixed('boost', boost_checks))
    if args.csv_out is not None:
        ToCsv().to_csv(sampled, args.csv_out)
    return report


COMMANDS = {
    'axioms': cmd_axioms,
    'derive-maxwell': cmd_derive_maxwell,
    'rotors': cmd_rotors,
    'charges': cmd_charges,
    'planewave': cmd_planewave,
    'wavepacket': cmd_wavepacket,
}


def emit(report, args):
    if args.json_out is None:
        print(report.to_str())
        return
    report.to_file(args.json_out)
    print(ToTable().to_str(report))


def main(argv=None):
    """
        Runs one command

        :param argv: argument list (defaults to sys.argv[1:])
        :returns: exit code 0, 1 or 2
    """
    parser = arg_parse()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    logging.basicConfig(level=logging.DEBUG if args.verbose else
                        logging.WARNING, format='%(levelname)s %(message)s')
    try:
        report = COMMANDS[args.command](args)
    except ParseError as exc:
        print('error at byte {}: {}'.format(exc.offset, exc.msg),
              file=sys.stderr)
        return 2
    except INPUT_ERRORS + (OSError,) as exc:
        print('error: {}'.format(exc), file=sys.stderr)
        return 2
    except QUADRATURE_ERRORS as exc:
        logger.error('[%s] - %s', args.command, exc)
        report = VerificationReport(args.command, seed=args.seed)
        report.add(Check('quadrature', 'fail', detail=str(exc)))
    try:
        emit(report, args)
    except OSError as exc:
        print('error: {}'.format(exc), file=sys.stderr)
        return 2
    return report.exit_code


if __name__ == '__main__':
    sys.exit(main())
