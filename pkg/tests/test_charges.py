import cmath
import math

import pytest
from hypothesis import given, settings, strategies as st

from cl33.charges import ContourSpec, RationalFunctionSpec, \
    argument_integral, conjugate_charge, parse_q, xi_closed_form, \
    xi_integral
from cl33.core.exceptions import BadType, DomainError, NonConvergence, \
    ParseError, Undersampled

from conftest import charge_layouts, polar_points


def test_parse_q_reads_factors():
    q = parse_q('(t-1-2i)*(t+0.5i)/(t-3)')
    assert q.zeros == [1 + 2j, -0.5j]
    assert q.poles == [3 + 0j]
    assert q.leading == 1


def test_parse_q_leading_coefficient():
    q = parse_q('2*(t - i)/4')
    assert q.zeros == [1j]
    assert q.leading == pytest.approx(0.5)
    assert complex(q.evaluate(3 + 1j)) == pytest.approx(1.5)


@pytest.mark.parametrize('text,offset', [
    ('(t-1)*(t-1)', 6),
    ('(t-1)/(t-1)', 6),
    ('(t-1', 4),
    ('(x-1)', 1),
    ('0*(t-1)', 0),
    ('', 0),
    ('(t-1))', 5),
    ('(t-2*j)', 5),
])
def test_parse_q_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as exc:
        parse_q(text)
    assert exc.value.offset == offset


def test_rational_function_needs_simple_points():
    with pytest.raises(DomainError):
        RationalFunctionSpec([1, 1])
    with pytest.raises(DomainError):
        RationalFunctionSpec([1], [1])
    with pytest.raises(DomainError):
        RationalFunctionSpec([1], leading=0)


def test_contour_spec_validation():
    with pytest.raises(DomainError):
        ContourSpec(radius=0.0)
    with pytest.raises(DomainError):
        ContourSpec(samples=10)
    with pytest.raises(BadType):
        ContourSpec(samples=100.0)


def test_single_zero_counts_negative_charge():
    report = argument_integral(parse_q('(t)'), ContourSpec())
    assert report.N == 1 and report.P == 0
    assert report.net == -1
    assert report.winding == 1
    assert report.residual < 1e-9


def test_counts_only_points_inside():
    q = parse_q('(t-1-2i)*(t+0.5i)/(t-3)')
    report = argument_integral(q, ContourSpec(0j, 2.0))
    assert (report.P, report.N) == (0, 1)
    wide = argument_integral(q, ContourSpec(0j, 4.0))
    assert (wide.P, wide.N) == (1, 2)
    assert wide.winding == wide.N - wide.P


def test_clockwise_orientation_negates_value():
    q = parse_q('(t-0.2)/(t+0.3i)*(t-0.5)')
    ccw = argument_integral(q, ContourSpec())
    cw = argument_integral(q, ContourSpec(), orientation=-1)
    assert cw.value == pytest.approx(-ccw.value)


def test_conjugate_charge_negates_net():
    q = parse_q('(t-0.5i)*(t+0.1)/(t-0.3-0.3i)')
    contour = ContourSpec(0.1j, 1.0)
    direct = argument_integral(q, contour)
    conjugated = conjugate_charge(q, contour)
    assert conjugated.net == -direct.net
    assert conjugated.orientation == -1
    assert conjugated.winding == -direct.winding


def test_contour_through_a_zero_is_rejected():
    with pytest.raises(DomainError):
        argument_integral(parse_q('(t-1)'), ContourSpec())
    with pytest.raises(DomainError):
        xi_integral(parse_q('(t-1)'), ContourSpec())


def test_coarse_contour_does_not_converge():
    q = RationalFunctionSpec(poles=[1.05])
    with pytest.raises(NonConvergence):
        argument_integral(q, ContourSpec(samples=64))


def test_xi_integral_of_identity():
    xi = xi_integral(parse_q('(t)'), ContourSpec())
    assert xi.closed_form == pytest.approx(-1)
    assert xi.value == pytest.approx(-1, abs=1e-8)
    assert xi.winding == 1


def test_xi_integral_zero_and_pole():
    q = parse_q('(t-0.2)/(t+0.3i)')
    contour = ContourSpec()
    assert xi_closed_form(q, contour) == pytest.approx(0.2 + 0.3j)
    xi = xi_integral(q, contour)
    assert xi.residual < 1e-8
    assert xi.winding == 0


def test_xi_integral_off_center():
    q = parse_q('(t-1-1i)*(t-2)')
    xi = xi_integral(q, ContourSpec(1 + 1j, 0.5, 8192))
    assert xi.closed_form == pytest.approx(-(1.5 + 1j - (1 + 1j)))
    assert xi.residual < 1e-8


def test_xi_integral_detects_undersampling():
    # inside the circle, between the chord and the arc of the first step
    q = RationalFunctionSpec(poles=[cmath.rect(0.9995, math.pi / 64)])
    with pytest.raises(Undersampled):
        xi_integral(q, ContourSpec(samples=64))


def test_xi_integral_tracks_a_close_outside_pole():
    q = RationalFunctionSpec(poles=[1.001])
    xi = xi_integral(q, ContourSpec(samples=64))
    assert xi.winding == 0
    assert xi.closed_form == 0


@settings(max_examples=30, deadline=None)
@given(charge_layouts())
def test_charge_is_poles_minus_zeros(layout):
    zeros, poles = layout
    report = argument_integral(RationalFunctionSpec(zeros, poles),
                               ContourSpec())
    P = sum(1 for p in poles if abs(p) < 1)
    N = sum(1 for z in zeros if abs(z) < 1)
    assert (report.P, report.N) == (P, N)
    charge = -report.value
    assert abs(charge - round(charge.real)) < 1e-6
    assert round(charge.real) == report.net == P - N


@settings(max_examples=30, deadline=None)
@given(st.lists(polar_points(0.05, 0.5), min_size=1, max_size=4,
                unique=True),
       st.lists(polar_points(2.5, 3.0), min_size=0, max_size=4,
                unique=True),
       st.booleans(), polar_points(0.0, 0.3),
       st.floats(min_value=0.9, max_value=1.5))
def test_charge_survives_contour_deformation(inner, outer, inner_are_poles,
                                             center, radius):
    if inner_are_poles:
        q = RationalFunctionSpec(outer, inner)
    else:
        q = RationalFunctionSpec(inner, outer)
    circle = argument_integral(q, ContourSpec())
    moved = argument_integral(q, ContourSpec(center, radius))
    assert moved.winding == circle.winding
    assert moved.net == circle.net
    assert abs(circle.net) == len(inner)
