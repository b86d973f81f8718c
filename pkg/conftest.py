import numpy as np
import pytest
from hypothesis import strategies as st

from cl33.core.config import make_rng
from cl33.core.multivector import Multivector
from cl33.fields.trigpoly import LinearForm, TrigPoly

small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@st.composite
def multivectors(draw, max_terms=8, masks=None):
    """
        Random rational multivectors over a handful of blades
    """
    mask_strategy = st.sampled_from(masks) if masks else \
        st.integers(min_value=0, max_value=63)
    terms = draw(st.dictionaries(mask_strategy, small_fractions,
                                 max_size=max_terms))
    return Multivector(terms)


@st.composite
def trigpolys(draw, max_terms=3):
    """
        Random rational trig-polys: monomials times 1, cos or sin of a small
            integer phase
    """
    out = TrigPoly.zero()
    for _ in range(draw(st.integers(min_value=0, max_value=max_terms))):
        exponents = tuple(draw(st.lists(st.integers(0, 2), min_size=6,
                                        max_size=6)))
        kind = draw(st.sampled_from(('1', 'cos', 'sin')))
        phase = None
        if kind != '1':
            phase = LinearForm(draw(st.lists(st.integers(-2, 2), min_size=6,
                                             max_size=6)))
        value = draw(small_fractions)
        out = out + TrigPoly({(exponents, kind, phase): value})
    return out


rotor_angles = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False,
                         allow_infinity=False)
rapidities = st.floats(min_value=-1.5, max_value=1.5, allow_nan=False,
                       allow_infinity=False)


@pytest.fixture
def rng():
    return make_rng(1234)


@pytest.fixture
def points(rng):
    return rng.normal(size=(8, 6))


def polar_points(min_modulus, max_modulus, center=0j):
    """
        Complex points with min_modulus <= |z - center| <= max_modulus
    """
    return st.builds(lambda r, a: center + r * complex(np.cos(a), np.sin(a)),
                     st.floats(min_value=min_modulus, max_value=max_modulus),
                     st.floats(min_value=0.0, max_value=2 * np.pi))


@st.composite
def charge_layouts(draw, inner=0.9, outer=1.1, far=3.0, count=5):
    """
        count zeros and count poles, each inside |z| <= inner or outside
            |z| >= outer of the unit circle

        :returns: (zeros, poles)
    """
    side = st.one_of(polar_points(0.05, inner), polar_points(outer, far))
    points = draw(st.lists(side, min_size=2 * count, max_size=2 * count,
                           unique=True))
    return points[:count], points[count:]


unit_floats = st.floats(min_value=-1.0, max_value=1.0)


@st.composite
def transverse_waves(draw):
    """
        Random propagation direction and complex polarization normal to it

        :returns: (amplitude as (re, im) pairs, wave vector)
    """
    theta = draw(st.floats(min_value=0.0, max_value=np.pi))
    phi = draw(st.floats(min_value=0.0, max_value=2 * np.pi))
    k_hat = np.array([np.sin(theta) * np.cos(phi),
                      np.sin(theta) * np.sin(phi), np.cos(theta)])
    helper = np.array([1.0, 0.0, 0.0]) if abs(k_hat[0]) < 0.9 else \
        np.array([0.0, 1.0, 0.0])
    e1 = np.cross(k_hat, helper)
    e1 = e1 / np.linalg.norm(e1)
    e2 = np.cross(k_hat, e1)
    psi, chi = draw(st.floats(min_value=0.0, max_value=2 * np.pi)), \
        draw(st.floats(min_value=0.0, max_value=2 * np.pi))
    ellipticity = draw(unit_floats)
    re = np.cos(psi) * e1 + np.sin(psi) * e2
    im = ellipticity * (np.cos(chi) * e1 + np.sin(chi) * e2)
    k = draw(st.floats(min_value=0.5, max_value=3.0)) * k_hat
    amplitude = [(float(a), float(b)) for a, b in zip(re, im)]
    return amplitude, [float(v) for v in k]
