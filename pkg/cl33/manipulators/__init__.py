from .rotors import Rotor, rotor_exp, sandwich, spatial_rotation, \
    transverse_rotation, conjugation_rotor, lorentz_boost, conjugate_boost, \
    boost_fields, boost_closed_form, boost_coordinates
from .chirality import ChiralityVerdict, chirality_of, read_bivector_fields
