from .trigpoly import LinearForm, TrigPoly
from .field import MultivectorField, coefficient_field, coefficient_parts, \
    complex_part, pseudo_part
from .calculus import CoordinateVector, apply_D, apply_transverse, \
    coordinate_field, klein_gordon_split, lightcone_candidate, \
    lightcone_residuals, pi_transform, transverse_laplacian, wave_operator
from .parser import parse_trigpoly
