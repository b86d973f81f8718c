from .blade import GENERATORS
from .multivector import Multivector, inverse

# blade masks, bit n set when generator n (t1, t2, t3, s1, s2, s3) is present
MASK_I_T = 0b000011
MASK_I_S = 0b111100
MASK_S = 0b111111
MASK_PHI_S = 0b111000
MASK_PHI_T = 0b000111
COEFFICIENT_MASKS = (0, MASK_I_T, MASK_I_S, MASK_S)
COEFFICIENT_PARTS = ('1', 'i', 'I', 'S')


def generator(name):
    """
        :param name: one of t1, t2, t3, s1, s2, s3
        :returns: the rational unit 1-vector for that generator
    """
    return Multivector.blade(name)


def spatial_generators():
    return tuple(generator(name) for name in GENERATORS[3:])


def temporal_generators():
    return tuple(generator(name) for name in GENERATORS[:3])


TRANSVERSE_I = Multivector.blade('t1t2')
PSEUDO_I = Multivector.blade('t3s1s2s3')
PSEUDO_S = Multivector.blade('t1t2t3s1s2s3')
PHI_S = Multivector.blade('s1s2s3')
PHI_T = Multivector.blade('t1t2t3')
PI_T = Multivector.blade('t1t2t3')

NAMED_CONSTANTS = {
    'i': TRANSVERSE_I,
    'I': PSEUDO_I,
    'S': PSEUDO_S,
    'phi_s': PHI_S,
    'phi_t': PHI_T,
    'Pi': PI_T,
}

COEFFICIENT_UNITS = {'1': Multivector.scalar(1), 'i': TRANSVERSE_I,
                     'I': PSEUDO_I, 'S': PSEUDO_S}

# basis prefixes of the general multivector; each slot holds a value of the
# coefficient algebra span{1, i, I, S}, multiplied from the right
SLOT_PREFIXES = (
    ('K1', 's1'), ('K2', 's2'), ('K3', 's3'), ('U', 't3'), ('V', 't1'),
    ('W1', 't1s1t3'), ('W2', 't1s2t3'), ('W3', 't1s3t3'),
    ('scalar', ''), ('space_time1', 's1t3'), ('space_time2', 's2t3'),
    ('space_time3', 's3t3'), ('transverse_time', 't1t3'),
    ('transverse_space1', 't1s1'), ('transverse_space2', 't1s2'),
    ('transverse_space3', 't1s3'),
)


def coefficient_algebra(A):
    """
        Projection of A onto span{1, i, I, S}
    """
    return Multivector._raw({m: v for m, v in A.terms.items()
                             if m in COEFFICIENT_MASKS}, A.ring)


def slots(A):
    """
        Splits a multivector into its sixteen slots, A = sum prefix * slot

        :returns: dict slot name -> coefficient-algebra Multivector
    """
    out = {}
    for name, text in SLOT_PREFIXES:
        prefix = Multivector.blade(text) if text else Multivector.scalar(1)
        if A.ring != prefix.ring:
            prefix = prefix.to_double()
        out[name] = coefficient_algebra(inverse(prefix) * A)
    return out


def from_slots(values):
    """
        Rebuilds a multivector from a (partial) slot dict
    """
    prefixes = dict(SLOT_PREFIXES)
    out = None
    for name, value in values.items():
        text = prefixes[name]
        prefix = Multivector.blade(text) if text else Multivector.scalar(1)
        if value.ring != prefix.ring:
            prefix = prefix.to_double()
        out = prefix * value if out is None else out + prefix * value
    return out if out is not None else Multivector.scalar(0)
