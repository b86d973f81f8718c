import os

import numpy as np

from .. import __version__
from .exceptions import handler

DEFAULT_TOLERANCE = 1e-12
TOLERANCE_ENV = 'CL33_TOLERANCE'
REPORT_VERSION = 1
ENGINE_VERSION = __version__


def get_tolerance():
    """
        Returns the numeric tolerance for double-ring comparisons, honouring
            the CL33_TOLERANCE environment variable

        :returns: a positive float
    """
    raw = os.environ.get(TOLERANCE_ENV)
    if raw is None or raw.strip() == '':
        return DEFAULT_TOLERANCE
    try:
        value = float(raw)
    except ValueError:
        handler('config', '{}={!r} is not a number, using {}'.format(
            TOLERANCE_ENV, raw, DEFAULT_TOLERANCE))
        return DEFAULT_TOLERANCE
    if not 0 < value < float('inf'):
        handler('config', '{}={!r} must be positive, using {}'.format(
            TOLERANCE_ENV, raw, DEFAULT_TOLERANCE))
        return DEFAULT_TOLERANCE
    return value


def make_rng(seed):
    """
        Builds the named deterministic generator used for every randomized
            suite

        :param seed: integer seed (64-bit range)
        :returns: numpy Generator over PCG64
    """
    return np.random.Generator(np.random.PCG64(seed))
