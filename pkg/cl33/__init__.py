__version__ = '1.0.0'

from .core import *
from .fields import *
from .derivations import *
from .manipulators import *
from .charges import *
from .waves import *
from .exporters import *
