from .version import __version__

# Utilities
from .util import *
from .params import *
from .quadrature import *

# Reflection and modes
from .reflection import *
from .plasmon import *
from .eddy import *
from .lifshitz import *

# Assembly
from .decompose import *
from .demos import *
from .checks import *
