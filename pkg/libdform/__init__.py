from .gasket import *
from .energy import *
from .forms import *
from .paths import *
from .expr import *
from .utils import *
from .version import __version__
