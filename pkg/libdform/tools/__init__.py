from .configs import *
from .runner import *
