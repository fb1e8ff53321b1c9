from .timer import Timer
from .logger import get_logger, print_log
from .seed import set_random_seed
__all__ = ['Timer', 'get_logger', 'print_log', 'set_random_seed']
