from .core import *
from .utils import *

__version__ = "0.1.0"
