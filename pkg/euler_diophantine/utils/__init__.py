from .config import *
from .types import *
