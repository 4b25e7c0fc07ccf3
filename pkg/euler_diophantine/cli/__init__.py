import sys

from .parser import parse_equation, parse_vector
from .report import PowerReport, SolveReport

# Closed-form families routinely exceed the default int <-> str digit limit.
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)

__all__ = ["PowerReport", "SolveReport", "parse_equation", "parse_vector"]
