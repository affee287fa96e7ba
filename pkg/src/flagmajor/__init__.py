"""Exact toolkit for the flag-major index on the wreath products C_m wr S_n."""

from .canonical import CanonicalWord, decompose, flag_major, recompose
from .errors import EnumerationLimitError
from .group import (
    ColoredLetter,
    ColoredPermutation,
    compose,
    enumerate_group,
    flag_coxeter_element,
    generator,
    identity,
    inverse,
    parse_window,
)
from .qseries import MultiPoly, TruncatedSeries, q_factorial, q_int, q_multinomial, series_div, series_mul
from .stats import distribution, flag_major_formula, length, letter_less, log_sum, major_index, phi

__version__ = "0.1.0"
