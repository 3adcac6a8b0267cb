"""Toeplitz quantization, Berezin transform and symbol utilities."""

from .berezin import berezin, berezin_grid, berezin_with_tail
from .quadrature import radial_scheme
from .symbols import SYMBOLS, parse_symbol, symbol_reflect
from .toeplitz import toeplitz, toeplitz_quadrature
