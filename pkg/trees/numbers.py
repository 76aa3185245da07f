"""
Locale-free number parsing and formatting.

Integer literals stay ``int``; literals with a decimal point become
``Decimal`` so that sums, differences and comparisons stay exact.
"""

import operator
import re
from decimal import Decimal
from fractions import Fraction
from numbers import Real

import numpy as np

_INTEGER = re.compile(r'[+-]?\d+\Z')
_DECIMAL = re.compile(r'[+-]?(\d+\.\d*|\.\d+)\Z')


def parse_number(token: str) -> int | Decimal:
    """Parse a decimal literal; raise ValueError on anything else."""
    if _INTEGER.match(token):
        return int(token)
    if _DECIMAL.match(token):
        return Decimal(token)
    raise ValueError(f'not a decimal number: {token!r}')


def format_number(value: Real) -> str:
    """Render a number without exponent or locale grouping."""
    if isinstance(value, bool):
        raise TypeError('booleans are not numbers here')
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Decimal):
        return format(value, 'f')
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return format(Decimal(value.numerator) / Decimal(value.denominator), 'f')
    value = float(value)
    if value.is_integer():
        return str(int(value))
    return np.format_float_positional(value, trim='-')


def seeded_rng(seed: int) -> np.random.Generator:
    """Generator for any integer seed; negative seeds wrap modulo 2**64."""
    return np.random.default_rng(operator.index(seed) % 2**64)
