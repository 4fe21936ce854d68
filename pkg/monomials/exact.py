"""
Exact scalars: conversions between Fraction, int, sympy Rational and the
"a/b" text form used on the command line and in reports.
"""
import numbers
import re
from fractions import Fraction

import sympy

from lab.exceptions import ParameterError

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text):
    """Parse "a/b" or an integer. Decimals are rejected."""
    match = _RATIONAL_RE.match(str(text))
    if not match:
        raise ParameterError(f"expected an exact rational 'a/b' or integer, got {text!r}")
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise ParameterError(f"zero denominator in {text!r}")
    return Fraction(int(numerator), int(denominator or 1))


def as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParameterError(f"not an exact rational: {value!r}")
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, str):
        return parse_rational(value)
    raise ParameterError(f"not an exact rational: {value!r}")


def as_rational(value):
    fraction = as_fraction(value)
    return sympy.Rational(fraction.numerator, fraction.denominator)


def rational_str(value):
    return str(as_fraction(value))


def is_rational_text(text):
    return bool(_RATIONAL_RE.match(text))
