"""Exact rational parsing/printing used by the CLI and table formats.

JSON carries rationals as integers or strings "p/q"; floats are rejected
everywhere so no law check ever sees rounding noise.
"""

from __future__ import annotations

import re
from fractions import Fraction

_RAT_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def parse_rational(value) -> Fraction:
    """int or "p/q" string -> Fraction.  Anything else (floats included) raises."""
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        s = value.strip()
        if _RAT_RE.match(s):
            return Fraction(s)
        raise ValueError(f"not a rational: {value!r} (use an integer or 'p/q')")
    raise ValueError(f"not a rational: {value!r} (floats are not accepted)")


def rat_str(x: Fraction) -> str:
    """Canonical text form: lowest terms, no denominator when integral."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
