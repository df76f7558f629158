"""Exact rationals.

The standard-library ``Fraction`` already provides reduced arbitrary
precision rationals (gcd(|p|, q) = 1, q > 0), so it is used directly.  Only
strict text handling is added here: the accepted format is ``p`` or ``p/q``
with integer parts, never floating point.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse 'p' or 'p/q' into an exact rational."""
    m = _RATIONAL_RE.match(text.strip())
    if not m:
        raise ParseError(f"not a rational of the form p or p/q: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def render_rational(q: Fraction) -> str:
    return str(q)
