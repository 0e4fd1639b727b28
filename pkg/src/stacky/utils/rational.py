from fractions import Fraction
from typing import Any, Optional
import re

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")

def is_rational(x: Optional[Any]) -> bool:
    """
    Whether x is a rational written as "p/q" or "p".
    Floats are not accepted: every coordinate must be exact.
    """
    if isinstance(x, bool) or x is None:
        return False
    if isinstance(x, (int, Fraction)):
        return True
    if not isinstance(x, str):
        return False
    match = _RATIONAL.match(x)
    return match is not None and int(match.group(2) or 1) != 0

def parse_rational(x: Any) -> Fraction:
    """
    Parses "p/q", "p", an int or a Fraction into a Fraction.

    Raises:
        ValueError: x is a float, malformed, or has a zero denominator.
    """
    if not is_rational(x):
        raise ValueError(f"{x!r} is not an exact rational of the form 'p/q'")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    match = _RATIONAL.match(x)
    return Fraction(int(match.group(1)), int(match.group(2) or 1))

def format_rational(x: Fraction) -> str:
    """Canonical text form: always "p/q" with q > 0, lowest terms."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"

def nearest_rational(x: Fraction, denom_bound: int) -> Fraction:
    """
    Closest rational to x whose denominator is at most denom_bound.
    The search walks the Stern-Brocot tree through continued fractions.
    """
    return Fraction(x).limit_denominator(denom_bound)

def decimal(x: Fraction, digits: int = 12) -> str:
    return f"{float(x):.{digits}f}"
