"""Exact rational helpers.

All census statistics are fractions.Fraction values (arbitrary precision,
always in lowest terms).  This module adds the "p/q" string convention used
in template files and reports.
"""

from fractions import Fraction

Rational = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" into an exact Fraction.

    Only integer numerators and denominators are accepted; floating point
    notation is rejected so template files stay exact.
    """
    s = text.strip()
    if "/" in s:
        num, _, den = s.partition("/")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def format_rational(q: Fraction) -> str:
    """Render a Fraction as "p/q", or "p" when the denominator is 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
