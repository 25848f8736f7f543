"""Exact rational helpers.

Every bound in this package is an exact rational number, represented by
:class:`fractions.Fraction` (arbitrary-precision, always in lowest terms,
positive denominator).  This module adds the textual contract used by the
command-line front end: the canonical form is ``"p/q"`` in lowest terms with
``q > 0``, and integers are written ``"p/1"``.  Decimal strings are renderings
only and are never parsed back into values.
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction


def format_rational(value: Fraction) -> str:
    """Render ``value`` as ``"p/q"`` in lowest terms (integers as ``"p/1"``)."""
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or a bare integer ``"p"`` into an exact fraction."""
    return Fraction(text.strip())


def decimal_str(value: Fraction, significant_digits: int = 6) -> str:
    """Render ``value`` to the given number of significant decimal digits.

    >>> decimal_str(Fraction(11, 6))
    '1.83333'
    """
    with localcontext() as ctx:
        ctx.prec = significant_digits
        quotient = Decimal(value.numerator) / Decimal(value.denominator)
    return str(quotient)
