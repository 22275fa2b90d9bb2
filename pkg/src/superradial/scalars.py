"""Scalars, Z/2 parities, and Koszul signs.

All coefficients in this package are `fractions.Fraction` values (arbitrary
precision, automatically reduced, positive denominator), aliased as `Scalar`.
Parities are plain ints 0 (even) and 1 (odd); addition of parities is XOR.
The Koszul sign is the (-1)-factor picked up when two homogeneous objects
swap past each other.
"""

from __future__ import annotations

from fractions import Fraction

Scalar = Fraction
Parity = int

EVEN: Parity = 0
ODD: Parity = 1

ZERO = Fraction(0)
ONE = Fraction(1)


def parity_sum(*parities: Parity) -> Parity:
    """Total parity of a juxtaposition of homogeneous objects."""
    total = 0
    for p in parities:
        total ^= p
    return total


def koszul_sign(left: Parity, right: Parity) -> Scalar:
    """Sign (-1)^{|left| |right|} for moving `left` past `right`."""
    return -ONE if (left & right) else ONE


def format_scalar(c: Scalar) -> str:
    """Render a scalar as "p/q", or just "p" when the denominator is 1."""
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def parse_scalar(text: str) -> Scalar:
    """Parse "p" or "p/q" (q > 0 after reduction is automatic)."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad scalar literal {text!r}") from exc
