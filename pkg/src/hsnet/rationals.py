"""Reading and writing exact rationals as reduced "p/q" strings.

All reports emitted by this package serialize numbers as reduced fraction
strings so that identical inputs produce byte-identical output.  Floats are
only allowed for utility families with irrational parameters, and those are
flagged explicitly by the caller.
"""

from __future__ import annotations

from fractions import Fraction


def format_rational(value: Fraction) -> str:
    """Render a Fraction as the reduced string "p/q" (denominator always shown)."""
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


def parse_rational(text) -> Fraction:
    """Parse "p/q", "p", or an int into a Fraction.

    Floats are rejected: exactness everywhere is the contract, so a caller
    holding a float must opt in explicitly via Fraction(float).
    """
    if isinstance(text, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if isinstance(text, float):
        raise ValueError("refusing to coerce a float silently; pass a 'p/q' string")
    if not isinstance(text, str):
        raise ValueError(f"cannot parse rational from {type(text).__name__}")
    s = text.strip()
    if "/" in s:
        num, _, den = s.partition("/")
        try:
            return Fraction(int(num), int(den))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"invalid rational {text!r}") from exc
    try:
        return Fraction(int(s))
    except ValueError as exc:
        raise ValueError(f"invalid rational {text!r}") from exc


def format_float(value: float) -> str:
    """17 significant digits, enough to round-trip an IEEE double."""
    return format(value, ".17g")
