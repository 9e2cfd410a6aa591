from decimal import Decimal
from fractions import Fraction


def to_fraction(value):
    """Exact rational from an int, Decimal, Fraction, float or numeric string"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f'not a number: {value!r}')
    if isinstance(value, (int, Decimal)):
        return Fraction(value)
    if isinstance(value, float):
        # repr keeps the decimal the user typed: 7.25 -> 29/4, 0.1 -> 1/10
        return Fraction(repr(value))
    text = str(value).strip()
    try:
        if text.endswith('%'):
            return Fraction(text[:-1].strip()) / 100
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f'not a number: {value!r}') from None


def format_rational(value, places=2):
    """Round half-up (away from zero on ties) at ``places`` decimals, exactly"""
    value = to_fraction(value)
    scaled = abs(value) * 10 ** places
    quotient, remainder = divmod(scaled.numerator, scaled.denominator)
    if 2 * remainder >= scaled.denominator:
        quotient += 1
    if value < 0:
        quotient = -quotient
    return Decimal(quotient).scaleb(-places)


def format_optional(value, places=2, missing='n/a'):
    if value is None:
        return missing
    return str(format_rational(value, places))
