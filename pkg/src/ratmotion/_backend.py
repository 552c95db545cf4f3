"""Exact scalar backend selection.

All exact arithmetic in the package runs on a single rational type chosen
once at import.  ``gmpy2.mpq`` (GMP) is used when available; otherwise the
pure-Python :class:`fractions.Fraction` is used.  Set the environment
variable ``RATMOTION_SCALAR=fraction`` to force the fallback.
"""
import os
from fractions import Fraction

BACKEND = "fraction"
Scalar = Fraction

if os.environ.get("RATMOTION_SCALAR", "").lower() not in ("fraction", "python"):
    try:
        from gmpy2 import mpq as _mpq
    except ImportError:  # pragma: no cover - depends on environment
        pass
    else:
        BACKEND = "gmpy2"
        Scalar = _mpq

_EXACT_TYPES = (int, Fraction, Scalar)


def exact(value):
    """Coerce ``value`` to the backend rational type.

    Accepts ints, rationals of either backend and strings such as ``"3/4"``.
    Floats are converted exactly (binary expansion), so pass strings when a
    decimal value is meant.
    """
    if isinstance(value, Scalar):
        return value
    if isinstance(value, str):
        return Scalar(Fraction(value.strip()))
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, (int, Fraction, float)):
        return Scalar(value)
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return Scalar(int(value.numerator), int(value.denominator))
    raise TypeError(f"cannot convert {type(value).__name__} to an exact scalar")


def is_exact(value):
    return isinstance(value, _EXACT_TYPES) and not isinstance(value, bool)


def to_fraction(value):
    """Convert a backend scalar to :class:`fractions.Fraction`."""
    return Fraction(int(value.numerator), int(value.denominator))


def fmt(value):
    """Render an exact scalar as ``"p/q"`` (or ``"p"`` when integral)."""
    value = exact(value)
    num, den = int(value.numerator), int(value.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


ZERO = Scalar(0)
ONE = Scalar(1)
