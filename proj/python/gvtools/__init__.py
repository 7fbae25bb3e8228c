"""Exact Gopakumar-Vafa transforms.

Whole-file functions take and return text in the ``gv-table v1`` format.
Value-level functions use :class:`fractions.Fraction` for every coefficient.
"""

from fractions import Fraction

from . import _core
from ._core import (
    ConfigError,
    GVError,
    NotSuperRigidShape,
    ParseError,
    StrictIntegrality,
    ValidityExhausted,
    bps_from_gw,
    canonicalize,
    extract_e,
    g_series,
    gw_from_bps,
    series_from_e,
)

__all__ = [
    "ConfigError",
    "GVError",
    "NotSuperRigidShape",
    "ParseError",
    "StrictIntegrality",
    "ValidityExhausted",
    "bps_from_gw",
    "canonicalize",
    "extract_e",
    "fano_bps_from_gw",
    "fano_gw_from_bps",
    "g_series",
    "gw_from_bps",
    "local_bps",
    "series_from_e",
    "sin_kernel",
]


def _fractions(d):
    return {k: Fraction(v) for k, v in d.items()}


def _strings(d):
    return {int(k): str(Fraction(v)) for k, v in d.items()}


def sin_kernel(k, g, order):
    """Coefficients {exponent: Fraction} of (2 sin(kt/2))^(2g-2) through t^order."""
    return _fractions(_core.sin_kernel(k, g, order))


def local_bps(h, d_max, t_order):
    """BPS invariants of a genus-h curve.

    Returns ``(entries, windows, cutoffs, integral)`` where ``entries`` maps
    ``(d, g)`` to a nonzero Fraction, ``windows`` maps each degree to its
    highest determined genus and ``cutoffs`` to the first genus above every
    nonzero entry.
    """
    entries, windows, cutoffs, integral = _core.local_bps(h, d_max, t_order)
    return _fractions(entries), windows, cutoffs, integral


def fano_gw_from_bps(c1, bps, t_order):
    """Returns ``({g: Fraction}, window)`` for the GW side of a Fano class."""
    gw, window = _core.fano_gw_from_bps(c1, _strings(bps), t_order)
    return _fractions(gw), window


def fano_bps_from_gw(c1, gw, window):
    """Inverse of :func:`fano_gw_from_bps`; ``gw`` maps genus to coefficient."""
    return _fractions(_core.fano_bps_from_gw(c1, _strings(gw), window))
