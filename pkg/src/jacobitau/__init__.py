"""Exact zero-location checks for polynomials built from Jacobi derivative towers at x = 1."""

from .interlace import InterlaceVerdict, hb_check, hb_compose, interlace_check
from .jacobi import JacobiParams, f_poly, g_poly, phi, phi_full, verify_identity
from .poly import RatPoly
from .realroots import RootVerdict, all_negative_simple, isolate, zr
from .stability import StabilityVerdict, routh_hurwitz, stability_of_fg, stability_of_theorem4

__version__ = "0.1.0"

__all__ = [
    "InterlaceVerdict",
    "JacobiParams",
    "RatPoly",
    "RootVerdict",
    "StabilityVerdict",
    "all_negative_simple",
    "f_poly",
    "g_poly",
    "hb_check",
    "hb_compose",
    "interlace_check",
    "isolate",
    "phi",
    "phi_full",
    "routh_hurwitz",
    "stability_of_fg",
    "stability_of_theorem4",
    "verify_identity",
    "zr",
]
