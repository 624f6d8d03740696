"""Bound transverse modes of a quantum particle in a circularly bent waveguide."""

from .errors import BentGuideError, ConvergenceError, DomainError, NumericalError
from .geometry import (
    ModeIndex,
    PotentialProfile,
    UnitSystem,
    WaveguideGeometry,
    effective_potential,
    lame_coefficients,
    make_geometry,
    to_mu,
)

__version__ = "0.1.0"

__all__ = [
    "BentGuideError",
    "ConvergenceError",
    "DomainError",
    "NumericalError",
    "ModeIndex",
    "PotentialProfile",
    "UnitSystem",
    "WaveguideGeometry",
    "effective_potential",
    "lame_coefficients",
    "make_geometry",
    "to_mu",
]
