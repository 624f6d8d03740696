"""Derived observables: Bohm potential, interference phase shifts, bend force.

Spectral units throughout (``hbar^2/2M = 1``), so a momentum is a wavenumber
``k = sqrt(E)``.  Phase shifts come in three variants:

``paper_literal``
    ``dp = Q0 / sqrt(E)`` (no Taylor factor 1/2) and ``dphi = (pi/kappa) dp``;
    the minimal shift is ``hbar lambda kappa / 8``.
``corrected``
    first-order Taylor ``dp = Q0 / (2 sqrt(E))`` and ``dphi = (pi/kappa) dp / hbar``;
    the minimal shift is ``lambda kappa / 16``.
``exact``
    ``dp = sqrt(E) - sqrt(E - Q0)``, phase as in ``corrected``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .errors import DomainError
from .geometry import (
    SPECTRAL_UNITS,
    ModeIndex,
    PotentialProfile,
    UnitSystem,
    WaveguideGeometry,
    _check_xi,
    make_profile,
    sample_grid,
)
from .spectrum import zero_gap

Variant = Literal["paper_literal", "corrected", "exact"]
VARIANTS: tuple[Variant, ...] = ("paper_literal", "corrected", "exact")


@dataclass(frozen=True)
class BohmCoefficients:
    """Numerator ``a2 xi^2 + a1 xi + a3`` of the Bohm potential."""

    a1: float
    a2: float
    a3: float


@dataclass(frozen=True)
class PhaseShiftResult:
    delta_p: float
    delta_phi: float
    variant: Variant


def _check_variant(variant: str) -> Variant:
    if variant not in VARIANTS:
        raise DomainError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    return variant  # type: ignore[return-value]


def bohm_coefficients(geom: WaveguideGeometry, mode: ModeIndex) -> BohmCoefficients:
    kappa = geom.curvature
    if kappa == 0.0:
        raise DomainError("Bohm coefficients diverge for a straight guide")
    g2 = zero_gap(mode.l, mode.w) ** 2
    return BohmCoefficients(
        a1=-2.0 * g2 / kappa,
        a2=g2,
        a3=g2 / kappa**2 + geom.half_width**2,
    )


def bohm_potential(geom: WaveguideGeometry, mode: ModeIndex, xi: float) -> float:
    """Bohm potential ``Q(xi)`` of the closed-form mode (spectral units)."""
    xi = _check_xi(geom, xi)
    kappa = geom.curvature
    xi0 = geom.half_width
    if kappa == 0.0:
        # straight-guide limit of the polynomial form
        return zero_gap(mode.l, mode.w) ** 2 / (4.0 * xi0**2)
    c = bohm_coefficients(geom, mode)
    num = c.a2 * xi * xi + c.a1 * xi + c.a3
    return kappa**2 * num / (4.0 * xi0**2 * (1.0 - kappa * xi) ** 2)


def bohm_barrier(geom: WaveguideGeometry, mode: ModeIndex) -> float:
    """Barrier height ``Q0``: Bohm potential on the axis plus the z contribution."""
    g = zero_gap(mode.l, mode.w)
    return g * g / (4.0 * geom.half_width**2) + 0.25 * geom.curvature**2 + geom.z_energy(mode.n)


def bohm_profile(geom: WaveguideGeometry, mode: ModeIndex, samples: int) -> PotentialProfile:
    xs = sample_grid(geom, samples)
    return make_profile(geom, xs, [bohm_potential(geom, mode, x) for x in xs], "bohm")


def momentum_shift(energy: float, barrier: float, variant: Variant) -> float:
    """Momentum (wavenumber) lost crossing a barrier ``Q0``."""
    variant = _check_variant(variant)
    if not energy > 0.0:
        raise DomainError(f"energy must be positive, got {energy}")
    p = math.sqrt(energy)
    if variant == "exact":
        if not energy > barrier:
            raise DomainError(f"barrier {barrier} >= energy {energy}: no propagating comparison")
        # sqrt(E) - sqrt(E - Q0) without cancellation
        return barrier / (p + math.sqrt(energy - barrier))
    if variant == "paper_literal":
        return barrier / p
    return barrier / (2.0 * p)


def phase_shift(
    geom: WaveguideGeometry, delta_p: float, variant: Variant, hbar: float = 1.0
) -> float:
    """Phase accumulated over the half-turn of length ``pi R``.

    ``paper_literal`` multiplies by the path length only; the other variants
    also divide by ``hbar`` (unity when ``delta_p`` is already a wavenumber).
    """
    variant = _check_variant(variant)
    if delta_p < 0.0:
        raise DomainError("delta_p must be non-negative")
    if delta_p == 0.0:
        return 0.0
    path = math.pi * geom.bend_radius
    if variant == "paper_literal":
        return path * delta_p
    return path * delta_p / hbar


def min_phase_shift(
    wavelength: float, curvature: float, variant: Variant, hbar: float = 1.0
) -> float:
    """Irreducible shift from the ``kappa^2/4`` part of the barrier alone."""
    variant = _check_variant(variant)
    if not wavelength > 0.0:
        raise DomainError("wavelength must be positive")
    if curvature < 0.0:
        raise DomainError("curvature must be non-negative")
    if variant == "paper_literal":
        return hbar * wavelength * curvature / 8.0
    if variant == "corrected":
        return wavelength * curvature / 16.0
    if curvature == 0.0:
        return 0.0
    k = 2.0 * math.pi / wavelength
    q = 0.25 * curvature**2
    if not k * k > q:
        raise DomainError("wavelength too long: the curvature barrier exceeds the energy")
    # k - sqrt(k^2 - q) without cancellation
    dk = q / (k + math.sqrt(k * k - q))
    return math.pi / curvature * dk


def mode_phase_shift(
    geom: WaveguideGeometry, mode: ModeIndex, wavelength: float, variant: Variant, hbar: float = 1.0
) -> PhaseShiftResult:
    """Shift for a particle of de Broglie wavelength ``wavelength`` in ``mode``."""
    if not wavelength > 0.0:
        raise DomainError("wavelength must be positive")
    energy = (2.0 * math.pi / wavelength) ** 2
    # physical momentum shift hbar * dk; phase_shift divides hbar back out
    # except in the paper_literal variant
    dp = hbar * momentum_shift(energy, bohm_barrier(geom, mode), variant)
    return PhaseShiftResult(dp, phase_shift(geom, dp, variant, hbar), variant)


def anticentrifugal_force(geom: WaveguideGeometry, units: UnitSystem = SPECTRAL_UNITS) -> float:
    """``-(hbar^2/2M) dV_eff/dxi`` on the axis: ``kappa^3 / 2`` in spectral units."""
    return units.energy_scale * 0.5 * geom.curvature**3
