"""Geometry of a circularly bent rectangular waveguide.

Coordinates follow the tube frame: ``s`` is arc length along the axis,
``xi`` the in-plane normal offset in ``[-xi0, +xi0]`` and ``z`` the height.
The physical radius of a point is ``R * (1 - kappa * xi)``, so ``xi = +xi0``
is the inner wall and ``xi = -xi0`` the outer one.

All energies are in spectral units, ``hbar**2 / (2 M) = 1``: an energy has
dimension 1/length**2 and a momentum is a wavenumber.  ``UnitSystem`` converts
at the boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Literal

import numpy as np

from .errors import DomainError

ProfileKind = Literal["effective", "bohm"]

# Relative slack when testing |xi| <= xi0, so wall points built as
# R*(1 - mu) round-trip without spurious rejections.
_WALL_SLACK = 1e-12


@dataclass(frozen=True)
class WaveguideGeometry:
    """Bend radius ``R``, square cross-section of edge ``a``.

    ``bend_radius`` may be ``math.inf`` for a straight guide (``kappa = 0``).
    """

    bend_radius: float
    width: float
    height: float
    curvature: float = field(init=False)
    half_width: float = field(init=False)

    def __post_init__(self) -> None:
        R, a, h = self.bend_radius, self.width, self.height
        for name, v in (("bend_radius", R), ("width", a), ("height", h)):
            if not (v > 0) or math.isnan(v):
                raise DomainError(f"{name} must be positive, got {v!r}")
        if not math.isfinite(a) or not math.isfinite(h):
            raise DomainError("width and height must be finite")
        if a >= 2.0 * R:
            raise DomainError(
                f"width {a} >= 2*radius {2.0 * R}: inner wall at or beyond the bend centre"
            )
        object.__setattr__(self, "curvature", 0.0 if math.isinf(R) else 1.0 / R)
        object.__setattr__(self, "half_width", 0.5 * a)

    @property
    def mu_inner(self) -> float:
        """Scaled radius ``1 - kappa*xi0`` of the inner wall."""
        return 1.0 - self.curvature * self.half_width

    @property
    def mu_outer(self) -> float:
        return 1.0 + self.curvature * self.half_width

    def z_energy(self, n: int) -> float:
        """Transverse z-confinement energy ``n^2 pi^2 / a^2``."""
        return (n * math.pi / self.height) ** 2


def make_geometry(R: float, a: float) -> WaveguideGeometry:
    """Build the geometry of a guide of edge ``a`` bent with radius ``R``."""
    return WaveguideGeometry(float(R), float(a), float(a))


@dataclass(frozen=True)
class ModeIndex:
    """Quantum numbers of a transverse mode at zero angular momentum.

    ``l`` indexes the lower J0 zero and ``w`` counts zero intervals across
    the width, so ``w`` is also the radial quantum number.
    """

    n: int
    l: int
    w: int
    m: int = 0

    def __post_init__(self) -> None:
        for name in ("n", "l", "w"):
            v = getattr(self, name)
            if not isinstance(v, (int, np.integer)) or v < 1:
                raise DomainError(f"{name} must be a positive integer, got {v!r}")
        if self.m != 0:
            raise DomainError("only m = 0 modes are supported")


@dataclass(frozen=True)
class UnitSystem:
    """Carries ``hbar`` and the particle mass; ``energy_scale = hbar^2 / 2M``."""

    hbar: float = 1.0
    mass: float = 0.5

    def __post_init__(self) -> None:
        if not (self.hbar > 0 and self.mass > 0):
            raise DomainError("hbar and mass must be positive")

    @property
    def energy_scale(self) -> float:
        return self.hbar**2 / (2.0 * self.mass)


SPECTRAL_UNITS = UnitSystem()


@dataclass(frozen=True)
class PotentialProfile:
    xi_samples: tuple[float, ...]
    values: tuple[float, ...]
    kind: ProfileKind
    half_width: float = math.inf

    def __post_init__(self) -> None:
        if self.kind not in ("effective", "bohm"):
            raise DomainError(f"unknown profile kind {self.kind!r}")
        if len(self.xi_samples) != len(self.values):
            raise DomainError("xi_samples and values differ in length")
        xs = self.xi_samples
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise DomainError("xi_samples must be strictly increasing")
        lim = self.half_width * (1.0 + _WALL_SLACK)
        if xs and (xs[0] < -lim or xs[-1] > lim):
            raise DomainError("xi_samples leave [-xi0, xi0]")
        if not all(math.isfinite(v) for v in self.values):
            raise DomainError("profile values must be finite")

    def __len__(self) -> int:
        return len(self.values)


def _check_xi(geom: WaveguideGeometry, xi: float) -> float:
    xi = float(xi)
    if not abs(xi) <= geom.half_width * (1.0 + _WALL_SLACK):
        raise DomainError(f"xi={xi} outside [-{geom.half_width}, {geom.half_width}]")
    return xi


def lame_coefficients(geom: WaveguideGeometry, xi: float) -> tuple[float, float, float]:
    """Scale factors ``(h_xi, h_z, h_s)`` of the line element."""
    xi = _check_xi(geom, xi)
    return 1.0, 1.0, 1.0 - geom.curvature * xi


def to_mu(geom: WaveguideGeometry, xi: float) -> float:
    xi = _check_xi(geom, xi)
    return 1.0 - geom.curvature * xi


def from_mu(geom: WaveguideGeometry, mu: float) -> float:
    """Inverse of :func:`to_mu`; undefined for a straight guide."""
    if geom.curvature == 0.0:
        raise DomainError("mu is degenerate for a straight guide")
    return (1.0 - mu) / geom.curvature


def curvature_potential(geom: WaveguideGeometry, xi: float) -> float:
    """Attractive bend term ``-kappa^2 / (4 (1 - kappa xi)^2)``."""
    mu = to_mu(geom, xi)
    return -0.25 * (geom.curvature / mu) ** 2


def effective_potential(geom: WaveguideGeometry, n: int, xi: float) -> float:
    """Potential of the m = 0 radial equation, spectral units."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return geom.z_energy(n) + curvature_potential(geom, xi)


def sample_grid(geom: WaveguideGeometry, samples: int) -> np.ndarray:
    """``samples`` equispaced points spanning the closed width."""
    if samples < 1:
        raise DomainError("samples must be >= 1")
    if samples == 1:
        return np.zeros(1)
    return np.linspace(-geom.half_width, geom.half_width, samples)


def make_profile(
    geom: WaveguideGeometry, xs: Iterable[float], values: Iterable[float], kind: ProfileKind
) -> PotentialProfile:
    return PotentialProfile(
        tuple(float(x) for x in xs), tuple(float(v) for v in values), kind, geom.half_width
    )


def effective_profile(geom: WaveguideGeometry, n: int, samples: int) -> PotentialProfile:
    xs = sample_grid(geom, samples)
    return make_profile(geom, xs, [effective_potential(geom, n, x) for x in xs], "effective")
