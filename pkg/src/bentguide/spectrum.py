"""Transverse modes at m = 0: closed-form and exact spectra, wavefunctions, norms.

With ``mu = 1 - kappa xi`` and ``eps^2 = (E - n^2 pi^2/a^2) / kappa^2`` the
radial equation becomes Bessel's equation of order zero in ``eps mu``, so

    Phi_0(xi) = sqrt(eps mu) [c_j J0(eps mu) + c_y Y0(eps mu)].

Two quantisations are offered:

``paper_closed_form``
    Put J0 zeros ``zeta_l`` and ``zeta_{l+w}`` on the two walls and take the
    energy from their difference, ``(zeta_{l+w} - zeta_l)^2 / (4 xi0^2)``.
    ``c_y = 0``.  Only approximately consistent with a given geometry.
``exact_cross_product``
    Solve the two-wall Dirichlet problem with the full J0/Y0 pair.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace
from typing import Literal

import numpy as np
from scipy import integrate

from . import bessel
from .errors import DomainError, NumericalError
from .geometry import ModeIndex, WaveguideGeometry, _check_xi, to_mu

Method = Literal["paper_closed_form", "exact_cross_product"]
METHODS: tuple[Method, ...] = ("paper_closed_form", "exact_cross_product")

QUAD_RTOL = 1e-10


@dataclass(frozen=True)
class RadialSolution:
    epsilon: float
    energy: float
    coeff_j: float
    coeff_y: float
    mode: ModeIndex
    method: Method
    norm_C: float | None = None


@dataclass(frozen=True)
class SpectrumResult:
    geometry: WaveguideGeometry
    modes: tuple[RadialSolution, ...]
    n_max: int
    radial_count: int

    @property
    def energies(self) -> list[float]:
        return [m.energy for m in self.modes]


def _check_mode(mode: ModeIndex) -> None:
    if mode.w < 1:
        raise DomainError("w must be >= 1")


def zero_gap(l: int, w: int) -> float:
    """``zeta_{l+w} - zeta_l``."""
    if w < 1:
        raise DomainError(f"w must be >= 1, got {w}")
    return bessel.j0_zero(l + w) - bessel.j0_zero(l)


def energy_closed_form(geom: WaveguideGeometry, mode: ModeIndex) -> float:
    """Closed-form energy from J0 zeros pinned on both walls (spectral units)."""
    _check_mode(mode)
    gap = zero_gap(mode.l, mode.w)
    return gap * gap / (4.0 * geom.half_width**2) + geom.z_energy(mode.n)


def paper_zero_index(geom: WaveguideGeometry, w: int) -> int:
    """Zero index ``l`` whose ratio ``zeta_{l+w}/zeta_l`` best matches the walls.

    Pinning zeros on both walls needs ``zeta_{l+w} / zeta_l = mu_out / mu_in``;
    the ratio falls monotonically towards 1 with ``l``, so the nearest ``l``
    is found by bisection.
    """
    if w < 1:
        raise DomainError(f"w must be >= 1, got {w}")
    if geom.curvature == 0.0:
        raise DomainError("a straight guide corresponds to l -> infinity")
    target = geom.mu_outer / geom.mu_inner

    def ratio(l: int) -> float:
        return bessel.j0_zero(l + w) / bessel.j0_zero(l)

    if ratio(1) <= target:
        return 1
    hi = 2
    while ratio(hi) > target:
        hi *= 2
    lo = hi // 2
    # ratio(lo) > target >= ratio(hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ratio(mid) > target:
            lo = mid
        else:
            hi = mid
    return lo if abs(ratio(lo) - target) < abs(ratio(hi) - target) else hi


def closed_form_solution(geom: WaveguideGeometry, mode: ModeIndex) -> RadialSolution:
    if geom.curvature == 0.0:
        raise DomainError("closed-form wavefunction needs kappa > 0")
    _check_mode(mode)
    eps = zero_gap(mode.l, mode.w) / (geom.mu_outer - geom.mu_inner)
    return RadialSolution(
        epsilon=eps,
        energy=energy_closed_form(geom, mode),
        coeff_j=1.0,
        coeff_y=0.0,
        mode=mode,
        method="paper_closed_form",
    )


def radial_wavefunction_paper(geom: WaveguideGeometry, energy: float, n: int, xi: float) -> float:
    """``sqrt(eps mu) J0(eps mu)`` for a given total energy, unnormalised."""
    radial = energy - geom.z_energy(n)
    if not radial > 0.0:
        raise DomainError(f"energy {energy} not above the z threshold {geom.z_energy(n)}")
    if geom.curvature == 0.0:
        raise DomainError("mu scaling needs kappa > 0")
    eps = math.sqrt(radial) / geom.curvature
    x = eps * to_mu(geom, xi)
    return math.sqrt(x) * bessel.j0(x)


def radial_profile(sol: RadialSolution, geom: WaveguideGeometry, xi: float) -> float:
    """``Phi_0(xi)`` of a solution with its stored coefficients."""
    x = sol.epsilon * to_mu(geom, xi)
    if sol.coeff_y == 0.0:
        return sol.coeff_j * math.sqrt(x) * bessel.j0(x)
    j0v, _, y0v, _ = bessel.jy01(x)
    return math.sqrt(x) * (sol.coeff_j * j0v + sol.coeff_y * y0v)


def solve_exact_modes(geom: WaveguideGeometry, n: int, count: int) -> list[RadialSolution]:
    """The ``count`` lowest radial modes of the two-wall Dirichlet problem."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    if geom.curvature == 0.0:
        raise DomainError("exact Bessel quantisation needs kappa > 0; use the oracle for kappa = 0")
    mu_in, mu_out = geom.mu_inner, geom.mu_outer
    roots = bessel.cross_product_zeros(mu_in, mu_out, count)
    out = []
    for k, eps in enumerate(roots, start=1):
        jb, _, yb, _ = bessel.jy01(eps * mu_out)
        out.append(
            RadialSolution(
                epsilon=eps,
                energy=(eps * geom.curvature) ** 2 + geom.z_energy(n),
                coeff_j=yb,
                coeff_y=-jb,
                mode=ModeIndex(n, paper_zero_index(geom, k), k),
                method="exact_cross_product",
            )
        )
    return out


def _quad_panels(f, edges, rtol: float) -> float:
    total = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        with warnings.catch_warnings():
            warnings.simplefilter("error", integrate.IntegrationWarning)
            try:
                val, _ = integrate.quad(f, a, b, epsabs=0.0, epsrel=rtol, limit=200)
            except integrate.IntegrationWarning as exc:
                raise NumericalError(f"normalisation quadrature failed: {exc}") from exc
        total += val
    return total


def z_mode_integral(geom: WaveguideGeometry, n: int) -> float:
    """``integral_0^h sin^2(n pi z / h) dz = h / 2`` for every ``n >= 1``."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return 0.5 * geom.height


def bent_section_integral(
    geom: WaveguideGeometry,
    density,
    z_integral: float,
    panels: int = 1,
    rtol: float = QUAD_RTOL,
) -> float:
    """``integral ds dz dxi`` of a separable density over the half-turn.

    The ``s`` integral is the arc length ``pi R``, ``z_integral`` is supplied
    analytically and ``density(xi)`` is integrated adaptively over the width.
    """
    if math.isinf(geom.bend_radius):
        raise DomainError("a straight guide has no finite bent section to integrate over")
    xi0 = geom.half_width
    edges = np.linspace(-xi0, xi0, max(1, panels) + 1)
    return math.pi * geom.bend_radius * z_integral * _quad_panels(density, edges, rtol)


def _panels(sol: RadialSolution, geom: WaveguideGeometry) -> int:
    # one panel per half wavelength keeps each piece free of interior nodes
    return max(1, int(math.ceil(sol.epsilon * (geom.mu_outer - geom.mu_inner) / math.pi)))


def radial_norm(sol: RadialSolution, geom: WaveguideGeometry, rtol: float = QUAD_RTOL) -> float:
    """``integral |Phi_0|^2 dxi`` over the width by adaptive Gauss-Kronrod."""
    xi0 = geom.half_width
    edges = np.linspace(-xi0, xi0, _panels(sol, geom) + 1)
    return _quad_panels(lambda x: radial_profile(sol, geom, x) ** 2, edges, rtol)


def normalize(sol: RadialSolution, geom: WaveguideGeometry) -> RadialSolution:
    """Attach ``C = integral |Phi|^2 dz dxi ds`` over the whole bent section.

    The ``s`` and ``z`` factors are exact: ``pi R`` and ``a/2``.  With this
    ``C``, ``Psi = Phi / sqrt(C (1 - kappa xi))`` has unit norm under the
    curved measure ``(1 - kappa xi) dxi ds dz``.
    """
    C = bent_section_integral(
        geom,
        lambda x: radial_profile(sol, geom, x) ** 2,
        z_mode_integral(geom, sol.mode.n),
        panels=_panels(sol, geom),
    )
    if not (C > 0 and math.isfinite(C)):
        raise NumericalError(f"non-positive norm {C}")
    return replace(sol, norm_C=C)


def psi(sol: RadialSolution, geom: WaveguideGeometry, xi: float, z: float) -> float:
    """Normalised wavefunction ``Psi(xi, z)`` (the m = 0 mode has no s dependence)."""
    if sol.norm_C is None:
        raise DomainError("solution is not normalised")
    xi = _check_xi(geom, xi)
    mu = to_mu(geom, xi)
    zf = math.sin(sol.mode.n * math.pi * z / geom.height)
    return zf * radial_profile(sol, geom, xi) / math.sqrt(sol.norm_C * mu)


def zero_spacing_deficit(l: int, w: int) -> float:
    """``w pi - (zeta_{l+w} - zeta_l)``; positive, shrinking with ``l``."""
    return w * math.pi - zero_gap(l, w)


def compute_spectrum(
    geom: WaveguideGeometry, n_max: int, radial_count: int, method: Method = "exact_cross_product"
) -> SpectrumResult:
    """All modes with ``n <= n_max`` and radial index ``<= radial_count``, by energy."""
    if n_max < 1 or radial_count < 1:
        raise DomainError("n_max and radial_count must be >= 1")
    if method not in METHODS:
        raise DomainError(f"unknown method {method!r}")
    modes: list[RadialSolution] = []
    for n in range(1, n_max + 1):
        if method == "exact_cross_product":
            modes.extend(solve_exact_modes(geom, n, radial_count))
        else:
            for k in range(1, radial_count + 1):
                modes.append(closed_form_solution(geom, ModeIndex(n, paper_zero_index(geom, k), k)))
    modes.sort(key=lambda m: (m.energy, m.mode.n, m.mode.w))
    return SpectrumResult(geom, tuple(modes), n_max, radial_count)
