"""Finite-difference eigenvalue oracle for the transverse radial equation.

``-Phi'' + V(xi) Phi = E Phi`` on ``(-xi0, xi0)`` with Dirichlet walls is
discretised with the 3-point stencil on a uniform grid; eigenvalues come from
bisection on Sturm counts.  Nothing here touches the Bessel machinery, so it
is an independent check on the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .geometry import WaveguideGeometry

DEFAULT_POINTS = 8001
GOLDEN_POINTS = 32001
BISECTION_RTOL = 1e-13

_TINY_PIVOT = 1e-300


@dataclass(frozen=True)
class FDGrid:
    """``N`` interior points on ``(-xi0, xi0)`` with spacing ``a / (N + 1)``."""

    N: int
    width: float
    h: float = field(init=False)

    def __post_init__(self) -> None:
        if not isinstance(self.N, (int, np.integer)) or self.N < 3 or self.N % 2 == 0:
            raise DomainError(f"N must be an odd integer >= 3, got {self.N!r}")
        if not self.width > 0:
            raise DomainError("width must be positive")
        object.__setattr__(self, "h", self.width / (self.N + 1))

    @classmethod
    def for_geometry(cls, geom: WaveguideGeometry, N: int = DEFAULT_POINTS) -> "FDGrid":
        return cls(N, geom.width)

    @property
    def xi_points(self) -> np.ndarray:
        i = np.arange(1, self.N + 1)
        return -0.5 * self.width + i * self.h


@dataclass(frozen=True)
class TridiagonalOperator:
    """Symmetric tridiagonal ``-D2 + V`` with constant off-diagonal ``-1/h^2``.

    Only ``h`` and the potential samples are stored; the matrix entries are
    derived so the Sturm count can work with ``h^2 (V - lambda)`` directly.
    """

    h: float
    potential: tuple[float, ...]

    @property
    def N(self) -> int:
        return len(self.potential)

    @property
    def diagonal(self) -> np.ndarray:
        return 2.0 / self.h**2 + np.asarray(self.potential)

    @property
    def off_diagonal(self) -> float:
        return -1.0 / self.h**2

    def gershgorin(self) -> tuple[float, float]:
        v = self.potential
        return min(v), max(v) + 4.0 / self.h**2


def build_operator(geom: WaveguideGeometry, n: int, grid: FDGrid) -> TridiagonalOperator:
    """Discretise the radial operator; ``n = 0`` drops the z-confinement term."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if not math.isclose(grid.width, geom.width):
        raise DomainError("grid width does not match the geometry")
    xi = grid.xi_points
    mu = 1.0 - geom.curvature * xi
    v = (n * math.pi / geom.height) ** 2 - 0.25 * (geom.curvature / mu) ** 2
    return TridiagonalOperator(grid.h, tuple(v.tolist()))


def sturm_count(op: TridiagonalOperator, lam: float) -> int:
    """Number of eigenvalues of ``op`` strictly below ``lam``.

    Pivots ``q_i`` of ``op - lam`` are carried as ``q_i h^2 = 1 + r_i`` with
    ``r_i = r_{i-1} / (1 + r_{i-1}) + h^2 (V_i - lam)``, so the ``2/h^2``
    diagonal never swamps ``lam``.
    """
    h2 = op.h * op.h
    shift = h2 * lam
    t = 1.0
    count = 0
    for v in op.potential:
        r = t + (h2 * v - shift)
        p = 1.0 + r
        if p < 0.0:
            count += 1
        elif p == 0.0:
            p = _TINY_PIVOT
        t = r / p
    return count


def _bisect_eigenvalues(op: TridiagonalOperator, count: int, rtol: float) -> list[float]:
    lo0, hi0 = op.gershgorin()
    # (lambda, sturm count) pairs shared between the searches for each index
    probes: list[tuple[float, int]] = [(lo0, 0), (hi0, op.N)]
    out = []
    for k in range(1, count + 1):
        lo = max(lam for lam, c in probes if c < k)
        hi = min(lam for lam, c in probes if c >= k)
        # tighten an oversized Gershgorin bracket by doubling out from lo
        span = max(1.0, abs(lo))
        while hi - lo > 16.0 * span:
            trial = lo + span
            c = sturm_count(op, trial)
            probes.append((trial, c))
            if c >= k:
                hi = trial
                break
            lo = trial
            span *= 2.0
        while hi - lo > rtol * max(abs(lo), abs(hi), 1e-300):
            mid = 0.5 * (lo + hi)
            if mid in (lo, hi):
                break
            c = sturm_count(op, mid)
            probes.append((mid, c))
            if c >= k:
                hi = mid
            else:
                lo = mid
        out.append(0.5 * (lo + hi))
    return out


def fd_eigenvalues(
    geom: WaveguideGeometry,
    n: int,
    grid: FDGrid,
    count: int,
    rtol: float = BISECTION_RTOL,
) -> list[float]:
    """The ``count`` lowest eigenvalues of the discrete radial operator (spectral units)."""
    if count < 1 or count > grid.N:
        raise DomainError(f"count must be in [1, {grid.N}], got {count}")
    return _bisect_eigenvalues(build_operator(geom, n, grid), count, rtol)


def richardson_extrapolate(e_coarse: float, e_fine: float, ratio: float = 2.0) -> float:
    """Cancel the ``O(h^2)`` term given ``h_coarse / h_fine = ratio``."""
    r2 = ratio * ratio
    return (r2 * e_fine - e_coarse) / (r2 - 1.0)


def coarse_partner(N: int) -> int:
    """Odd grid size with roughly twice the spacing of ``N``."""
    nc = (N + 1) // 2
    return nc if nc % 2 else nc + 1


@dataclass(frozen=True)
class ExtrapolatedEigenvalues:
    N_coarse: int
    N_fine: int
    coarse: tuple[float, ...]
    fine: tuple[float, ...]
    extrapolated: tuple[float, ...]


def extrapolated_eigenvalues(
    geom: WaveguideGeometry, n: int, count: int, N: int = DEFAULT_POINTS
) -> ExtrapolatedEigenvalues:
    """Eigenvalues on grids ``N`` and its coarse partner, Richardson-combined."""
    nc = coarse_partner(N)
    fine_grid = FDGrid(N, geom.width)
    coarse_grid = FDGrid(nc, geom.width)
    fine = fd_eigenvalues(geom, n, fine_grid, count)
    coarse = fd_eigenvalues(geom, n, coarse_grid, count)
    ratio = coarse_grid.h / fine_grid.h
    ext = [richardson_extrapolate(c, f, ratio) for c, f in zip(coarse, fine)]
    return ExtrapolatedEigenvalues(nc, N, tuple(coarse), tuple(fine), tuple(ext))


def convergence_slope(hs, errors) -> float:
    """Least-squares slope of ``log|error|`` against ``log h``."""
    return float(np.polyfit(np.log(np.asarray(hs)), np.log(np.abs(np.asarray(errors))), 1)[0])
