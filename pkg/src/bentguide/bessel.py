"""Cylinder functions of order 0 and 1 on the non-negative real axis.

Three regimes, chosen so each meets ~1e-15 absolute accuracy:

* ``x <= 5``: ascending power series (cancellation stays below ~1e-15).
* ``5 < x < 20``: Miller backward recurrence for ``J_k``, normalised by
  ``J_0 + 2 sum J_2k = 1``; ``Y_0`` and ``Y_1`` from their Neumann series in
  the same ``J_k``.
* ``x >= 20``: Hankel asymptotic expansion in modulus/phase form.  Its
  smallest term at ``x = 20`` is ~5e-19, which is why the crossover can't sit
  lower.

Zeros of ``J_0`` and of the cross product ``J0(e a) Y0(e b) - J0(e b) Y0(e a)``
are refined from verified sign-change brackets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ConvergenceError, DomainError

EULER_GAMMA = 0.57721566490153286061
TWO_OVER_PI = 2.0 / math.pi
SQRT_HALF = math.sqrt(0.5)

SERIES_MAX = 5.0
ASYMPTOTIC_MIN = 20.0


# --------------------------------------------------------------------------
# scalar kernels

def _series_j(x: float) -> tuple[float, float]:
    q = -0.25 * x * x
    t0 = 1.0
    t1 = 1.0
    s0 = 1.0
    s1 = 1.0
    k = 0
    while True:
        k += 1
        t0 *= q / (k * k)
        t1 *= q / (k * (k + 1))
        s0 += t0
        s1 += t1
        if abs(t0) < 1e-17 * abs(s0) + 1e-300 and abs(t1) < 1e-17 * abs(s1) + 1e-300:
            break
    return s0, 0.5 * x * s1


def _series_y(x: float, j0: float, j1: float) -> tuple[float, float]:
    q = -0.25 * x * x
    lg = math.log(0.5 * x) + EULER_GAMMA
    # Y0 = 2/pi [lg J0 - sum_{k>=1} H_k q^k / (k!)^2]
    # Y1 = 2/pi [lg J1 - 1/x] - x/(2 pi) sum_{k>=0} (H_k + H_{k+1}) q^k / (k!(k+1)!)
    t0 = 1.0
    t1 = 1.0
    h = 0.0
    s0 = 0.0
    s1 = 1.0
    k = 0
    while True:
        k += 1
        h += 1.0 / k
        t0 *= q / (k * k)
        t1 *= q / (k * (k + 1))
        d0 = h * t0
        d1 = (2.0 * h + 1.0 / (k + 1)) * t1
        s0 += d0
        s1 += d1
        if abs(d0) < 1e-18 and abs(d1) < 1e-18:
            break
    y0 = TWO_OVER_PI * (lg * j0 - s0)
    y1 = TWO_OVER_PI * (lg * j1 - 1.0 / x) - x / (2.0 * math.pi) * s1
    return y0, y1


def _miller_start(x: float) -> int:
    return 2 * int((x + 25.0 + 3.0 * math.sqrt(x)) / 2.0)


def _miller_j(x: float) -> tuple[float, float]:
    """J0, J1 only; same recurrence as :func:`_miller` without the Y sums."""
    m = _miller_start(x)
    jp1 = 0.0
    jk = 1e-30
    norm = 0.0
    two_over_x = 2.0 / x
    for k in range(m, 0, -1):
        if not k & 1:
            norm += jk
        jp1, jk = jk, k * two_over_x * jk - jp1
    norm = jk + 2.0 * norm
    return jk / norm, jp1 / norm


def _miller(x: float) -> tuple[float, float, float, float]:
    """J0, J1, Y0, Y1 by backward recurrence (moderate x)."""
    m = _miller_start(x)
    jk = [0.0] * (m + 2)
    jk[m] = 1e-30
    for k in range(m, 0, -1):
        jk[k - 1] = (2.0 * k / x) * jk[k] - jk[k + 1]
    # x < 20 and m ~ x + 40 keeps the unnormalised values far from overflow
    norm = jk[0] + 2.0 * math.fsum(jk[2 : m + 1 : 2])
    s0 = 0.0  # sum_{j>=1} (-1)^(j+1) J_2j / j
    s1 = 0.0  # sum_{j>=1} (-1)^(j+1) (J_{2j-1} - J_{2j+1}) / j
    sign = 1.0
    for j in range(1, m // 2 + 1):
        s0 += sign * jk[2 * j] / j
        s1 += sign * (jk[2 * j - 1] - jk[2 * j + 1]) / j
        sign = -sign
    j0 = jk[0] / norm
    j1 = jk[1] / norm
    lg = math.log(0.5 * x) + EULER_GAMMA
    y0 = TWO_OVER_PI * (lg * j0 + 2.0 * s0 / norm)
    y1 = TWO_OVER_PI * (lg * j1 - j0 / x - s1 / norm)
    return j0, j1, y0, y1


def _asymptotic(x: float) -> tuple[float, float, float, float]:
    amp = math.sqrt(TWO_OVER_PI / x)
    c = math.cos(x)
    s = math.sin(x)
    out = []
    for mu, cos_chi, sin_chi in (
        (0.0, (c + s) * SQRT_HALF, (s - c) * SQRT_HALF),
        (4.0, (s - c) * SQRT_HALF, -(s + c) * SQRT_HALF),
    ):
        p = 1.0
        q = 0.0
        term = 1.0
        last = math.inf
        k = 0
        while True:
            k += 1
            term *= (mu - (2 * k - 1) ** 2) / (k * 8.0 * x)
            if abs(term) > last or abs(term) < 1e-18:
                break
            last = abs(term)
            # a_k/x^k enters P for even k, Q for odd k; signs alternate in pairs
            sign = -1.0 if (k // 2) % 2 else 1.0
            if k % 2 == 0:
                p += sign * term
            else:
                q += sign * term
        out.append((amp * (p * cos_chi - q * sin_chi), amp * (p * sin_chi + q * cos_chi)))
    (j0, y0), (j1, y1) = out
    return j0, j1, y0, y1


def _jy(x: float) -> tuple[float, float, float, float]:
    if x <= SERIES_MAX:
        j0, j1 = _series_j(x)
        y0, y1 = _series_y(x, j0, j1)
        return j0, j1, y0, y1
    if x < ASYMPTOTIC_MIN:
        return _miller(x)
    return _asymptotic(x)


def _j_only(x: float) -> tuple[float, float]:
    if x <= SERIES_MAX:
        return _series_j(x)
    if x < ASYMPTOTIC_MIN:
        return _miller_j(x)
    j0, j1, _, _ = _asymptotic(x)
    return j0, j1


def _check_arg(x, strict: bool) -> float:
    x = float(x)
    if not math.isfinite(x) or x < 0.0 or (strict and x == 0.0):
        raise DomainError(f"argument must be {'positive' if strict else 'non-negative'} and finite, got {x}")
    return x


def _check_order(order: int) -> int:
    if order not in (0, 1):
        raise DomainError(f"only orders 0 and 1 are implemented, got {order!r}")
    return int(order)


def bessel_j(order: int, x):
    """``J_order(x)`` for ``x >= 0``; accepts a scalar or an array."""
    order = _check_order(order)
    if np.ndim(x):
        return np.array([bessel_j(order, v) for v in np.asarray(x, dtype=float).ravel()]).reshape(
            np.shape(x)
        )
    x = _check_arg(x, strict=False)
    if x == 0.0:
        return 1.0 if order == 0 else 0.0
    return _j_only(x)[order]


def bessel_y(order: int, x):
    """``Y_order(x)`` for ``x > 0``; accepts a scalar or an array."""
    order = _check_order(order)
    if np.ndim(x):
        return np.array([bessel_y(order, v) for v in np.asarray(x, dtype=float).ravel()]).reshape(
            np.shape(x)
        )
    x = _check_arg(x, strict=True)
    return _jy(x)[2 + order]


def j0(x: float) -> float:
    return bessel_j(0, x)


def j1(x: float) -> float:
    return bessel_j(1, x)


def y0(x: float) -> float:
    return bessel_y(0, x)


def y1(x: float) -> float:
    return bessel_y(1, x)


def jy01(x: float) -> tuple[float, float, float, float]:
    """``(J0, J1, Y0, Y1)`` at one positive point, sharing the work."""
    return _jy(_check_arg(x, strict=True))


# --------------------------------------------------------------------------
# zeros

@dataclass(frozen=True)
class ZeroTable:
    """Ascending positive zeros of ``J_order``."""

    order: int
    zeros: tuple[float, ...]

    @property
    def count(self) -> int:
        return len(self.zeros)

    def __getitem__(self, l: int) -> float:
        """1-based access, matching the usual ``zeta_l`` labelling."""
        if l < 1:
            raise IndexError(l)
        return self.zeros[l - 1]


def _newton_bracketed(
    fdf, lo: float, hi: float, x0: float, lo_positive: bool | None = None, max_iter: int = 200
) -> float:
    """Newton iteration kept inside a sign-change bracket, bisecting when it escapes.

    ``lo_positive`` gives the sign of ``f(lo)`` when it is known analytically
    (the root then lies strictly inside) and saves both endpoint evaluations.
    """
    if lo_positive is None:
        flo, _ = fdf(lo)
        fhi, _ = fdf(hi)
        if flo == 0.0:
            return lo
        if fhi == 0.0:
            return hi
        if (flo > 0) == (fhi > 0):
            raise ConvergenceError(f"no sign change on [{lo}, {hi}]")
        lo_positive = flo > 0
    x = x0 if lo < x0 < hi else 0.5 * (lo + hi)
    for _ in range(max_iter):
        fx, dfx = fdf(x)
        if fx == 0.0:
            return x
        if (fx > 0) == lo_positive:
            lo = x
        else:
            hi = x
        step = fx / dfx if dfx != 0.0 else math.inf
        x_new = x - step
        if abs(step) <= 4.0 * math.ulp(x):
            # converged; the step may round onto a bracket end the root sits on
            return x_new if lo <= x_new <= hi else x
        if not lo < x_new < hi:
            x_new = 0.5 * (lo + hi)
        if abs(x_new - x) <= 4.0 * math.ulp(x) or hi - lo <= 4.0 * math.ulp(hi):
            return x_new
        x = x_new
    raise ConvergenceError(f"root refinement stalled on [{lo}, {hi}]")


def mcmahon_j0_zero(l: int) -> float:
    """Asymptotic estimate of the ``l``-th zero of ``J0``."""
    b = (l - 0.25) * math.pi
    b2 = b * b
    return b + 1.0 / (8.0 * b) - 31.0 / (384.0 * b * b2) + 3779.0 / (15360.0 * b * b2 * b2)


def _j0_fdf(x: float) -> tuple[float, float]:
    j0v, j1v = _j_only(x)
    return j0v, -j1v


@lru_cache(maxsize=4096)
def j0_zero(l: int) -> float:
    """``l``-th positive zero of ``J0`` (``l >= 1``)."""
    if not isinstance(l, (int, np.integer)) or l < 1:
        raise DomainError(f"zero index must be a positive integer, got {l!r}")
    l = int(l)
    # zeta_l lies in ((l - 1/4) pi, (l - 1/8) pi) for every l >= 1, and J0
    # has sign (-1)^(l-1) just below it
    lo = (l - 0.25) * math.pi
    hi = (l - 0.125) * math.pi
    return _newton_bracketed(_j0_fdf, lo, hi, mcmahon_j0_zero(l), lo_positive=l % 2 == 1)


def j0_zeros(count: int) -> ZeroTable:
    if count < 1:
        raise DomainError("count must be >= 1")
    return ZeroTable(0, tuple(j0_zero(l) for l in range(1, count + 1)))


def cross_product(eps: float, mu_in: float, mu_out: float) -> float:
    """``J0(eps mu_in) Y0(eps mu_out) - J0(eps mu_out) Y0(eps mu_in)``."""
    ja, _, ya, _ = _jy(eps * mu_in)
    jb, _, yb, _ = _jy(eps * mu_out)
    return ja * yb - jb * ya


def _cross_fdf(mu_in: float, mu_out: float):
    def fdf(eps: float) -> tuple[float, float]:
        ja, j1a, ya, y1a = _jy(eps * mu_in)
        jb, j1b, yb, y1b = _jy(eps * mu_out)
        f = ja * yb - jb * ya
        df = -mu_in * j1a * yb - mu_out * ja * y1b + mu_out * j1b * ya + mu_in * jb * y1a
        return f, df

    return fdf


def _check_mu(mu_in: float, mu_out: float) -> None:
    if not (0.0 < mu_in < mu_out) or not math.isfinite(mu_out):
        raise DomainError(f"need 0 < mu_in < mu_out, got {mu_in}, {mu_out}")


@lru_cache(maxsize=256)
def cross_product_zeros(mu_in: float, mu_out: float, count: int) -> tuple[float, ...]:
    """The ``count`` smallest positive roots of :func:`cross_product`.

    The scan step is an eighth of the asymptotic root spacing.  Min-max
    bounds every root: the bend term lies between ``-1/(4 mu_in^2)`` and 0, so
    ``(k pi / d)^2 - 1/(4 mu_in^2) <= eps_k^2 <= (k pi / d)^2`` with
    ``d = mu_out - mu_in``.  The scan runs between the first lower bound and
    the last upper bound only.
    """
    _check_mu(mu_in, mu_out)
    if count < 1:
        raise DomainError("count must be >= 1")
    width = mu_out - mu_in
    step = min(math.pi / width, math.pi) / 8.0
    eps_max = count * math.pi / width * (1.0 + 1e-9) + 2.0 * step
    fdf = _cross_fdf(mu_in, mu_out)
    roots: list[float] = []
    lower2 = (math.pi / width) ** 2 - 0.25 / mu_in**2
    a = max(0.5 * step, math.sqrt(lower2) * (1.0 - 1e-9) - step if lower2 > 0 else 0.0)
    fa = cross_product(a, mu_in, mu_out)
    while len(roots) < count:
        b = a + step
        if b > eps_max:
            raise ConvergenceError(
                f"found {len(roots)} of {count} roots below eps={eps_max:.6g}"
            )
        fb = cross_product(b, mu_in, mu_out)
        if fb == 0.0:
            roots.append(b)
            b += 1e-3 * step
            fb = cross_product(b, mu_in, mu_out)
        elif (fa > 0) != (fb > 0):
            roots.append(_newton_bracketed(fdf, a, b, 0.5 * (a + b)))
        a, fa = b, fb
    return tuple(roots)


def cross_product_zero(mu_in: float, mu_out: float, k: int) -> float:
    """``k``-th positive root (1-based) of the J0/Y0 cross product."""
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise DomainError(f"root index must be a positive integer, got {k!r}")
    return cross_product_zeros(float(mu_in), float(mu_out), int(k))[k - 1]
