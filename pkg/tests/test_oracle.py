import math

import numpy as np
import pytest

from bentguide import DomainError, make_geometry
from bentguide.oracle import (
    FDGrid,
    TridiagonalOperator,
    build_operator,
    coarse_partner,
    convergence_slope,
    extrapolated_eigenvalues,
    fd_eigenvalues,
    richardson_extrapolate,
    sturm_count,
)

STRAIGHT = make_geometry(math.inf, 1.0)


def box_discrete(N: int, k: int, a: float = 1.0) -> float:
    """Exact eigenvalue of the discrete Dirichlet Laplacian."""
    h = a / (N + 1)
    return 4.0 / h**2 * math.sin(k * math.pi * h / (2.0 * a)) ** 2


@pytest.mark.parametrize("N", [2, 4, 1, 0, -3])
def test_grid_rejects_bad_sizes(N):
    with pytest.raises(DomainError):
        FDGrid(N, 1.0)


def test_grid_has_centre_point():
    g = FDGrid(5, 1.0)
    assert g.h == pytest.approx(1.0 / 6.0)
    assert g.xi_points[2] == pytest.approx(0.0, abs=1e-15)
    assert g.xi_points[0] > -0.5 and g.xi_points[-1] < 0.5


def test_operator_entries():
    geom = make_geometry(2.0, 1.0)
    op = build_operator(geom, 1, FDGrid(5, 1.0))
    xi = FDGrid(5, 1.0).xi_points
    v = math.pi**2 - 0.25 / (4.0 * (1 - 0.5 * xi) ** 2)
    assert np.allclose(op.diagonal, 2.0 / op.h**2 + v, rtol=1e-15)
    assert op.off_diagonal == -1.0 / op.h**2


def test_box_lowest_eigenvalues():
    e = fd_eigenvalues(STRAIGHT, 0, FDGrid(4001, 1.0), 2)
    assert e[0] == pytest.approx(math.pi**2, rel=1e-5)
    assert e[1] == pytest.approx(4 * math.pi**2, rel=1e-5)
    # against the closed-form discrete spectrum: pure bisection accuracy
    assert e[0] == pytest.approx(box_discrete(4001, 1), rel=1e-12)
    assert e[1] == pytest.approx(box_discrete(4001, 2), rel=1e-12)


def test_count_domain():
    with pytest.raises(DomainError):
        fd_eigenvalues(STRAIGHT, 0, FDGrid(5, 1.0), 6)


def test_sturm_count_gershgorin():
    op = build_operator(make_geometry(2.0, 1.0), 1, FDGrid(101, 1.0))
    lo, hi = op.gershgorin()
    assert sturm_count(op, lo - 1.0) == 0
    assert sturm_count(op, hi + 1.0) == op.N


def test_sturm_count_box():
    op = build_operator(STRAIGHT, 0, FDGrid(401, 1.0))
    assert sturm_count(op, 2 * math.pi**2) == 1


def test_sturm_count_matches_dense_eigenvalues():
    op = build_operator(make_geometry(1.5, 1.0), 2, FDGrid(41, 1.0))
    m = np.diag(op.diagonal) + op.off_diagonal * (np.eye(op.N, k=1) + np.eye(op.N, k=-1))
    ev = np.linalg.eigvalsh(m)
    probes = np.linspace(ev[0] - 10, ev[-1] + 10, 400)
    counts = [sturm_count(op, lam) for lam in probes]
    assert counts == [int(np.sum(ev < lam)) for lam in probes]
    assert all(b >= a for a, b in zip(counts, counts[1:]))


def test_sturm_count_jumps_by_one():
    op = build_operator(make_geometry(2.0, 1.0), 1, FDGrid(201, 1.0))
    ev = fd_eigenvalues(make_geometry(2.0, 1.0), 1, FDGrid(201, 1.0), 5)
    for k, lam in enumerate(ev, start=1):
        d = 1e-9 * lam
        assert sturm_count(op, lam - d) == k - 1
        assert sturm_count(op, lam + d) == k


def test_sturm_count_handles_exact_zero_pivot():
    # V = 0, h = 1, two points: eigenvalues 1 and 3, and lam = 2 makes the
    # first pivot exactly zero without being an eigenvalue itself
    op = TridiagonalOperator(1.0, (0.0, 0.0))
    assert sturm_count(op, 2.0) == 1
    assert sturm_count(op, 0.5) == 0
    assert sturm_count(op, 3.5) == 2


def test_richardson_examples():
    assert richardson_extrapolate(3.5, 3.5) == 3.5
    h = 0.1
    assert richardson_extrapolate(10 + 3 * h**2, 10 + 3 * (h / 2) ** 2) == pytest.approx(10.0, abs=1e-14)
    # general spacing ratio
    r = 8002 / 4002
    assert richardson_extrapolate(10 + 3 * (r * h) ** 2, 10 + 3 * h**2, r) == pytest.approx(10.0, abs=1e-13)


def test_richardson_box():
    e = extrapolated_eigenvalues(STRAIGHT, 0, 1, 4001)
    assert (e.N_coarse, e.N_fine) == (2001, 4001)
    assert e.extrapolated[0] == pytest.approx(math.pi**2, rel=1e-9)


def test_coarse_partner():
    assert coarse_partner(8001) == 4001
    assert coarse_partner(32001) == 16001
    assert coarse_partner(4003) % 2 == 1


def test_convergence_slope_is_two():
    Ns = [1001, 2001, 4001, 8001]
    hs = [1.0 / (N + 1) for N in Ns]
    geom = make_geometry(2.0, 1.0)
    ref = extrapolated_eigenvalues(geom, 1, 1, 8001).extrapolated[0]
    errs = [fd_eigenvalues(geom, 1, FDGrid(N, 1.0), 1)[0] - ref for N in Ns]
    assert convergence_slope(hs, errs) == pytest.approx(2.0, abs=0.05)


def test_golden_regression(golden):
    """Regenerate the frozen reference at the golden grid."""
    geom = make_geometry(golden["geometry"]["R"], golden["geometry"]["a"])
    e = extrapolated_eigenvalues(geom, 1, 1, 32001)
    assert e.extrapolated[0] == pytest.approx(golden["energies_n1"][0], rel=1e-12)
