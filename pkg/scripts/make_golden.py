"""Regenerate tests/data/golden.json from the finite-difference oracle alone.

    python scripts/make_golden.py

Uses the N = 32001 grid and its coarse partner, Richardson-combined.  The
Bessel code is not imported, so the numbers stay an independent reference.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

from bentguide.geometry import make_geometry
from bentguide.oracle import GOLDEN_POINTS, extrapolated_eigenvalues

OUT = Path(__file__).resolve().parents[1] / "tests" / "data" / "golden.json"


def main() -> None:
    geom = make_geometry(2.0, 1.0)
    radial = extrapolated_eigenvalues(geom, 0, 3, GOLDEN_POINTS)
    full = extrapolated_eigenvalues(geom, 1, 3, GOLDEN_POINTS)
    data = {
        "source": f"FD oracle, N={GOLDEN_POINTS} and N={radial.N_coarse}, Richardson",
        "geometry": {"R": 2.0, "a": 1.0, "mu_in": geom.mu_inner, "mu_out": geom.mu_outer},
        "radial_eigenvalues": list(radial.extrapolated),
        "cross_product_epsilon": [math.sqrt(v) / geom.curvature for v in radial.extrapolated],
        "energies_n1": list(full.extrapolated),
    }
    OUT.write_text(json.dumps(data, indent=2) + "\n")
    print(json.dumps(data, indent=2))


if __name__ == "__main__":
    main()
