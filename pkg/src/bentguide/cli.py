"""Command-line front end.

    bentguide modes        --radius R --width a [--nmax N --count K]
    bentguide potential    --radius R --width a --kind effective|bohm [--samples S]
    bentguide phase-shift  --radius R --width a --wavelength L [--variant ...]
    bentguide force        --radius R
    bentguide validate     --radius R --width a [--grid N]

Exit status: 0 success, 1 domain/numerical error, 2 failed validation,
64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass
from typing import Any, Sequence

from . import __version__
from .errors import BentGuideError, DomainError
from .geometry import (
    ModeIndex,
    PotentialProfile,
    UnitSystem,
    WaveguideGeometry,
    effective_profile,
    make_geometry,
)
from .observables import (
    anticentrifugal_force,
    bohm_barrier,
    bohm_profile,
    min_phase_shift,
    mode_phase_shift,
)
from .oracle import FDGrid, convergence_slope, coarse_partner, extrapolated_eigenvalues, fd_eigenvalues
from .spectrum import energy_closed_form, paper_zero_index, solve_exact_modes

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_VALIDATION = 2
EXIT_USAGE = 64

# `validate` pass thresholds; fixed so a pass means the same thing everywhere
VALIDATION_RTOL = 1e-6
SLOPE_TARGET = 2.0
SLOPE_TOL = 0.05

FORMATS = ("csv", "json", "table")
VARIANT_FLAGS = {"paper": "paper_literal", "corrected": "corrected", "exact": "exact"}


def fmt(v: Any) -> str:
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


@dataclass(frozen=True)
class RunConfig:
    command: str
    radius: float | None
    width: float
    nmax: int
    count: int
    samples: int
    grid: int
    variant: str
    kind: str
    format: str
    wavelength: float | None
    hbar: float
    mass: float
    output: str | None

    def __post_init__(self) -> None:
        for name in ("width", "hbar", "mass"):
            if not getattr(self, name) > 0:
                raise DomainError(f"--{name} must be positive")
        for name in ("nmax", "count", "samples", "grid"):
            if getattr(self, name) < 1:
                raise DomainError(f"--{name} must be >= 1")
        if self.radius is not None and not self.radius > 0:
            raise DomainError("--radius must be positive")
        if self.wavelength is not None and not self.wavelength > 0:
            raise DomainError("--wavelength must be positive")
        if self.format not in FORMATS:
            raise DomainError(f"--format must be one of {FORMATS}")

    @property
    def units(self) -> UnitSystem:
        return UnitSystem(self.hbar, self.mass)

    def geometry(self) -> WaveguideGeometry:
        if self.radius is None:
            raise DomainError("--radius is required")
        return make_geometry(self.radius, self.width)

    def public(self) -> dict[str, Any]:
        d = asdict(self)
        d.pop("output")
        return d


# --------------------------------------------------------------------------
# output

@dataclass
class Table:
    columns: list[str]
    rows: list[list[Any]]
    summary: dict[str, Any]


def render(config: RunConfig, table: Table) -> str:
    if config.format == "json":
        doc = {
            "config": config.public(),
            "results": [dict(zip(table.columns, r)) for r in table.rows],
            "summary": table.summary,
        }
        return json.dumps(doc, indent=2) + "\n"
    if config.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(table.columns)
        for r in table.rows:
            w.writerow([fmt(v) for v in r])
        return buf.getvalue()
    lines = [f"# {config.command}: " + " ".join(f"{k}={fmt(v)}" for k, v in config.public().items() if k != "command")]
    lines += [f"# {k} = {fmt(v)}" for k, v in table.summary.items()]
    cells = [table.columns] + [[fmt(v) for v in r] for r in table.rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(table.columns))]
    for j, row in enumerate(cells):
        line = "  ".join(c.rjust(wd) for c, wd in zip(row, widths))
        lines.append(("# " if j == 0 else "  ") + line)
    return "\n".join(lines) + "\n"


def emit_profile(config: RunConfig, profile: PotentialProfile) -> str:
    """Format a sampled potential: CSV ``xi,value,kind``, a gnuplot block, or JSON."""
    if len(profile) == 0:
        raise DomainError("empty profile")
    if config.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["xi", "value", "kind"])
        for x, v in zip(profile.xi_samples, profile.values):
            w.writerow([fmt(x), fmt(v), profile.kind])
        return buf.getvalue()
    if config.format == "json":
        doc = {
            "config": config.public(),
            "results": [{"xi": x, "value": v} for x, v in zip(profile.xi_samples, profile.values)],
            "summary": {"kind": profile.kind, "samples": len(profile)},
        }
        return json.dumps(doc, indent=2) + "\n"
    lines = [f"# kind={profile.kind}", "# xi value"]
    lines += [f"{fmt(x)} {fmt(v)}" for x, v in zip(profile.xi_samples, profile.values)]
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# subcommands

def cmd_modes(cfg: RunConfig) -> tuple[str, int]:
    geom = cfg.geometry()
    scale = cfg.units.energy_scale
    rows = []
    for n in range(1, cfg.nmax + 1):
        for sol in solve_exact_modes(geom, n, cfg.count):
            closed = energy_closed_form(geom, sol.mode)
            rows.append(
                [n, sol.mode.w, sol.mode.l, sol.epsilon, scale * sol.energy, scale * closed,
                 (closed - sol.energy) / sol.energy]
            )
    rows.sort(key=lambda r: (r[4], r[0], r[1]))
    cols = ["n", "k", "l", "epsilon", "energy_exact", "energy_closed_form", "rel_diff"]
    summary = {"modes": len(rows), "ground_energy": rows[0][4]}
    return render(cfg, Table(cols, rows, summary)), EXIT_OK


def cmd_potential(cfg: RunConfig) -> tuple[str, int]:
    geom = cfg.geometry()
    if cfg.kind == "effective":
        prof = effective_profile(geom, cfg.nmax, cfg.samples)
    else:
        mode = ModeIndex(cfg.nmax, paper_zero_index(geom, cfg.count), cfg.count)
        prof = bohm_profile(geom, mode, cfg.samples)
    scale = cfg.units.energy_scale
    if scale != 1.0:
        prof = PotentialProfile(
            prof.xi_samples, tuple(scale * v for v in prof.values), prof.kind, prof.half_width
        )
    return emit_profile(cfg, prof), EXIT_OK


def cmd_phase_shift(cfg: RunConfig) -> tuple[str, int]:
    if cfg.wavelength is None:
        raise DomainError("--wavelength is required")
    geom = cfg.geometry()
    variant = VARIANT_FLAGS[cfg.variant]
    rows = []
    for n in range(1, cfg.nmax + 1):
        for k in range(1, cfg.count + 1):
            mode = ModeIndex(n, paper_zero_index(geom, k), k)
            res = mode_phase_shift(geom, mode, cfg.wavelength, variant, cfg.hbar)
            rows.append([n, k, mode.l, cfg.units.energy_scale * bohm_barrier(geom, mode),
                         res.delta_p, res.delta_phi])
    cols = ["n", "k", "l", "barrier", "delta_p", "delta_phi"]
    summary = {
        "variant": variant,
        "min_phase_shift": min_phase_shift(cfg.wavelength, geom.curvature, variant, cfg.hbar),
    }
    return render(cfg, Table(cols, rows, summary)), EXIT_OK


def cmd_force(cfg: RunConfig) -> tuple[str, int]:
    geom = cfg.geometry()
    force = anticentrifugal_force(geom, cfg.units)
    if cfg.format == "table":
        return fmt(force) + "\n", EXIT_OK
    row = [geom.bend_radius, geom.curvature, force]
    return render(cfg, Table(["radius", "curvature", "force"], [row], {"force": force})), EXIT_OK


def cmd_validate(cfg: RunConfig) -> tuple[str, int]:
    geom = cfg.geometry()
    grid = FDGrid(cfg.grid, geom.width)
    scale = cfg.units.energy_scale
    rows = []
    worst = 0.0
    slope = math.nan
    for n in range(1, cfg.nmax + 1):
        exact = solve_exact_modes(geom, n, cfg.count)
        fd = extrapolated_eigenvalues(geom, n, cfg.count, grid.N)
        for sol, e_fine, e_ext in zip(exact, fd.fine, fd.extrapolated):
            closed = energy_closed_form(geom, sol.mode)
            err = abs(sol.energy - e_ext) / abs(e_ext)
            worst = max(worst, err)
            rows.append([n, sol.mode.w, sol.mode.l, scale * closed, scale * sol.energy,
                         scale * e_fine, scale * e_ext, err, (closed - sol.energy) / sol.energy])
        if n == 1:
            nq = coarse_partner(fd.N_coarse)
            e_q = fd_eigenvalues(geom, 1, FDGrid(nq, geom.width), 1)[0]
            ref = fd.extrapolated[0]
            hs = [geom.width / (m + 1) for m in (nq, fd.N_coarse, fd.N_fine)]
            slope = convergence_slope(hs, [e_q - ref, fd.coarse[0] - ref, fd.fine[0] - ref])
    slope_ok = abs(slope - SLOPE_TARGET) <= SLOPE_TOL
    passed = worst < VALIDATION_RTOL and slope_ok
    cols = ["n", "k", "l", "closed_form", "exact", "oracle", "oracle_extrapolated",
            "rel_err_exact_oracle", "rel_err_closed_exact"]
    summary = {
        "max_rel_err": worst,
        "threshold": VALIDATION_RTOL,
        "convergence_slope": slope,
        "slope_tolerance": SLOPE_TOL,
        "pass": passed,
    }
    return render(cfg, Table(cols, rows, summary)), EXIT_OK if passed else EXIT_VALIDATION


COMMANDS = {
    "modes": cmd_modes,
    "potential": cmd_potential,
    "phase-shift": cmd_phase_shift,
    "force": cmd_force,
    "validate": cmd_validate,
}


# --------------------------------------------------------------------------
# argument parsing

class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D401 - argparse hook
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--radius", type=float, help="bend radius R")
    common.add_argument("--width", type=float, default=1.0, help="cross-section edge a")
    common.add_argument("--nmax", type=int, default=1, help="largest z quantum number")
    common.add_argument("--count", type=int, default=None, help="radial modes per n")
    common.add_argument("--samples", type=int, default=101, help="profile sample count")
    common.add_argument("--grid", type=int, default=8001, help="oracle interior points (odd)")
    common.add_argument("--variant", choices=sorted(VARIANT_FLAGS), default="corrected")
    common.add_argument("--kind", choices=("effective", "bohm"), default="effective")
    common.add_argument("--format", choices=FORMATS, default="table")
    common.add_argument("--wavelength", type=float, help="de Broglie wavelength")
    common.add_argument("--hbar", type=float, default=1.0)
    common.add_argument("--mass", type=float, default=0.5)
    common.add_argument("--output", help="write here instead of standard output")

    parser = _Parser(prog="bentguide", description="Bound modes of a bent quantum waveguide.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    helps = {
        "modes": "mode table, exact and closed-form energies",
        "potential": "effective or Bohm potential profile",
        "phase-shift": "interference phase shifts",
        "force": "anticentrifugal force on the axis",
        "validate": "closed forms against the finite-difference oracle",
    }
    for name, text in helps.items():
        sub.add_parser(name, parents=[common], help=text, description=text)
    return parser


def _config(ns: argparse.Namespace) -> RunConfig:
    count = ns.count if ns.count is not None else (3 if ns.command == "validate" else 1)
    return RunConfig(
        command=ns.command, radius=ns.radius, width=ns.width, nmax=ns.nmax, count=count,
        samples=ns.samples, grid=ns.grid, variant=ns.variant, kind=ns.kind, format=ns.format,
        wavelength=ns.wavelength, hbar=ns.hbar, mass=ns.mass, output=ns.output,
    )


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        ns = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    try:
        cfg = _config(ns)
        text, code = COMMANDS[cfg.command](cfg)
        if cfg.output:
            with open(cfg.output, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        else:
            stdout.write(text)
    except (BentGuideError, OSError) as exc:
        print(f"bentguide: {exc}", file=stderr)
        return EXIT_DOMAIN
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
