"""Command-line front end: ``cavityspin {solve,scan,grid,interact}``.

Exit codes: 0 success, 1 no eigenstate for the requested quantum numbers,
2 usage error. Numbers are written with 12 significant digits.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .constants import constants, wavevector_to_si
from .grid import CoordinateMode, GridSpec, grid_table, iso_statistics, to_csv
from .interaction import interaction_particle, interaction_report, interaction_wave, published_comparison
from .model import CavityGeometry, QuantumNumbers, RegionMask
from .solver import BoundStateError, bound_window, scan_residual, solve_eigenstate, SolverConfig

SUMMARY_KEYS = (
    "epsilon_mev", "kappa", "zeta_per_m", "xi_per_m", "k_axial_per_m", "n2_per_nm3",
    "wave_fraction_I", "wave_fraction_II", "particle_fraction_I", "particle_fraction_II",
    "unity_ratio", "boundary_residual",
)

SIGN_NOTE = ("wave_total_signed_ev is the signed integral of j_phi A_phi for B along +z; it is "
             "negative because the electron's azimuthal current circulates opposite to phi-hat. "
             "All other energies are magnitudes.")


class UsageError(Exception):
    pass


def _num(x):
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return float(f"{float(x):.12g}")


def _clean(obj):
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return _num(obj)


def _json(obj) -> str:
    return json.dumps(_clean(obj), indent=2) + "\n"


def _flat_csv(row: dict) -> str:
    keys = [k for k, v in row.items() if not isinstance(v, (dict, list))]
    vals = []
    for k in keys:
        v = row[k]
        vals.append(v if isinstance(v, str) else ("%.11e" % v if isinstance(v, float) else str(v)))
    return ",".join(keys) + "\n" + ",".join(vals) + "\n"


def _emit(text: str, output: str | None):
    if output in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        Path(output).write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise UsageError(f"cannot write output {output!r}: {exc}") from exc


def _parse_grid(text: str):
    try:
        dims, _, nphi = text.partition(":")
        nr, nz = dims.lower().split("x")
        return int(nr), int(nz), int(nphi) if nphi else 16
    except ValueError as exc:
        raise UsageError(f"--grid expects NRxNZ[:NPHI], got {text!r}") from exc


def _geometry(args) -> CavityGeometry:
    try:
        return CavityGeometry.from_nm_mev(args.radius_nm, args.half_height_nm, args.potential_mev)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _qnums(args) -> QuantumNumbers:
    if args.m < 1 or args.m % 2 == 0:
        raise UsageError("m must be odd")
    try:
        return QuantumNumbers(args.n, args.l, args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _solve(args):
    return solve_eigenstate(_geometry(args), _qnums(args), SolverConfig(scan_points=args.scan_points))


def summarize(state, grid_spec: GridSpec | None = None) -> dict:
    """Flat summary of a solved state; the keys in ``SUMMARY_KEYS`` are stable."""
    rep = interaction_report(state, 1.0)
    g = state.geometry
    spec = grid_spec or GridSpec(rho_max=2 * g.radius_R)
    iso = iso_statistics(state, spec)
    eps_min, eps_max = bound_window(g, state.qnums.m_axial)
    out = {
        "epsilon_mev": state.epsilon * 1e3,
        "kappa": state.kappa,
        "zeta_per_m": wavevector_to_si(state.zeta),
        "xi_per_m": wavevector_to_si(state.xi),
        "k_axial_per_m": wavevector_to_si(state.k_axial),
        "n2_per_nm3": state.n_squared,
        "wave_fraction_I": rep.wave_fraction_I,
        "wave_fraction_II": rep.wave_fraction_II,
        "particle_fraction_I": rep.particle_fraction_I,
        "particle_fraction_II": rep.particle_fraction_II,
        "unity_ratio": rep.unity_ratio,
        "boundary_residual": state.boundary_residual,
        "n": state.qnums.n_radial,
        "l": state.qnums.l_azimuthal,
        "m": state.qnums.m_axial,
        "radius_nm": g.radius_R,
        "half_height_nm": g.half_height_d,
        "potential_mev": g.barrier_U * 1e3,
        "window_min_mev": eps_min * 1e3,
        "window_max_mev": eps_max * 1e3,
        "peak_abs_jphi_rho_nm": iso.peak_rho_nm,
        "iso_two_thirds_fraction_inside": iso.fraction_inside_region_I,
    }
    return out


def cmd_solve(args) -> str:
    summary = summarize(_solve(args))
    return _json(summary) if args.format == "json" else _flat_csv(_clean(summary))


def cmd_scan(args) -> str:
    g = _geometry(args)
    _qnums(args)
    eps, res = scan_residual(g, args.l, args.m, args.scan_points)
    if args.format == "json":
        return _json({"epsilon_mev": list(eps * 1e3), "boundary_residual": list(res)})
    return to_csv(["epsilon_mev", "boundary_residual"], np.column_stack([eps * 1e3, res]))


def cmd_grid(args) -> str:
    if args.format == "json":
        raise UsageError("grid output is CSV only")
    state = _solve(args)
    nr, nz, nphi = _parse_grid(args.grid)
    rho_max = args.rho_max_nm if args.rho_max_nm is not None else 2 * state.geometry.radius_R
    mode = CoordinateMode.CARTESIAN_XYZ if args.cartesian else CoordinateMode.CYLINDRICAL_RZ
    try:
        spec = GridSpec(rho_max, nr, nz, nphi, mode)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if spec.n_points > args.max_points:
        raise UsageError(f"grid has {spec.n_points} points, above --max-points {args.max_points}")
    cols, table = grid_table(state, spec)
    iso = iso_statistics(state, GridSpec(rho_max, nr, nz))
    to_stderr = args.output in (None, "-")
    stream = sys.stderr if to_stderr else sys.stdout
    print(f"peak |jphi| = {iso.peak_abs_jphi:.6e} e c nm^-3 at rho = {iso.peak_rho_nm:.4f} nm, "
          f"z = {iso.peak_z_nm:.4f} nm", file=stream)
    print(f"2/3-peak iso-region: {iso.iso_points} points, fraction inside rho < R = "
          f"{iso.fraction_inside_region_I:.6f}", file=stream)
    return to_csv(cols, table)


def cmd_interact(args) -> str:
    state = _solve(args)
    b = args.b_tesla
    mu_b = constants().bohr_magneton
    quad = interaction_report(state, b)
    closed = interaction_report(state, b, method="closed")
    mask = {"I": RegionMask.REGION_I, "II": RegionMask.REGION_II, "all": RegionMask.ALL}[args.region]
    sign = -1.0 if quad.wave_total_signed < 0 else 1.0
    report = {
        "b_tesla": b,
        "region": args.region,
        "selected_wave_ev": sign * interaction_wave(state, b, mask),
        "selected_particle_ev": interaction_particle(state, b, mask),
        "wave_total_ev": quad.wave_total,
        "wave_total_signed_ev": quad.wave_total_signed,
        "wave_region_I_ev": quad.wave_region_I,
        "wave_region_II_ev": quad.wave_region_II,
        "particle_total_ev": quad.particle_total,
        "particle_region_I_ev": quad.particle_region_I,
        "particle_region_II_ev": quad.particle_region_II,
        "wave_total_over_muB_B": quad.wave_total / (mu_b * b) if b else 0.0,
        "particle_total_over_muB_B": quad.particle_total / (mu_b * b) if b else 0.0,
        "wave_fraction_I": quad.wave_fraction_I,
        "wave_fraction_II": quad.wave_fraction_II,
        "particle_fraction_I": quad.particle_fraction_I,
        "particle_fraction_II": quad.particle_fraction_II,
        "unity_ratio": quad.unity_ratio,
        "epsilon_mev": state.epsilon * 1e3,
        "closed_form": {
            "wave_fraction_I": closed.wave_fraction_I,
            "wave_fraction_II": closed.wave_fraction_II,
            "particle_fraction_I": closed.particle_fraction_I,
            "particle_fraction_II": closed.particle_fraction_II,
            "unity_ratio": closed.unity_ratio,
        },
        "max_abs_quadrature_minus_closed": max(
            abs(getattr(quad, k) - getattr(closed, k))
            for k in ("wave_fraction_I", "wave_fraction_II", "particle_fraction_I",
                      "particle_fraction_II", "unity_ratio")),
        "published_comparison": published_comparison(closed),
        "sign_convention": SIGN_NOTE,
    }
    return _json(report) if args.format == "json" else _flat_csv(_clean(report))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--radius-nm", type=float, default=8.0)
    common.add_argument("--half-height-nm", type=float, default=4.0)
    common.add_argument("--potential-mev", type=float, default=10.0)
    common.add_argument("--n", type=int, default=1, help="radial quantum number")
    common.add_argument("--l", type=int, default=0, help="azimuthal quantum number")
    common.add_argument("--m", type=int, default=1, help="axial quantum number (odd)")
    common.add_argument("--scan-points", type=int, default=2000)
    common.add_argument("--output", "-o", default=None, help="output path (default: stdout)")

    p = argparse.ArgumentParser(prog="cavityspin", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", parents=[common], help="solve one eigenstate, emit a summary")
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("scan", parents=[common], help="matching residual over the bound window")
    s.add_argument("--format", choices=["json", "csv"], default="csv")
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("grid", parents=[common], help="sample densities on a grid (CSV)")
    s.add_argument("--format", choices=["json", "csv"], default="csv")
    s.add_argument("--grid", default="200x200", help="NRxNZ[:NPHI]")
    s.add_argument("--rho-max-nm", type=float, default=None, help="default: 2R")
    s.add_argument("--cartesian", action="store_true", help="emit x,y,z rows with jx, jy")
    s.add_argument("--max-points", type=int, default=5_000_000,
                   help="refuse grids with more rows than this")
    s.set_defaults(func=cmd_grid)

    s = sub.add_parser("interact", parents=[common], help="spin-field interaction report",
                       epilog=SIGN_NOTE)
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.add_argument("--b-tesla", type=float, default=1.0)
    s.add_argument("--region", choices=["I", "II", "all"], default="all")
    s.set_defaults(func=cmd_interact)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.func(args)
        _emit(text, args.output)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"cavityspin: error: {exc}", file=sys.stderr)
        return 2
    except BoundStateError as exc:
        print(f"cavityspin: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
