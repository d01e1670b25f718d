"""Command-line front end: spectra, steady states, entanglement, sweeps.

Usage is ``bosonchain <subcommand> [flags]`` with

spectrum   open-chain dynamical eigenvalues, optionally swept along t1
bloch      periodic dispersion: the four xi^2 branches across the zone
gbz        non-Bloch band: xi and the two root-pair moduli |beta|
steady     exact stationary moments (or the quadrature covariance)
analytic   closed-form stationary moments (full sums or approximations)
entangle   logarithmic negativity of one mode pair
sweep      grid scan driven by a JSON spec file
preset     bundled figure-style scans (``preset --list`` to enumerate)

Common flags: --params FILE (chain parameters as strict JSON, needed by the
single-point commands), --out PATH (default: CSV to stdout), --format
{csv,plot} (plots need --out and only sweeps/presets have one), --workers N.

Exit codes: 0 success; 2 configuration error (bad flags, malformed files,
physics refusals other than instability); 3 instability refusal from a
single-point command.  Sweeps and presets record unstable grid points in
their status column and exit 0.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from dataclasses import replace

import numpy as np

from .bands import bloch_spectrum, gbz_spectrum
from .chain import ChainParams, validate
from .entanglement import pair_report
from .errors import BosonChainError, UnstableRegime
from .langevin import (edge_reduced, exact_sums, topo_approx,
                       trivial_approx, two_mode_closed_form)
from .spectra import bdg_eigenvalues
from .steady import steady_moments, to_quadrature_covariance
from .sweep import (PRESET_NAMES, SweepAxis, _fmt_cell, companion_spec,
                    preset, render_plot, resolve_point, run_sweep,
                    spec_from_dict, write_csv)

_ANALYTIC_METHODS = {
    "exact": exact_sums,
    "trivial": trivial_approx,
    "topo": topo_approx,
    "edge": edge_reduced,
    "two-mode": two_mode_closed_form,
}


# ---------------------------------------------------------------- helpers

def _load_params(path: str | None) -> ChainParams:
    if path is None:
        raise ValueError("this command needs --params FILE")
    with open(path) as fh:
        params = ChainParams.from_json(fh.read())
    verdict = validate(params)
    if not verdict.ok:
        raise ValueError("invalid parameters: " + "; ".join(verdict.violations))
    return params


def _emit(out_path: str | None, header: list, rows) -> None:
    """Write one CSV table to a file or stdout (17-digit round-trip floats)."""
    def write(fh):
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt_cell(c) if not isinstance(c, (str, int)) else c
                        for c in row])

    if out_path is None:
        write(sys.stdout)
    else:
        with open(out_path, "w", newline="") as fh:
            write(fh)


def _moment_rows(F: np.ndarray, G: np.ndarray):
    n = F.shape[0]
    for m in range(n):
        for mp in range(n):
            yield [m + 1, mp + 1,
                   float(F[m, mp].real), float(F[m, mp].imag),
                   float(G[m, mp].real), float(G[m, mp].imag)]


def _parse_pair(text: str | None, n_modes: int) -> tuple[int, int]:
    if text is None:
        return 1, n_modes
    try:
        a, b = (int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"--pair expects two integers 'm,mp', got {text!r}")
    return a, b


def _companion_path(path: str) -> str:
    root, ext = os.path.splitext(path)
    return f"{root}.analytic{ext or '.csv'}"


def _thin(spec, k: int):
    """Keep every k-th grid point of each axis (quick-look runs)."""
    if k < 1:
        raise ValueError("--thin must be >= 1")
    if k == 1:
        return spec
    axes = tuple(SweepAxis(name=ax.name, values=tuple(ax.grid()[::k]))
                 for ax in spec.axes)
    return replace(spec, axes=axes)


# ------------------------------------------------------------- commands

def cmd_spectrum(args, params: ChainParams) -> int:
    def eigrows(p, prefix):
        xs = sorted(bdg_eigenvalues(p), key=lambda z: (z.real, z.imag))
        for i, x in enumerate(xs):
            yield prefix + [i, x.real, x.imag]

    if args.sweep_t1 is not None:
        lo, hi, n = args.sweep_t1
        rows = (row for v in np.linspace(lo, hi, int(n))
                for row in eigrows(resolve_point(params, {"t1_abs": v}), [float(v)]))
        _emit(args.out, ["t1", "index", "re_xi", "im_xi"], rows)
    else:
        _emit(args.out, ["index", "re_xi", "im_xi"], eigrows(params, []))
    return 0


def cmd_bloch(args, params: ChainParams) -> int:
    header = ["k"]
    for j in range(1, 5):
        header += [f"re_xi2_{j}", f"im_xi2_{j}"]

    def rows():
        for k in np.linspace(-math.pi, math.pi, args.n_k):
            sample = bloch_spectrum(params, float(k))
            row = [float(k)]
            for z in sample.xi_squared:
                row += [z.real, z.imag]
            yield row

    _emit(args.out, header, rows())
    return 0


def cmd_gbz(args, params: ChainParams) -> int:
    g = gbz_spectrum(params, n_samples=args.n_xi)
    rows = ([float(x), float(b1), float(b2)]
            for x, b1, b2 in zip(g.xi, g.abs_beta_pair1, g.abs_beta_pair2))
    _emit(args.out, ["xi", "abs_beta_pair1", "abs_beta_pair2"], rows)
    return 0


def cmd_steady(args, params: ChainParams) -> int:
    state = steady_moments(params)
    if args.covariance:
        V = to_quadrature_covariance(state)
        rows = ([i + 1, j + 1, float(V[i, j])]
                for i in range(V.shape[0]) for j in range(V.shape[1]))
        _emit(args.out, ["i", "j", "V"], rows)
    else:
        _emit(args.out, ["m", "m_prime", "re_F", "im_F", "re_G", "im_G"],
              _moment_rows(state.F, state.G))
    return 0


def cmd_analytic(args, params: ChainParams) -> int:
    am = _ANALYTIC_METHODS[args.method](params)
    _emit(args.out,
          ["m", "m_prime", "re_F_tilde", "im_F_tilde", "re_G_tilde", "im_G_tilde"],
          _moment_rows(am.F_tilde, am.G_tilde))
    return 0


def cmd_entangle(args, params: ChainParams) -> int:
    m, mp = _parse_pair(args.pair, params.n_modes)
    rep = pair_report(steady_moments(params), m, mp)
    _emit(args.out, ["K1", "K2", "K3", "eta_minus", "E_N", "entangled"],
          [[rep.K1, rep.K2, rep.K3, rep.eta_minus, rep.E_N, rep.entangled]])
    return 0


def cmd_sweep(args) -> int:
    with open(args.spec) as fh:
        spec = spec_from_dict(json.load(fh))
    result = run_sweep(spec, workers=args.workers)
    if args.format == "plot":
        render_plot(result, args.out)
    elif args.out is None:
        write_csv(result, sys.stdout)
    else:
        write_csv(result, args.out)
    return 0


def cmd_preset(args) -> int:
    if args.list:
        for name in PRESET_NAMES:
            print(name)
        return 0
    if args.name is None:
        raise ValueError("preset needs a name (or --list)")
    spec = _thin(preset(args.name), args.thin)
    result = run_sweep(spec, workers=args.workers)
    emit_fn = render_plot if args.format == "plot" else write_csv
    if args.out is None:
        write_csv(result, sys.stdout)
    else:
        emit_fn(result, args.out)
    if spec.companion:
        if args.out is None:
            print("note: analytic companion skipped (needs --out)", file=sys.stderr)
        else:
            twin = run_sweep(companion_spec(spec), workers=args.workers)
            emit_fn(twin, _companion_path(args.out))
    return 0


# --------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--params", metavar="FILE",
                        help="chain parameters as JSON (all ten keys)")
    common.add_argument("--out", metavar="PATH",
                        help="output file (default: CSV to stdout)")
    common.add_argument("--format", choices=("csv", "plot"), default="csv",
                        help="plots need --out; sweep/preset only")
    common.add_argument("--workers", type=int, default=1,
                        help="threads for sweep evaluation")

    parser = argparse.ArgumentParser(
        prog="bosonchain",
        description="Spectra, steady states and edge entanglement of the "
                    "dissipative squeezed bosonic chain.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common],
                       help="open-chain dynamical eigenvalues")
    p.add_argument("--sweep-t1", nargs=3, type=float, metavar=("MIN", "MAX", "N"),
                   help="scan t1 holding the absolute t2, Delta1, Delta2 fixed")
    p.set_defaults(func=cmd_spectrum, needs_params=True)

    p = sub.add_parser("bloch", parents=[common],
                       help="periodic dispersion across the Brillouin zone")
    p.add_argument("--n-k", type=int, default=201, metavar="N",
                   help="momentum samples over [-pi, pi]")
    p.set_defaults(func=cmd_bloch, needs_params=True)

    p = sub.add_parser("gbz", parents=[common],
                       help="non-Bloch band: root-pair moduli vs xi")
    p.add_argument("--n-xi", type=int, default=201, metavar="N",
                   help="band samples between the band edges")
    p.set_defaults(func=cmd_gbz, needs_params=True)

    p = sub.add_parser("steady", parents=[common],
                       help="exact stationary moments (original frame)")
    p.add_argument("--covariance", action="store_true",
                   help="emit the interleaved (x1,p1,...) covariance instead")
    p.set_defaults(func=cmd_steady, needs_params=True)

    p = sub.add_parser("analytic", parents=[common],
                       help="closed-form stationary moments (squeezed frame)")
    p.add_argument("--method", choices=sorted(_ANALYTIC_METHODS), default="exact",
                   help="full sums, phase approximations, edge window or "
                        "the single-cell closed form")
    p.set_defaults(func=cmd_analytic, needs_params=True)

    p = sub.add_parser("entangle", parents=[common],
                       help="logarithmic negativity of one mode pair")
    p.add_argument("--pair", metavar="M,M'",
                   help="1-based mode labels (default: the edge pair 1,2N)")
    p.set_defaults(func=cmd_entangle, needs_params=True)

    p = sub.add_parser("sweep", parents=[common],
                       help="grid scan from a JSON spec file")
    p.add_argument("--spec", metavar="FILE", required=True,
                   help="sweep spec (see bosonchain.sweep.spec_from_dict)")
    p.set_defaults(func=cmd_sweep, needs_params=False)

    p = sub.add_parser("preset", parents=[common],
                       help="bundled figure-style scans")
    p.add_argument("name", nargs="?", help="preset name (see --list)")
    p.add_argument("--list", action="store_true", help="print preset names")
    p.add_argument("--thin", type=int, default=1, metavar="K",
                   help="keep every K-th grid point (quick look)")
    p.set_defaults(func=cmd_preset, needs_params=False)

    return parser


def _dispatch(args) -> int:
    if args.format == "plot":
        if args.command not in ("sweep", "preset"):
            raise ValueError("--format plot is only available for sweep and preset")
        if args.out is None:
            raise ValueError("--format plot needs --out PATH")
    if args.workers < 1:
        raise ValueError("--workers must be >= 1")
    if args.needs_params:
        return args.func(args, _load_params(args.params))
    return args.func(args)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:        # argparse already printed the message
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return _dispatch(args)
    except UnstableRegime as exc:
        print(f"unstable: {exc}", file=sys.stderr)
        return 3
    except (BosonChainError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
