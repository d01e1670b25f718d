"""Parameter sweeps, figure-style presets, CSV and plot emission.

A sweep evaluates observables of the chain on a 1D or 2D grid.  Grid axes
are either plain ChainParams fields or derived ratios resolved against the
base parameters:

* ``t2_over_t1``      -- absolute t2 = v * t1 (v may be negative)
* ``delta_over_t``    -- locked ratios Delta1 = v * t1 AND Delta2 = v * t2
* ``delta1_over_t1``  -- Delta1 = v * t1 only
* ``delta2_over_t2``  -- Delta2 = v * t2 only
* ``t1_abs``          -- t1 = v holding the absolute t2, Delta1, Delta2 fixed
                         (a plain ``t1`` assignment scales t2, Delta2 with it)

Plain fields are applied first, then derived names in the order listed
above, so e.g. ``delta_over_t`` sees an updated t2.  Observables are
evaluated per point, each guarded individually: a point where the solver
refuses (no steady state) is reported with status ``unstable`` and never
aborts the sweep; other physics-level refusals give status ``error``.

Evaluation order is row-major over the axes (first axis outermost) and the
result slots are preallocated by grid index, so output is deterministic and
independent of the worker count.
"""
from __future__ import annotations

import csv
import math
import re
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .bands import classify_phase
from .chain import (PARAM_KEYS, ChainParams, build_coupling_matrix,
                    sigma_invariants)
from .entanglement import pair_report
from .errors import BosonChainError, UnstableRegime
from .langevin import topo_approx, trivial_approx
from .spectra import assess_stability, bdg_eigenvalues, ssh_eigendecomposition
from .steady import steady_moments

DERIVED_AXES = ("t2_over_t1", "delta_over_t", "delta1_over_t1",
                "delta2_over_t2", "t1_abs")
SCALAR_OBSERVABLES = ("E_N_edge", "phase", "stable", "delta")
VECTOR_OBSERVABLES = ("spectrum", "moments")
_PAIR_RE = re.compile(r"^E_N_pair\((\d+)\s*,\s*(\d+)\)$")

_STATUS_RANK = {"ok": 0, "error": 1, "unstable": 2}


@dataclass(frozen=True)
class SweepAxis:
    """One swept parameter: a uniform range or an explicit value list.

    scale "linear" or "log" (log needs 0 < min <= max).  When ``values`` is
    given it wins and min/max/n_points are ignored.
    """
    name: str
    min: float = 0.0
    max: float = 0.0
    n_points: int = 0
    scale: str = "linear"
    values: tuple[float, ...] | None = None

    def grid(self) -> np.ndarray:
        if self.values is not None:
            return np.asarray(self.values, dtype=float)
        if self.scale == "log":
            return np.geomspace(self.min, self.max, self.n_points)
        return np.linspace(self.min, self.max, self.n_points)


@dataclass(frozen=True)
class SweepSpec:
    """Everything needed to reproduce a sweep deterministically.

    observables: any of E_N_edge, E_N_pair(m,m'), phase, stable, delta,
    spectrum, moments.  engine "exact" solves the dissipative steady state;
    "analytic" routes each point to the resonant closed-form sums of its
    phase (real couplings, mu = 0 only).  locks are (derived_name, value)
    pairs reapplied at every grid point after the axes, e.g. to hold
    Delta1/t1 = Delta2/t2 = 0.6 while t2/t1 sweeps.  companion marks specs
    whose figure carries an analytic twin panel.
    """
    base: ChainParams
    axes: tuple[SweepAxis, ...]
    observables: tuple[str, ...]
    engine: str = "exact"
    locks: tuple[tuple[str, float], ...] = ()
    companion: bool = False
    notes: tuple[str, ...] = ()


@dataclass(eq=False)
class SweepResult:
    """Grid coordinates plus per-point observable values and status.

    values arrays are flat (row-major over the axes) with dtype=object:
    floats for the E_N/delta observables, str for phase, bool for stable,
    complex ndarrays for spectrum/moments, None where evaluation failed.
    """
    spec: SweepSpec
    axis_values: tuple[np.ndarray, ...]
    values: dict[str, np.ndarray]
    status: np.ndarray

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(a.size for a in self.axis_values)

    @property
    def n_points(self) -> int:
        return int(np.prod(self.shape)) if self.shape else 0

    def coordinates(self, flat_index: int) -> tuple[float, ...]:
        idx = np.unravel_index(flat_index, self.shape)
        return tuple(float(ax[i]) for ax, i in zip(self.axis_values, idx))

    def numeric(self, name: str) -> np.ndarray:
        """Float array (grid-shaped) of a scalar observable; NaN where failed."""
        col = self.values[name]
        out = np.full(col.size, np.nan)
        for i, v in enumerate(col):
            if isinstance(v, (bool, np.bool_)):
                out[i] = 1.0 if v else 0.0
            elif isinstance(v, (int, float, np.floating)):
                out[i] = float(v)
        return out.reshape(self.shape)

    def grid(self, name: str) -> np.ndarray:
        return self.values[name].reshape(self.shape)


def _parse_observable(name: str) -> tuple[str, tuple[int, int] | None]:
    """('kind', optional mode pair); raises ValueError on unknown names."""
    if name in SCALAR_OBSERVABLES or name in VECTOR_OBSERVABLES:
        return name, None
    m = _PAIR_RE.match(name)
    if m:
        return "E_N_pair", (int(m.group(1)), int(m.group(2)))
    raise ValueError(
        f"unknown observable {name!r}; expected one of "
        f"{SCALAR_OBSERVABLES + VECTOR_OBSERVABLES} or E_N_pair(m,m')")


def validate_spec(spec: SweepSpec) -> None:
    """Raise ValueError on malformed specs (configuration errors only)."""
    if not 1 <= len(spec.axes) <= 2:
        raise ValueError(f"sweeps take 1 or 2 axes, got {len(spec.axes)}")
    for ax in spec.axes:
        if ax.name not in PARAM_KEYS and ax.name not in DERIVED_AXES:
            raise ValueError(
                f"unknown axis {ax.name!r}; must be a ChainParams field "
                f"{PARAM_KEYS} or a derived ratio {DERIVED_AXES}")
        if ax.values is None:
            if ax.n_points < 0:
                raise ValueError("axis n_points must be >= 0")
            if ax.scale not in ("linear", "log"):
                raise ValueError(f"unknown axis scale {ax.scale!r}")
            if ax.scale == "log" and (ax.min <= 0 or ax.max <= 0):
                raise ValueError("log axes need positive min and max")
    if not spec.observables:
        raise ValueError("at least one observable is required")
    for name in spec.observables:
        _parse_observable(name)
    for name, _ in spec.locks:
        if name not in DERIVED_AXES and name not in PARAM_KEYS:
            raise ValueError(f"unknown lock target {name!r}")
    if spec.engine not in ("exact", "analytic"):
        raise ValueError(f"unknown engine {spec.engine!r}")


def spec_from_dict(d: dict) -> SweepSpec:
    """Build and validate a SweepSpec from plain data (e.g. parsed JSON).

    Expected shape::

        {"base": {"t1": 1.0, "delta1": 0.6, "q_t": 4.0, "q_delta": 4.0,
                  "n_cells": 5, "kappa": 0.01},          # defaults for the rest
         "axes": [{"name": "t2_over_t1", "min": 1.0, "max": 12.0,
                   "n_points": 45}],                      # or {"name": ..., "values": [...]}
         "observables": ["E_N_edge", "phase"],
         "engine": "exact", "locks": [["delta_over_t", 0.6]]}
    """
    if not isinstance(d, dict):
        raise ValueError("sweep spec must be a JSON object")
    for key in ("base", "axes", "observables"):
        if key not in d:
            raise ValueError(f"sweep spec missing {key!r}")
    base_d = dict(d["base"])
    unknown = sorted(set(base_d) - set(PARAM_KEYS))
    if unknown:
        raise ValueError(f"unknown base parameters {unknown}; allowed: {PARAM_KEYS}")
    if "n_cells" in base_d:
        base_d["n_cells"] = int(base_d["n_cells"])
    try:
        base = ChainParams(**base_d)
    except TypeError as exc:
        raise ValueError(f"incomplete base parameters: {exc}") from exc
    axes = []
    for ax in d["axes"]:
        values = ax.get("values")
        axes.append(SweepAxis(
            name=str(ax.get("name", "")),
            min=float(ax.get("min", 0.0)),
            max=float(ax.get("max", 0.0)),
            n_points=int(ax.get("n_points", 0)),
            scale=str(ax.get("scale", "linear")),
            values=None if values is None else tuple(float(v) for v in values)))
    locks = tuple((str(name), float(value)) for name, value in d.get("locks", ()))
    spec = SweepSpec(
        base=base,
        axes=tuple(axes),
        observables=tuple(str(o) for o in d["observables"]),
        engine=str(d.get("engine", "exact")),
        locks=locks,
        companion=bool(d.get("companion", False)),
        notes=tuple(str(n) for n in d.get("notes", ())))
    validate_spec(spec)
    return spec


def spec_to_dict(spec: SweepSpec) -> dict:
    """Inverse of spec_from_dict (round-trips through JSON)."""
    axes = []
    for ax in spec.axes:
        entry = {"name": ax.name}
        if ax.values is None:
            entry.update(min=ax.min, max=ax.max,
                         n_points=ax.n_points, scale=ax.scale)
        else:
            entry["values"] = list(ax.values)
        axes.append(entry)
    return {"base": spec.base.to_dict(),
            "axes": axes,
            "observables": list(spec.observables),
            "engine": spec.engine,
            "locks": [list(lock) for lock in spec.locks],
            "companion": spec.companion,
            "notes": list(spec.notes)}


def resolve_point(base: ChainParams, assignments: dict[str, float]) -> ChainParams:
    """Apply axis/lock assignments to the base parameters (see module docstring)."""
    plain = {k: v for k, v in assignments.items() if k in PARAM_KEYS}
    if "n_cells" in plain:
        plain["n_cells"] = int(round(plain["n_cells"]))
    p = base.replace(**plain) if plain else base
    derived = {k: v for k, v in assignments.items() if k not in PARAM_KEYS}
    if not derived:
        return p
    for k in derived:
        if k not in DERIVED_AXES:
            raise ValueError(f"unknown derived parameter {k!r}")
    t1, d1 = p.t1, p.delta1
    t2, d2 = p.t2, p.delta2
    if "t1_abs" in derived:
        t1 = float(derived["t1_abs"])
    if "t2_over_t1" in derived:
        t2 = derived["t2_over_t1"] * t1
    if "delta_over_t" in derived:
        d1 = derived["delta_over_t"] * t1
        d2 = derived["delta_over_t"] * t2
    if "delta1_over_t1" in derived:
        d1 = derived["delta1_over_t1"] * t1
    if "delta2_over_t2" in derived:
        d2 = derived["delta2_over_t2"] * t2
    return ChainParams.from_absolute(t1, d1, t2, d2, p.n_cells, p.kappa,
                                     n_th=p.n_th, mu=p.mu)


class _PointEval:
    """Per-point observable evaluation with a shared lazy steady state."""

    def __init__(self, params: ChainParams, engine: str):
        self.params = params
        self.engine = engine
        self._state = None

    def state(self):
        if self._state is None:
            if self.engine == "exact":
                self._state = steady_moments(self.params)
            else:
                s = sigma_invariants(self.params)
                if s.sigma1 < s.sigma2:
                    self._state = topo_approx(self.params).as_moment_state()
                else:
                    self._state = trivial_approx(self.params).as_moment_state()
        return self._state

    def __call__(self, kind: str, pair):
        p = self.params
        if kind == "E_N_edge":
            return pair_report(self.state(), 1, p.n_modes).E_N
        if kind == "E_N_pair":
            return pair_report(self.state(), pair[0], pair[1]).E_N
        if kind == "phase":
            return classify_phase(p).phase
        if kind == "stable":
            return bool(assess_stability(p).stable)
        if kind == "delta":
            dec = ssh_eigendecomposition(build_coupling_matrix(p))
            N = p.n_cells
            return float(0.5 * (dec.lambdas[N] - dec.lambdas[N - 1]))
        if kind == "spectrum":
            ev = bdg_eigenvalues(p)
            return np.array(sorted(ev, key=lambda z: (z.real, z.imag)))
        if kind == "moments":
            st = self.state()
            return np.concatenate([st.F.ravel(), st.G.ravel()])
        raise ValueError(f"unknown observable kind {kind!r}")


def _evaluate(params: ChainParams, engine: str,
              requests) -> tuple[list, str]:
    ev = _PointEval(params, engine)
    out, status = [], "ok"
    for kind, pair in requests:
        try:
            out.append(ev(kind, pair))
        except UnstableRegime:
            out.append(None)
            status = "unstable"
        except (BosonChainError, ValueError, ZeroDivisionError,
                np.linalg.LinAlgError):
            out.append(None)
            if status == "ok":
                status = "error"
    return out, status


def run_sweep(spec: SweepSpec, workers: int = 1) -> SweepResult:
    """Evaluate the grid; unstable points are reported, never fatal.

    Per-point warnings (degraded approximations, slow convergence, numpy
    overflow) are suppressed during the sweep; call the single-point APIs
    to see them.  Results are bit-identical for any worker count.
    """
    validate_spec(spec)
    axis_vals = tuple(ax.grid() for ax in spec.axes)
    shape = tuple(a.size for a in axis_vals)
    n_total = int(np.prod(shape)) if shape else 0
    requests = [_parse_observable(name) for name in spec.observables]
    lock_map = dict(spec.locks)

    values = {name: np.empty(n_total, dtype=object) for name in spec.observables}
    status = np.empty(n_total, dtype=object)

    def eval_one(flat: int) -> None:
        idx = np.unravel_index(flat, shape)
        assignments = {ax.name: float(axis_vals[d][i])
                       for d, (ax, i) in enumerate(zip(spec.axes, idx))}
        assignments.update(lock_map)
        try:
            params = resolve_point(spec.base, assignments)
        except (BosonChainError, ValueError):
            for name in spec.observables:
                values[name][flat] = None
            status[flat] = "error"
            return
        row, st = _evaluate(params, spec.engine, requests)
        for name, v in zip(spec.observables, row):
            values[name][flat] = v
        status[flat] = st

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        if workers <= 1 or n_total <= 1:
            for flat in range(n_total):
                eval_one(flat)
        else:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                list(pool.map(eval_one, range(n_total)))
    return SweepResult(spec=spec, axis_values=axis_vals,
                       values=values, status=status)


# ---------------------------------------------------------------------------
# CSV emission: header = axes, observables, status; floats with 17 significant
# digits so a parse-back reproduces every value bit-exactly.

def _fmt_float(x: float) -> str:
    return f"{x:.17g}"


def _fmt_complex(z: complex) -> str:
    return f"{z.real:.17g}{z.imag:+.17g}j"


def _fmt_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "True" if v else "False"
    if isinstance(v, str):
        return v
    if isinstance(v, (complex, np.complexfloating)):
        return _fmt_complex(complex(v))
    if isinstance(v, (int, float, np.integer, np.floating)):
        return _fmt_float(float(v))
    if isinstance(v, np.ndarray):
        return ";".join(_fmt_complex(complex(z)) for z in v.ravel())
    raise TypeError(f"cannot format {type(v).__name__} for CSV")


def write_csv(result: SweepResult, path) -> None:
    """Row-major CSV: axis coordinates, observable columns, status last.

    path may be a filesystem path or an open text stream.
    """
    def emit(fh):
        w = csv.writer(fh, lineterminator="\n")
        w.writerow([ax.name for ax in result.spec.axes]
                   + list(result.spec.observables) + ["status"])
        for flat in range(result.n_points):
            row = [_fmt_float(c) for c in result.coordinates(flat)]
            row += [_fmt_cell(result.values[name][flat])
                    for name in result.spec.observables]
            row.append(result.status[flat])
            w.writerow(row)

    if hasattr(path, "write"):
        emit(path)
    else:
        with open(path, "w", newline="") as fh:
            emit(fh)


def _parse_cell(cell: str):
    if cell == "":
        return None
    if cell == "True":
        return True
    if cell == "False":
        return False
    if ";" in cell or cell.endswith("j"):
        return np.array([complex(tok) for tok in cell.split(";")])
    try:
        return float(cell)
    except ValueError:
        return cell


def read_csv(path) -> tuple[list[str], list[list]]:
    """Parse a sweep CSV back into typed cells (the round-trip oracle)."""
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    header, body = rows[0], rows[1:]
    return header, [[_parse_cell(c) for c in row] for row in body]


def render_plot(result: SweepResult, path, phase_boundary: bool | None = None) -> None:
    """Line plot (1D) or heat map (2D) of the sweep.

    2D plots put the second axis on x (row-major image) and can overlay the
    phase boundary (sigma1 = sigma2 contour of the resolved grid);
    phase_boundary=None draws it whenever the sweep is 2D.  Plots are a
    convenience view; the CSV is the contract.
    """
    import matplotlib
    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt

    scalars = [n for n in result.spec.observables
               if _parse_observable(n)[0] in ("E_N_edge", "E_N_pair", "delta", "stable")]
    if len(result.axis_values) == 1:
        x = result.axis_values[0]
        xname = result.spec.axes[0].name
        if scalars:
            fig, ax = plt.subplots(figsize=(6, 4))
            for name in scalars:
                ax.plot(x, result.numeric(name), marker=".", label=name)
            ax.set_xlabel(xname)
            ax.legend()
        elif "spectrum" in result.spec.observables:
            fig, (ax_r, ax_i) = plt.subplots(1, 2, figsize=(9, 4))
            for i, xv in enumerate(x):
                ev = result.values["spectrum"][i]
                if ev is None:
                    continue
                ax_r.plot(np.full(ev.size, xv), ev.real, "k.", ms=2)
                ax_i.plot(np.full(ev.size, xv), ev.imag, "k.", ms=2)
            ax_r.set_xlabel(xname)
            ax_i.set_xlabel(xname)
            ax_r.set_ylabel("Re xi")
            ax_i.set_ylabel("Im xi")
        else:
            raise ValueError("no plottable observable in this sweep")
    else:
        if not scalars:
            raise ValueError("2D plots need a scalar observable")
        name = scalars[0]
        Z = result.numeric(name)
        y, x = result.axis_values
        fig, ax = plt.subplots(figsize=(6, 4.5))
        pm = ax.pcolormesh(x, y, Z, shading="nearest")
        fig.colorbar(pm, ax=ax, label=name)
        ax.set_xlabel(result.spec.axes[1].name)
        ax.set_ylabel(result.spec.axes[0].name)
        if phase_boundary is None:
            phase_boundary = True
        if phase_boundary:
            mask = np.zeros(result.shape)
            lock_map = dict(result.spec.locks)
            for flat in range(result.n_points):
                idx = np.unravel_index(flat, result.shape)
                assignments = {ax_.name: float(result.axis_values[d][i])
                               for d, (ax_, i) in enumerate(zip(result.spec.axes, idx))}
                assignments.update(lock_map)
                try:
                    s = sigma_invariants(resolve_point(result.spec.base, assignments))
                    mask[idx] = 1.0 if (0 < s.sigma1 < s.sigma2) else 0.0
                except (BosonChainError, ValueError):
                    mask[idx] = 0.0
            if 0.0 < mask.mean() < 1.0:
                ax.contour(x, y, mask, levels=[0.5], colors="lime", linewidths=1.5)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


# ---------------------------------------------------------------------------
# Figure-style presets.  Captions pin the physics parameters; plot extents and
# legend values the captions omit are chosen as the natural stable windows and
# tagged "range assumed" in the notes.

def _base(n_cells=5, kappa=0.01, **kw) -> ChainParams:
    defaults = dict(t1=1.0, delta1=0.6, q_t=4.0, q_delta=4.0,
                    n_cells=n_cells, kappa=kappa)
    defaults.update(kw)
    return ChainParams(**defaults)


def _preset_fig1() -> SweepSpec:
    return SweepSpec(
        base=_base(),
        axes=(SweepAxis("t2_over_t1", 0.2, 5.0, 41),
              SweepAxis("delta_over_t", 0.05, 0.9, 41)),
        observables=("E_N_edge", "phase", "stable"),
        notes=("range assumed: t2/t1 in [0.2, 5] and Delta/t in [0.05, 0.9], "
               "41x41 (sketch panel gives no extents)",))


def _preset_fig2() -> SweepSpec:
    base = ChainParams.from_absolute(t1=1.0, delta1=0.6, t2=0.8, delta2=0.0,
                                     n_cells=10, kappa=0.01)
    return SweepSpec(
        base=base,
        axes=(SweepAxis("t1_abs", 0.65, 1.4, 76),),
        observables=("spectrum", "phase"),
        notes=("range assumed: t1 in [0.65, 1.4], 76 points (panel extents "
               "straddle the transition at t1 = 1)",))


def _preset_fig3() -> SweepSpec:
    return SweepSpec(
        base=_base(),
        axes=(SweepAxis("delta1_over_t1", -0.99, 0.99, 41),
              SweepAxis("delta2_over_t2", -0.99, 0.99, 41)),
        observables=("E_N_edge", "phase"),
        companion=True,
        notes=("range assumed: both ratio axes in [-0.99, 0.99], 41x41 "
               "(panel extents not given; |ratio| -> 1 is the stability edge)",
               "companion analytic sweep reproduces panel (b)"))


def _preset_fig4() -> SweepSpec:
    return SweepSpec(
        base=_base(),
        axes=(SweepAxis("delta_over_t", 0.05, 0.9, 41),
              SweepAxis("t2_over_t1", 1.0, 12.0, 45)),
        observables=("E_N_edge", "phase"),
        companion=True,
        notes=("range assumed: Delta/t in [0.05, 0.9] (41) x t2/t1 in [1, 12] "
               "(45); captions pin N = 5, kappa = 0.01",
               "companion analytic sweep reproduces panel (b)"))


def _preset_fig5a() -> SweepSpec:
    return SweepSpec(
        base=_base(),
        axes=(SweepAxis("kappa", values=(0.01, 0.1, 0.3)),
              SweepAxis("t2_over_t1", 1.0, 12.0, 45)),
        observables=("E_N_edge",),
        locks=(("delta_over_t", 0.6),),
        notes=("range assumed: t2/t1 in [1, 12], 45 points; kappa legend "
               "values {0.01, 0.1, 0.3}",))


def _preset_fig5b() -> SweepSpec:
    return SweepSpec(
        base=_base(),
        axes=(SweepAxis("n_cells", values=(2, 3, 5, 8)),
              SweepAxis("t2_over_t1", 1.0, 12.0, 45)),
        observables=("E_N_edge",),
        locks=(("delta_over_t", 0.6),),
        notes=("range assumed: t2/t1 in [1, 12], 45 points; N legend values "
               "{2, 3, 5, 8}",))


def _preset_fig5c() -> SweepSpec:
    return SweepSpec(
        base=_base(),
        axes=(SweepAxis("n_th", 0.0, 0.2, 41),),
        observables=("E_N_edge",),
        notes=("inset scan: E_N versus n_th at t2/t1 = 4",
               "range assumed: n_th in [0, 0.2], 41 points (covers the decay "
               "to zero near n_th ~ 0.1)"))


def _preset_fig5d() -> SweepSpec:
    return SweepSpec(
        base=_base(),
        axes=(SweepAxis("mu", values=(0.0, 0.1, 0.3)),
              SweepAxis("t2_over_t1", 1.0, 12.0, 45)),
        observables=("E_N_edge", "stable"),
        locks=(("delta_over_t", 0.6),),
        notes=("range assumed: t2/t1 in [1, 12], 45 points; mu legend values "
               "{0, 0.1, 0.3}",
               "unstable points are reported via the stable column and "
               "status, matching the dashed no-solution region"))


def _preset_fig6a() -> SweepSpec:
    return SweepSpec(
        base=_base(),
        axes=(SweepAxis("phi_t", 0.0, 2.0 * math.pi, 81),),
        observables=("E_N_edge",),
        notes=("phi_t in [0, 2*pi], 81 points (point count assumed); "
               "caption pins t1 = 1, |t2| = 4, ratio 0.6, kappa = 0.01, N = 5",))


def _preset_fig6b() -> SweepSpec:
    spec = _preset_fig6a()
    return replace(spec,
                   axes=(SweepAxis("phi_delta", 0.0, 2.0 * math.pi, 81),),
                   notes=("phi_delta in [0, 2*pi], 81 points (point count "
                          "assumed); other parameters as the phi_t scan",))


_PRESETS = {
    "fig1": _preset_fig1, "fig2": _preset_fig2, "fig3": _preset_fig3,
    "fig4": _preset_fig4, "fig5a": _preset_fig5a, "fig5b": _preset_fig5b,
    "fig5c": _preset_fig5c, "fig5d": _preset_fig5d,
    "fig6a": _preset_fig6a, "fig6b": _preset_fig6b,
}

PRESET_NAMES = tuple(sorted(_PRESETS))


def preset(name: str) -> SweepSpec:
    """The parameter grid of a named figure scan (engine always exact)."""
    try:
        builder = _PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; choose from {PRESET_NAMES}") from None
    return builder()


def companion_spec(spec: SweepSpec) -> SweepSpec:
    """The analytic twin of an exact sweep (same grid, engine swapped)."""
    return replace(spec, engine="analytic", companion=False,
                   notes=spec.notes + ("analytic companion",))
