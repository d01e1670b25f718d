"""Parameters and lattice builders for an open bosonic quadratic chain.

The chain alternates intracell / intercell beam-splitter couplings (t1, t2)
and two-mode-squeezing couplings (Delta1, Delta2) on 2N modes:

    H = sum_j [ t1 a+_{2j-1} a_{2j} + Delta1 a+_{2j-1} a+_{2j} + h.c. ]
      + sum_j [ t2 a+_{2j+1} a_{2j} + Delta2 a+_{2j+1} a+_{2j} + h.c. ]
      + mu sum_j a+_j a_j

with t2 = q_t * t1 * exp(i*phi_t) and Delta2 = q_delta * Delta1 * exp(i*phi_delta).

Conventions used throughout the package:

* doubled (Bogoliubov) basis A = (a_1..a_2N, a+_1..a+_2N); the quadratic form
  is H = (1/2) A+ H_M A + const with H_M = [[h, D], [D*, h*]], h Hermitian,
  D symmetric; excitation energies are eigenvalues of tau_z H_M.
* the gap/phase structure is controlled by three quadratic invariants
  sigma1 = t1^2 - Delta1^2, sigma2 = |t2|^2 - |Delta2|^2,
  sigma3 = Re(t2) t1 - Re(Delta2) Delta1.
* for real couplings inside the stable region (sigma1, sigma2 > 0) a local
  symplectic rescaling x -> e^-r x, p -> e^r p with site-dependent r_j maps
  the chain onto a plain hopping (SSH) chain with couplings
  t_j' = sqrt(t_j^2 - Delta_j^2), carrying the sign of t_j.
"""
from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from .errors import AnalyticUnsupported, UnstableRegime

PARAM_KEYS = (
    "t1", "delta1", "q_t", "q_delta", "phi_t", "phi_delta",
    "n_cells", "kappa", "n_th", "mu",
)

_REAL_PHASE_TOL = 1e-12


@dataclass(frozen=True)
class ChainParams:
    """All physical knobs of the chain.

    Couplings are stored in ratio form (q_t = |t2|/t1, q_delta = |Delta2|/Delta1,
    relative phases phi_t, phi_delta). ``delta2_abs`` holds Delta2 directly for
    the one case the ratio form cannot express (delta1 = 0 with Delta2 != 0);
    it is not part of the JSON schema.
    """

    t1: float
    delta1: float
    q_t: float
    q_delta: float
    n_cells: int
    kappa: float
    phi_t: float = 0.0
    phi_delta: float = 0.0
    n_th: float = 0.0
    mu: float = 0.0
    delta2_abs: complex | None = field(default=None)

    @property
    def n_modes(self) -> int:
        return 2 * self.n_cells

    @property
    def t2(self) -> complex:
        return self.q_t * self.t1 * cmath.exp(1j * self.phi_t)

    @property
    def delta2(self) -> complex:
        if self.delta2_abs is not None:
            return complex(self.delta2_abs)
        return self.q_delta * self.delta1 * cmath.exp(1j * self.phi_delta)

    @classmethod
    def from_absolute(cls, t1, delta1, t2, delta2, n_cells, kappa,
                      n_th=0.0, mu=0.0) -> "ChainParams":
        """Build params from absolute (possibly complex) t2, Delta2.

        delta1 = 0 with Delta2 != 0 has no ratio representation; Delta2 is
        then stored directly and q_delta is left at 0 (unused).
        """
        t1 = float(t1)
        delta1 = float(delta1)
        t2 = complex(t2)
        delta2 = complex(delta2)
        if t1 == 0.0:
            raise ValueError("t1 sets the scale and must be nonzero")
        q_t = abs(t2 / t1)
        phi_t = cmath.phase(t2 / t1) if q_t > 0 else 0.0
        if delta1 != 0.0:
            q_delta = abs(delta2 / delta1)
            phi_delta = cmath.phase(delta2 / delta1) if q_delta > 0 else 0.0
            extra = None
        else:
            q_delta, phi_delta = 0.0, 0.0
            extra = delta2 if delta2 != 0 else None
        return cls(t1=t1, delta1=delta1, q_t=q_t, q_delta=q_delta,
                   n_cells=int(n_cells), kappa=float(kappa),
                   phi_t=phi_t, phi_delta=phi_delta,
                   n_th=float(n_th), mu=float(mu), delta2_abs=extra)

    def to_dict(self) -> dict:
        if self.delta2_abs is not None:
            raise ValueError(
                "params with a direct Delta2 override (delta1=0, Delta2!=0) "
                "have no ratio representation and cannot be serialized")
        d = {k: getattr(self, k) for k in PARAM_KEYS}
        d["n_cells"] = int(d["n_cells"])
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ChainParams":
        keys = set(d)
        if keys != set(PARAM_KEYS):
            missing = sorted(set(PARAM_KEYS) - keys)
            extra = sorted(keys - set(PARAM_KEYS))
            raise ValueError(f"params object must have exactly keys {PARAM_KEYS}; "
                             f"missing {missing}, unexpected {extra}")
        return cls(t1=float(d["t1"]), delta1=float(d["delta1"]),
                   q_t=float(d["q_t"]), q_delta=float(d["q_delta"]),
                   n_cells=int(d["n_cells"]), kappa=float(d["kappa"]),
                   phi_t=float(d["phi_t"]), phi_delta=float(d["phi_delta"]),
                   n_th=float(d["n_th"]), mu=float(d["mu"]))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "ChainParams":
        return cls.from_dict(json.loads(text))

    def replace(self, **kw) -> "ChainParams":
        vals = {k: getattr(self, k) for k in PARAM_KEYS}
        vals["delta2_abs"] = self.delta2_abs
        vals.update(kw)
        return ChainParams(**vals)


@dataclass(frozen=True)
class ValidationVerdict:
    ok: bool
    violations: tuple[str, ...] = ()
    flags: tuple[str, ...] = ()


@dataclass(frozen=True)
class SigmaInvariants:
    """Gap-controlling quadratic invariants (see module docstring)."""
    sigma1: float
    sigma2: float
    sigma3: float

    def astuple(self):
        return (self.sigma1, self.sigma2, self.sigma3)


@dataclass(eq=False)
class SqueezeTransform:
    """Site-dependent squeezing parameters r_j (1-indexed site k -> r[k-1]).

    r_a, r_b are the cell/bond squeezing increments fixed by
    e^{2 r_a} = (t1+Delta1)/(t1-Delta1), e^{2 r_b} = (t2+Delta2)/(t2-Delta2);
    the free offset r_0 is fixed by mirror symmetry r_1 = r_2N.
    """
    r_a: float
    r_b: float
    r_0: float
    r: NDArray[np.float64]


@dataclass(eq=False)
class BdgMatrix:
    """Doubled-basis quadratic-form matrix and its signature.

    ``matrix`` is H_M over (a, a+); ``tau_z`` the diag(+1, -1) signature.
    The dynamical (excitation) spectrum is eig(tau_z @ matrix).
    """
    matrix: NDArray[np.complex128]
    tau_z: NDArray[np.float64]

    @property
    def dynamical(self) -> NDArray[np.complex128]:
        return self.tau_z @ self.matrix

    def chiral(self) -> NDArray[np.float64]:
        """Sublattice chiral operator; anticommutes with H_M at mu=0."""
        n = self.matrix.shape[0] // 2
        signs = np.array([1.0 if j % 2 == 0 else -1.0 for j in range(n)])
        return np.diag(np.concatenate([signs, signs]))


def validate(params: ChainParams) -> ValidationVerdict:
    """Check parameter sanity; never raises.

    Flags ``analytic-restricted`` when the relative phases are not 0 or pi
    (the closed-form Langevin engine refuses such inputs; the exact solver
    still handles them).
    """
    bad: list[str] = []
    if params.n_cells < 1:
        bad.append("n_cells ≥ 1")
    if params.kappa < 0:
        bad.append("kappa ≥ 0")
    if params.n_th < 0:
        bad.append("n_th ≥ 0")
    if params.q_t < 0:
        bad.append("q_t ≥ 0")
    if params.q_delta < 0:
        bad.append("q_delta ≥ 0")
    for name in ("t1", "delta1", "q_t", "q_delta", "phi_t", "phi_delta",
                 "kappa", "n_th", "mu"):
        if not math.isfinite(getattr(params, name)):
            bad.append(f"{name} finite")
    flags: list[str] = []
    if not has_real_couplings(params):
        flags.append("analytic-restricted")
    return ValidationVerdict(ok=not bad, violations=tuple(bad), flags=tuple(flags))


def has_real_couplings(params: ChainParams, tol: float = _REAL_PHASE_TOL) -> bool:
    """True when both relative phases fold to a sign (0 or pi mod 2pi)."""
    scale = abs(params.t2) + abs(params.delta2) + abs(params.t1) + abs(params.delta1)
    return (abs(params.t2.imag) <= tol * (1 + scale)
            and abs(params.delta2.imag) <= tol * (1 + scale))


def real_couplings(params: ChainParams) -> tuple[float, float, float, float]:
    """(t1, Delta1, t2, Delta2) as signed reals; raises if phases are not 0/pi."""
    if not has_real_couplings(params):
        raise AnalyticUnsupported(
            "couplings are not real (relative phases must be 0 or pi)")
    return (params.t1, params.delta1, params.t2.real, params.delta2.real)


def sigma_invariants(params: ChainParams) -> SigmaInvariants:
    """The three quadratic invariants controlling phase, stability and skin effect."""
    t2, d2 = params.t2, params.delta2
    s1 = params.t1 ** 2 - params.delta1 ** 2
    s2 = abs(t2) ** 2 - abs(d2) ** 2
    s3 = t2.real * params.t1 - d2.real * params.delta1
    return SigmaInvariants(s1, s2, s3)


def effective_couplings(params: ChainParams) -> tuple[float, float]:
    """Hopping strengths (t1', t2') of the squeezed-frame SSH chain, both > 0.

    Raises UnstableRegime when either squared coupling t_j^2 - Delta_j^2 is
    non-positive (the chain has no stable squeezed-frame description).
    """
    t1, d1, t2, d2 = real_couplings(params)
    s1 = t1 * t1 - d1 * d1
    s2 = t2 * t2 - d2 * d2
    if s1 <= 0 or s2 <= 0:
        raise UnstableRegime(
            f"effective couplings undefined: t1^2-Delta1^2={s1:g}, "
            f"t2^2-Delta2^2={s2:g} (both must be > 0)")
    return math.sqrt(s1), math.sqrt(s2)


def coupling_signs(params: ChainParams) -> tuple[float, float]:
    """Signs carried by the squeezed-frame couplings (negative at phase pi)."""
    t1, _, t2, _ = real_couplings(params)
    return (1.0 if t1 >= 0 else -1.0, 1.0 if t2 >= 0 else -1.0)


def squeeze_transform(params: ChainParams) -> SqueezeTransform:
    """Per-site squeezing parameters mapping the chain to a plain SSH chain.

    r alternates with cell index as r_{2j-1} = (j-1)(r_b - r_a) + r_0,
    r_{2j} = -j (r_b - r_a) + r_b - r_0, with r_0 = [r_b - N(r_b - r_a)]/2
    fixed by the mirror symmetry r_1 = r_{2N}.
    """
    t1, d1, t2, d2 = real_couplings(params)
    s1 = t1 * t1 - d1 * d1
    s2 = t2 * t2 - d2 * d2
    if s1 <= 0 or s2 <= 0:
        raise UnstableRegime(
            f"squeezing transform undefined outside the stable region "
            f"(t1^2-Delta1^2={s1:g}, t2^2-Delta2^2={s2:g})")
    r_a = 0.5 * math.log((t1 + d1) / (t1 - d1))
    r_b = 0.5 * math.log((t2 + d2) / (t2 - d2))
    N = params.n_cells
    r_0 = (r_b - N * (r_b - r_a)) / 2.0
    j = np.arange(1, N + 1, dtype=float)
    r = np.empty(2 * N)
    r[0::2] = (j - 1) * (r_b - r_a) + r_0
    r[1::2] = -j * (r_b - r_a) + r_b - r_0
    return SqueezeTransform(r_a=r_a, r_b=r_b, r_0=r_0, r=r)


def _open_blocks(params: ChainParams) -> tuple[NDArray, NDArray]:
    """Hermitian hopping block h and symmetric pairing block D of the open chain."""
    n = params.n_modes
    t2, d2 = params.t2, params.delta2
    h = np.zeros((n, n), dtype=complex)
    D = np.zeros((n, n), dtype=complex)
    for j in range(params.n_cells):
        a, b = 2 * j, 2 * j + 1
        h[a, b] += params.t1
        h[b, a] += np.conj(params.t1)
        D[a, b] += params.delta1
        D[b, a] += params.delta1
    for j in range(params.n_cells - 1):
        a, b = 2 * j + 2, 2 * j + 1  # intercell: site 2j+3 couples back to 2j+2 (1-based)
        h[a, b] += t2
        h[b, a] += np.conj(t2)
        D[a, b] += d2
        D[b, a] += d2
    h += params.mu * np.eye(n)
    return h, D


def build_bdg(params: ChainParams, boundary: str = "open", k: float = 0.0) -> BdgMatrix:
    """Doubled-basis matrix H_M for the open chain or a single Bloch momentum.

    Parameters
    ----------
    boundary : "open" for the 4N x 4N real-space matrix, "periodic_at_k" for
        the 4x4 Bloch block at momentum ``k``.

    The hole block is the complex conjugate of the particle block (+mu on both
    diagonals); the dynamical matrix tau_z H_M then carries -mu in the hole rows.
    """
    if boundary == "open":
        h, D = _open_blocks(params)
        HM = np.block([[h, D], [D.conj(), h.conj()]])
    elif boundary == "periodic_at_k":
        # Bloch basis (a_{A,k}, a_{B,k}, a+_{A,-k}, a+_{B,-k}): the pairing
        # block couples k with -k and is NOT symmetric at generic k, so the
        # block layout is [[h(k), P(k)], [P(k)+, h(-k)*]].
        t1, mu = params.t1, params.mu
        t2, d1, d2 = params.t2, params.delta1, params.delta2
        f_t = t1 + t2 * cmath.exp(-1j * k)      # hopping form factor
        g_t = t1 + t2 * cmath.exp(+1j * k)
        f_d = d1 + d2 * cmath.exp(-1j * k)      # pairing form factor
        g_d = d1 + d2 * cmath.exp(+1j * k)
        hk = np.array([[mu, f_t], [np.conj(f_t), mu]])
        hmk_c = np.array([[mu, np.conj(g_t)], [g_t, mu]])
        P = np.array([[0.0, f_d], [g_d, 0.0]])
        HM = np.block([[hk, P], [P.conj().T, hmk_c]])
    else:
        raise ValueError(f"unknown boundary {boundary!r}")
    n = HM.shape[0] // 2
    tau_z = np.diag(np.concatenate([np.ones(n), -np.ones(n)]))
    return BdgMatrix(matrix=HM, tau_z=tau_z)


def build_coupling_matrix(params: ChainParams) -> NDArray[np.float64]:
    """Real symmetric tridiagonal coupling matrix S of the squeezed-frame chain.

    Off-diagonals alternate t1', t2', t1', ...; each carries the sign of the
    original coupling (negative at phase pi), which is what the symplectic
    rescaling actually produces and what the Langevin sums require.
    """
    t1p, t2p = effective_couplings(params)
    s1, s2 = coupling_signs(params)
    n = params.n_modes
    off = np.empty(n - 1)
    off[0::2] = s1 * t1p
    off[1::2] = s2 * t2p
    return np.diag(off, 1) + np.diag(off, -1)
